"""
Módulo con las presentaciones de grupos por generadores y relatores.

Clases:
    - Presentacion

Funciones:
    - gamma_presentacion() -> Presentacion
    - presentacion_potencias(m, n) -> Presentacion
    - presentacion_cuatro_relatores(m, n) -> Presentacion
    - relatores_potencias(k, F) -> List[PalabraLibre]
"""

from typing import List, Sequence, Tuple, Union

from grupos_libres.palabra_libre import PalabraLibre, grupo_libre, nombres, palabra, texto

ALFABETO_GAMMA = ('a', 'b', 'x', 'y', 'z')

# Relatores del grupo Γ, común extensión de los grupos presentados por relatores de potencias.
RELATORES_GAMMA = ('[a, x]', '[b, y]', '[a b, z]', '[x, y]', '[x, z]', '[y, z]',
                   '[a x, b y]', '[a x, a b z]', '[b y, a b z]')


class Presentacion:
    """
    Clase que representa una presentación ⟨alfabeto | relatores⟩.

    Atributos:
    ----------
    alfabeto : Tuple[str, ...]
        Letras generadoras.
    relatores : Tuple[PalabraLibre, ...]
        Relatores reducidos y no vacíos.
    grupo : FreeGroup
        Grupo libre sobre el alfabeto.

    Métodos:
    --------
    relator(i) -> PalabraLibre:
        Relator de índice i.
    ampliar(relatores) -> Presentacion:
        Nueva presentación con relatores añadidos al final.
    to_dict() -> dict:
        Convierte la presentación a un diccionario.
    """

    def __init__(self, alfabeto: Sequence[str], relatores: Sequence[Union[str, PalabraLibre]]) -> None:
        """
        Inicializa la presentación.

        Parámetros:
        -----------
        alfabeto : Sequence[str]
            Letras generadoras.
        relatores : Sequence[Union[str, PalabraLibre]]
            Relatores como texto en la gramática de palabras o como palabras del grupo libre.

        Excepciones:
        ------------
        ValueError
            Si algún relator se reduce a la palabra vacía.
        SintaxisInvalidaError
            Si el texto de algún relator no es válido.
        """
        self.__grupo = grupo_libre(list(alfabeto))
        self.__alfabeto = nombres(self.__grupo)
        lista = []
        for r in relatores:
            w = palabra(r, self.__grupo) if isinstance(r, str) else self.__grupo.identity * r
            if w.is_identity:
                raise ValueError(f'El relator {r} se reduce a la palabra vacía')
            lista.append(w)
        self.__relatores = tuple(lista)

    @property
    def alfabeto(self) -> Tuple[str, ...]:
        return self.__alfabeto

    @property
    def relatores(self) -> Tuple[PalabraLibre, ...]:
        return self.__relatores

    @property
    def grupo(self):
        return self.__grupo

    def relator(self, i: int) -> PalabraLibre:
        return self.__relatores[i]

    def palabra(self, texto_palabra: str) -> PalabraLibre:
        return palabra(texto_palabra, self.__grupo)

    def ampliar(self, relatores: Sequence[Union[str, PalabraLibre]]) -> 'Presentacion':
        return Presentacion(self.__alfabeto, list(self.__relatores) + list(relatores))

    def __len__(self) -> int:
        return len(self.__relatores)

    def __eq__(self, otra: object) -> bool:
        if not isinstance(otra, Presentacion):
            return False
        return self.__alfabeto == otra.alfabeto and self.__relatores == otra.relatores

    def __hash__(self) -> int:
        return hash((self.__alfabeto, tuple(texto(r) for r in self.__relatores)))

    def __str__(self) -> str:
        return f'⟨{", ".join(self.__alfabeto)} | {", ".join(texto(r) for r in self.__relatores)}⟩'

    def to_dict(self) -> dict:
        return {
            'alphabet': list(self.__alfabeto),
            'relators': [texto(r) for r in self.__relatores],
        }


def gamma_presentacion() -> Presentacion:
    """
    Presentación del grupo Γ sobre a, b, x, y, z con sus nueve relatores conmutadores.
    """
    return Presentacion(ALFABETO_GAMMA, RELATORES_GAMMA)


def relatores_potencias(k: int, F) -> List[PalabraLibre]:
    """
    Retorna [a^k, b^k], [a^k, (ab)^k] y [b^k, (ab)^k] en el grupo libre F sobre a y b.
    """
    return [palabra(t, F) for t in (f'[a^{k}, b^{k}]', f'[a^{k}, (a b)^{k}]', f'[b^{k}, (a b)^{k}]')]


def presentacion_potencias(m: int, n: int) -> Presentacion:
    """
    Presentación de seis relatores sobre a y b: los conmutadores de las potencias m-ésimas y n-ésimas de
    a, b y ab. Para m y n coprimos presenta Z × Z.

    Parámetros:
    -----------
    m : int
        Primer exponente.
    n : int
        Segundo exponente.

    Retorna:
    --------
    Presentacion
        La presentación; los relatores triviales (exponente 0) se omiten.
    """
    F = grupo_libre(['a', 'b'])
    relatores = [r for k in (m, n) for r in relatores_potencias(k, F) if not r.is_identity]
    return Presentacion(['a', 'b'], relatores)


def presentacion_cuatro_relatores(m: int, n: int) -> Presentacion:
    """
    Presentación ⟨a, b | [a^m, b^m], [a^n, b^n], [(ab)^m, (ba)^m], [(ab)^n, (ba)^n]⟩.
    """
    return Presentacion(['a', 'b'], [f'[a^{k}, b^{k}]' for k in (m, n)] +
                        [f'[(a b)^{k}, (b a)^{k}]' for k in (m, n)])
