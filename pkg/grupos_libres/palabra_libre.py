"""
Módulo con las palabras de grupos libres.

Las palabras son elementos de `sympy.combinatorics.free_groups`, que se mantienen siempre libremente
reducidos. Este módulo añade la lectura en la gramática de palabras, la escritura con la misma sintaxis,
la sustitución homomorfa y la conjugación en el grupo libre.

Funciones:
    - grupo_libre(alfabeto) -> FreeGroup
    - nombres(F) -> Tuple[str, ...]
    - generador(F, nombre) -> PalabraLibre
    - palabra(texto, F) -> PalabraLibre
    - letras(w) -> List[Tuple[str, int]]
    - texto(w) -> str
    - conmutador(u, v) -> PalabraLibre
    - conjugar(w, c) -> PalabraLibre
    - aplicar_sustitucion(w, mapa, F) -> PalabraLibre
    - reduccion_ciclica(w) -> List[Tuple[str, int]]
    - son_conjugadas(u, v) -> bool
    - suma_exponentes(w, nombre) -> int
    - palabras_reducidas(F, longitud) -> List[PalabraLibre]
    - evaluar_palabra(w, G, imagenes) -> Elemento
"""

import operator
from typing import Dict, List, Mapping, Sequence, Tuple

from sympy.combinatorics.free_groups import FreeGroup, FreeGroupElement, free_group

from leyes.analizador import analizar_palabra
from leyes.ley import evaluar_arbol

PalabraLibre = FreeGroupElement
Letra = Tuple[str, int]


def grupo_libre(alfabeto: Sequence[str]) -> FreeGroup:
    """
    Retorna el grupo libre sobre las letras dadas, en ese orden.

    Parámetros:
    -----------
    alfabeto : Sequence[str]
        Nombres de las letras, por ejemplo ['a', 'b', 'x', 'y', 'z'].

    Retorna:
    --------
    FreeGroup
        El grupo libre.

    Excepciones:
    ------------
    ValueError
        Si el alfabeto está vacío o repite letras.
    """
    if not alfabeto or len(set(alfabeto)) != len(alfabeto):
        raise ValueError(f'Alfabeto no válido: {" ".join(alfabeto)}')
    F, *_ = free_group(' '.join(alfabeto))
    return F


def nombres(F: FreeGroup) -> Tuple[str, ...]:
    return tuple(str(s) for s in F.symbols)


def _generadores(F: FreeGroup) -> Dict[str, PalabraLibre]:
    return dict(zip(nombres(F), F.generators))


def generador(F: FreeGroup, nombre: str) -> PalabraLibre:
    return _generadores(F)[nombre]


def palabra(texto_palabra: str, F: FreeGroup) -> PalabraLibre:
    """
    Lee una palabra de F escrita en la gramática de palabras ("a b^-1", "[a x, b y]", "z^a", "1").

    Parámetros:
    -----------
    texto_palabra : str
        Texto de la palabra.
    F : FreeGroup
        Grupo libre cuyas letras forman el alfabeto admitido.

    Retorna:
    --------
    PalabraLibre
        La palabra, libremente reducida.

    Excepciones:
    ------------
    SintaxisInvalidaError
        Si el texto no se ajusta a la gramática o usa letras fuera del alfabeto.
    """
    generadores = _generadores(F)
    arbol = analizar_palabra(texto_palabra, generadores)
    return evaluar_arbol(arbol, lambda v: generadores[v.nombre], operator.mul, lambda g: g ** -1, F.identity)


def letras(w: PalabraLibre) -> List[Letra]:
    """
    Descompone una palabra en letras (nombre, ±1).
    """
    resultado = []
    for simbolo, exponente in w.array_form:
        resultado.extend([(str(simbolo), 1 if exponente > 0 else -1)] * abs(exponente))
    return resultado


def texto(w: PalabraLibre) -> str:
    """
    Escribe una palabra en la gramática de palabras: "1" para la vacía y "a^2 b^-1 a" en otro caso.
    """
    if w.is_identity:
        return '1'
    return ' '.join(str(s) if e == 1 else f'{s}^{e}' for s, e in w.array_form)


def conmutador(u: PalabraLibre, v: PalabraLibre) -> PalabraLibre:
    return u ** -1 * v ** -1 * u * v


def conjugar(w: PalabraLibre, c: PalabraLibre) -> PalabraLibre:
    # w^c = c⁻¹ w c
    return c ** -1 * w * c


def aplicar_sustitucion(w: PalabraLibre, mapa: Mapping[str, PalabraLibre], F: FreeGroup) -> PalabraLibre:
    """
    Aplica la sustitución homomorfa letra ↦ palabra y reduce el resultado.

    Parámetros:
    -----------
    w : PalabraLibre
        Palabra de partida.
    mapa : Mapping[str, PalabraLibre]
        Imagen de cada letra de w.
    F : FreeGroup
        Grupo libre de llegada.

    Retorna:
    --------
    PalabraLibre
        La imagen de w, libremente reducida.

    Excepciones:
    ------------
    ValueError
        Si alguna letra de w no tiene imagen.
    """
    resultado = F.identity
    for simbolo, exponente in w.array_form:
        nombre = str(simbolo)
        if nombre not in mapa:
            raise ValueError(f'La sustitución no define la imagen de la letra {nombre}')
        resultado = resultado * mapa[nombre] ** exponente
    return resultado


def reduccion_ciclica(w: PalabraLibre) -> List[Letra]:
    """
    Retorna las letras de la reducción cíclica de w (se eliminan las cancelaciones entre el principio y el
    final).
    """
    return letras(w.cyclic_reduction())


def son_conjugadas(u: PalabraLibre, v: PalabraLibre, admitir_inverso: bool = False) -> bool:
    """
    Indica si u y v son conjugadas en el grupo libre: sus reducciones cíclicas son rotaciones una de otra.

    Parámetros:
    -----------
    u, v : PalabraLibre
        Palabras del mismo grupo libre.
    admitir_inverso : bool
        Si es True, también se acepta que u sea conjugada de v⁻¹.

    Retorna:
    --------
    bool
        True si son conjugadas.
    """
    ru = u.cyclic_reduction()
    if ru.is_cyclic_conjugate(v.cyclic_reduction()):
        return True
    return admitir_inverso and ru.is_cyclic_conjugate((v ** -1).cyclic_reduction())


def suma_exponentes(w: PalabraLibre, nombre: str) -> int:
    return sum(e for s, e in w.array_form if str(s) == nombre)


def palabras_reducidas(F: FreeGroup, longitud: int) -> List[PalabraLibre]:
    """
    Enumera las palabras reducidas de F de longitud menor o igual que la dada, por longitud y en orden de
    alfabeto (cada letra seguida de su inversa).
    """
    letras_f = [(g, s) for g in F.generators for s in (1, -1)]
    capa: List[List[Tuple[PalabraLibre, int]]] = [[(F.identity, -1)]]
    for _ in range(longitud):
        siguiente = []
        for w, ultima in capa[-1]:
            for i, (g, s) in enumerate(letras_f):
                if ultima >= 0 and i == ultima ^ 1:
                    continue
                siguiente.append((w * g ** s, i))
        capa.append(siguiente)
    return [w for nivel in capa for w, _ in nivel]


def evaluar_palabra(w: PalabraLibre, G, imagenes: Mapping[str, object]):
    """
    Evalúa una palabra en un grupo finito asignando a cada letra un elemento.

    Parámetros:
    -----------
    w : PalabraLibre
        Palabra a evaluar.
    G : Grupo
        Grupo finito de llegada.
    imagenes : Mapping[str, Elemento]
        Elemento asignado a cada letra.

    Retorna:
    --------
    Elemento
        El valor de w en G.
    """
    resultado = G.identidad
    for simbolo, exponente in w.array_form:
        resultado = G.operar(resultado, G.potencia(imagenes[str(simbolo)], exponente))
    return resultado
