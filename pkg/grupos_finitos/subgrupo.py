"""
Módulo para la representación de subgrupos de un grupo finito.

Un subgrupo guarda su conjunto de miembros materializado (ordenado por codificación), sus generadores y una
referencia al grupo ambiente, que es quien multiplica. Opcionalmente guarda, para cada generador, el árbol
de conmutadores del que procede (`Conmutador`), lo que permite reconstruir testigos de leyes a partir de
los términos de las series derivada y central inferior.

Clases:
    - Conmutador
    - Subgrupo
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Optional, Tuple, Union

from grupos_finitos.grupo import Elemento, Grupo


@dataclass(frozen=True)
class Conmutador:
    """
    Árbol de conmutadores [izquierda, derecha] cuyas hojas son elementos del grupo ambiente.
    """
    izquierda: Any
    derecha: Any

    def valor(self, grupo: Grupo) -> Elemento:
        return grupo.conmutador(_valor(self.izquierda, grupo), _valor(self.derecha, grupo))

    def conjugar(self, grupo: Grupo, c: Elemento) -> 'Conmutador':
        """
        Retorna el árbol de [u, v]^c = [u^c, v^c], conjugando todas las hojas.
        """
        return Conmutador(_conjugar(self.izquierda, grupo, c), _conjugar(self.derecha, grupo, c))

    def hojas(self) -> Tuple[Elemento, ...]:
        return _hojas(self.izquierda) + _hojas(self.derecha)


Arbol = Union[Conmutador, Elemento]


def _valor(arbol: Arbol, grupo: Grupo) -> Elemento:
    return arbol.valor(grupo) if isinstance(arbol, Conmutador) else arbol


def _conjugar(arbol: Arbol, grupo: Grupo, c: Elemento) -> Arbol:
    return arbol.conjugar(grupo, c) if isinstance(arbol, Conmutador) else grupo.conjugado(arbol, c)


def _hojas(arbol: Arbol) -> Tuple[Elemento, ...]:
    return arbol.hojas() if isinstance(arbol, Conmutador) else (arbol,)


class Subgrupo(Grupo):
    """
    Clase que representa un subgrupo de un grupo finito.

    Atributos:
    ----------
    ambiente : Grupo
        Grupo en el que vive el subgrupo.
    elementos : Tuple[Elemento, ...]
        Miembros del subgrupo, ordenados por codificación.
    generadores : Tuple[Elemento, ...]
        Generadores del subgrupo.
    testigos : Dict[Elemento, Conmutador]
        Árbol de conmutadores de cada generador, si el subgrupo procede de un conmutador de subgrupos.

    Métodos:
    --------
    es_trivial() -> bool:
        Indica si el subgrupo es {e}.
    es_subconjunto_de(otro) -> bool:
        Indica si todos los miembros están en `otro`.
    """

    def __init__(self, ambiente: Grupo, generadores: Iterable[Elemento], miembros: Iterable[Elemento],
                 testigos: Optional[Dict[Elemento, Conmutador]] = None) -> None:
        """
        Inicializa el subgrupo. No se comprueba el cierre: los subgrupos se construyen desde
        `grupos_finitos.series.clausura` y funciones afines.

        Parámetros:
        -----------
        ambiente : Grupo
            Grupo ambiente.
        generadores : Iterable[Elemento]
            Generadores del subgrupo.
        miembros : Iterable[Elemento]
            Todos los elementos del subgrupo.
        testigos : Optional[Dict[Elemento, Conmutador]]
            Árboles de conmutadores de los generadores.
        """
        ambiente = ambiente.ambiente
        super().__init__(f'subgrupo de {ambiente.descriptor}', ambiente.identidad, generadores)
        self.__ambiente = ambiente
        self.__miembros = tuple(sorted(miembros))
        self.__testigos = dict(testigos or {})

    @property
    def ambiente(self) -> Grupo:
        return self.__ambiente

    @property
    def elementos(self) -> Tuple[Elemento, ...]:
        return self.__miembros

    @property
    def testigos(self) -> Dict[Elemento, Conmutador]:
        return self.__testigos

    def operar(self, g: Elemento, h: Elemento) -> Elemento:
        return self.__ambiente.operar(g, h)

    def inverso(self, g: Elemento) -> Elemento:
        return self.__ambiente.inverso(g)

    def es_trivial(self) -> bool:
        return len(self.__miembros) == 1

    def es_subconjunto_de(self, otro: Grupo) -> bool:
        return all(otro.contiene(g) for g in self.__miembros)

    def __eq__(self, otro: object) -> bool:
        if not isinstance(otro, Subgrupo):
            return NotImplemented
        return self.__ambiente is otro.ambiente and self.__miembros == otro.elementos

    def __hash__(self) -> int:
        return hash(self.__miembros)

    def __str__(self) -> str:
        return f'Subgrupo de orden {self.orden} de {self.__ambiente.descriptor}'
