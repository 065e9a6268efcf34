"""
Módulo para grupos cociente.

Clases:
    - GrupoCociente

Funciones:
    - cociente(G, N) -> Tuple[GrupoCociente, Callable]

Excepciones:
    - NoNormalError: Error personalizado para cocientes por subgrupos no normales.
"""

from typing import Callable, Dict, Tuple

from grupos_finitos.grupo import Elemento, Grupo
from grupos_finitos.no_normal_error import NoNormalError
from grupos_finitos.series import es_normal


class GrupoCociente(Grupo):
    """
    Clase que representa el cociente G/N de un grupo finito por un subgrupo normal.

    Cada clase lateral gN se codifica por su miembro mínimo. El producto de dos clases se calcula
    multiplicando los representantes en G y proyectando.

    Atributos:
    ----------
    grupo : Grupo
        Grupo G que se cocienta.
    normal : Grupo
        Subgrupo normal N.

    Métodos:
    --------
    proyectar(g) -> Elemento:
        Proyección canónica G → G/N.
    """

    def __init__(self, G: Grupo, N: Grupo) -> None:
        representantes: Dict[Elemento, Elemento] = {}
        for g in G.elementos:
            if g in representantes:
                continue
            clase = [G.operar(g, n) for n in N.elementos]
            minimo = min(clase)
            for h in clase:
                representantes[h] = minimo
        self.__grupo = G
        self.__normal = N
        self.__representantes = representantes
        super().__init__(f'cociente({G.descriptor}; orden {N.orden})', representantes[G.identidad],
                         [representantes[g] for g in G.generadores])

    @property
    def grupo(self) -> Grupo:
        return self.__grupo

    @property
    def normal(self) -> Grupo:
        return self.__normal

    def proyectar(self, g: Elemento) -> Elemento:
        return self.__representantes[g]

    def operar(self, g: Elemento, h: Elemento) -> Elemento:
        return self.__representantes[self.__grupo.operar(g, h)]

    def inverso(self, g: Elemento) -> Elemento:
        return self.__representantes[self.__grupo.inverso(g)]


def cociente(G: Grupo, N: Grupo) -> Tuple[GrupoCociente, Callable[[Elemento], Elemento]]:
    """
    Construye el cociente G/N junto con su proyección.

    Parámetros:
    -----------
    G : Grupo
        Grupo (o subgrupo) a cocientar.
    N : Grupo
        Subgrupo normal de G.

    Retorna:
    --------
    Tuple[GrupoCociente, Callable]
        El grupo cociente y la proyección canónica.

    Excepciones:
    ------------
    NoNormalError
        Si N no es normal en G.
    """
    if not es_normal(G, N):
        raise NoNormalError(G.descriptor, N.orden)
    Q = GrupoCociente(G, N)
    return Q, Q.proyectar
