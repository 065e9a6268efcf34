"""
Módulo con el corpus fijo de grupos sobre el que se comprueban las propiedades.

El corpus contiene los grupos cíclicos hasta orden 24, H₃, hol(7), hol(9), los diedrales Z/n ⋊ Z/2 para
n ≤ 12, W y tres cocientes de W (por W^{*2}, W^{*3} y W'). Los grupos se construyen una sola vez por
proceso.

Funciones:
    - corpus(cota_orden) -> List[Grupo]
    - descriptores_corpus() -> List[str]
    - grupo_w() -> Grupo
"""

import functools
from typing import List, Optional

from construcciones.especificacion import construir_grupo
from construcciones.grupo_w import construir_w
from grupos_finitos.cociente import GrupoCociente
from grupos_finitos.grupo import Grupo
from grupos_finitos.series import conmutador_de_subgrupos, subgrupo_potencia, subgrupo_total


def descriptores_corpus() -> List[str]:
    return ([f'Z({n})' for n in range(1, 25)] + ['heis3', 'hol(7)', 'hol(9)'] +
            [f'sd(Z({n}),Z(2);-1)' for n in range(3, 13)])


@functools.lru_cache(maxsize=1)
def grupo_w() -> Grupo:
    return construir_w()


@functools.lru_cache(maxsize=1)
def _cocientes_de_w() -> List[Grupo]:
    W = grupo_w()
    total = subgrupo_total(W)
    return [GrupoCociente(W, N) for N in (subgrupo_potencia(W, 2), subgrupo_potencia(W, 3),
                                          conmutador_de_subgrupos(total, total))]


@functools.lru_cache(maxsize=1)
def _grupos_pequenyos() -> List[Grupo]:
    return [construir_grupo(d) for d in descriptores_corpus()]


def corpus(cota_orden: Optional[int] = None) -> List[Grupo]:
    """
    Retorna el corpus de grupos, opcionalmente restringido a los de orden menor o igual que la cota.

    Parámetros:
    -----------
    cota_orden : Optional[int]
        Orden máximo; None incluye W y sus cocientes.

    Retorna:
    --------
    List[Grupo]
        Los grupos del corpus, en orden fijo.
    """
    grupos = list(_grupos_pequenyos())
    if cota_orden is None:
        grupos += [grupo_w()] + list(_cocientes_de_w())
    else:
        grupos = [G for G in grupos if G.orden <= cota_orden]
        grupos += [Q for Q in _cocientes_de_w() if Q.orden <= cota_orden]
    return grupos
