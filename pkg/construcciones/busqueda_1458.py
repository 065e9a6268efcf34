"""
Módulo con la búsqueda de un grupo de orden 1458 = 2 · 3⁶ con la propiedad de W.

Se buscan acciones ψ: H₃ × Z/2 → Aut(Z/3 × Z/9) tales que el producto semidirecto tenga longitud derivada 3
y subgrupos potencia G^{*2} y G^{*3} metabelianos. Los automorfismos de Z/3 × Z/9 se enumeran por fuerza
bruta sobre las imágenes de los generadores; las ternas (X, Y, T) se recorren en orden lexicográfico de
esas imágenes, se filtran con las relaciones de H₃ × Z/2 (X³ = Y³ = 1, Z = [X, Y] central y no trivial,
T² = 1 central) y se descarta cada terna conjugada en Aut(Z/3 × Z/9) de otra ya examinada, porque da un
grupo isomorfo.

La variante restringida recorre sólo las acciones inducidas por la de W sobre las secciones de orden 27 de
(Z/9)² invariantes por X, Y y T (subgrupos y cocientes).

Funciones:
    - automorfismos(N) -> List[Tuple]
    - cumple_propiedad(G) -> bool
    - buscar_contraejemplo_1458(paralelismo, solo_secciones_de_w) -> ProductoSemidirecto

Excepciones:
    - NoEncontradoError: Error personalizado para búsquedas agotadas.
"""

import itertools
import logging
import multiprocessing
from typing import Iterator, List, Optional, Tuple

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3, ProductoDirecto
from construcciones.grupo_w import construir_w
from construcciones.no_encontrado_error import NoEncontradoError
from construcciones.semidirecto import EspecificacionAccion, ProductoSemidirecto, extender_homomorfismo
from grupos_finitos.cociente import GrupoCociente
from grupos_finitos.grupo import Grupo
from grupos_finitos.series import clausura, longitud_derivada, subgrupo_potencia

logger = logging.getLogger(__name__)

Tabla = Tuple[int, ...]


def _grupo_actuante() -> ProductoDirecto:
    return ProductoDirecto([GrupoHeisenberg3(), GrupoCiclico(2)])


def automorfismos(N: Grupo) -> List[Tuple[Tuple, Tabla]]:
    """
    Enumera Aut(N) por fuerza bruta sobre las imágenes de los generadores.

    Parámetros:
    -----------
    N : Grupo
        Grupo finito (en la búsqueda, Z/3 × Z/9).

    Retorna:
    --------
    List[Tuple[Tuple, Tabla]]
        Pares (imágenes de los generadores, tabla de índices), en orden lexicográfico de las imágenes.
    """
    resultado = []
    for imagenes in itertools.product(N.elementos, repeat=len(N.generadores)):
        f = extender_homomorfismo(N, imagenes, N.operar, N.identidad)
        if f is not None and len(set(f.values())) == N.orden:
            resultado.append((imagenes, tuple(N.indice(f[n]) for n in N.elementos)))
    return resultado


def _componer(alfa: Tabla, beta: Tabla) -> Tabla:
    return tuple(alfa[j] for j in beta)


def _inversa(alfa: Tabla) -> Tabla:
    inversa = [0] * len(alfa)
    for i, j in enumerate(alfa):
        inversa[j] = i
    return tuple(inversa)


def cumple_propiedad(G: Grupo) -> bool:
    """
    Indica si G tiene longitud derivada 3 y subgrupos potencia G^{*2} y G^{*3} metabelianos.
    """
    if longitud_derivada(G) != 3:
        return False
    return all(longitud_derivada(subgrupo_potencia(G, m)) <= 2 for m in (2, 3))


def _matriz(imagenes: Tuple) -> str:
    (a, c), (b, d) = imagenes
    return f'[[{a},{b}],[{c},{d}]]'


def _construir(imagenes: Tuple[Tuple, Tuple, Tuple]) -> ProductoSemidirecto:
    N = ProductoDirecto([GrupoCiclico(3), GrupoCiclico(9)])
    K = _grupo_actuante()
    accion = EspecificacionAccion(imagenes, ['x', 'y', 't'])
    descriptor = (f'sd(prod(Z(3),Z(9)),prod(heis3,Z(2));'
                  f'x={_matriz(imagenes[0])},y={_matriz(imagenes[1])},t={_matriz(imagenes[2])})')
    return ProductoSemidirecto(N, K, accion, descriptor)


def _evaluar(imagenes: Tuple[Tuple, Tuple, Tuple]) -> Optional[ProductoSemidirecto]:
    G = _construir(imagenes)
    return G if cumple_propiedad(G) else None


def candidatos() -> Iterator[Tuple[Tuple, Tuple, Tuple]]:
    """
    Genera las ternas de imágenes (X, Y, T) que cumplen las relaciones de H₃ × Z/2, en orden
    lexicográfico y sin repetir clases de conjugación en Aut(Z/3 × Z/9).
    """
    N = ProductoDirecto([GrupoCiclico(3), GrupoCiclico(9)])
    auts = automorfismos(N)
    identidad = tuple(range(N.orden))
    logger.info('|Aut(%s)| = %d', N.descriptor, len(auts))
    orden3 = [(i, t) for i, t in auts if _componer(t, _componer(t, t)) == identidad]
    involuciones = [(i, t) for i, t in auts if _componer(t, t) == identidad]
    conjugadores = [(t, _inversa(t)) for _, t in auts]
    vistos = set()
    for ix, x in orden3:
        for iy, y in orden3:
            z = _componer(_componer(_inversa(x), _inversa(y)), _componer(x, y))
            if z == identidad or _componer(z, x) != _componer(x, z) or _componer(z, y) != _componer(y, z):
                continue
            for it, t in involuciones:
                if _componer(t, x) != _componer(x, t) or _componer(t, y) != _componer(y, t):
                    continue
                clave = min(tuple(_componer(s_inv, _componer(a, s)) for a in (x, y, t))
                            for s, s_inv in conjugadores)
                if clave in vistos:
                    continue
                vistos.add(clave)
                yield ix, iy, it


def _secciones_de_w() -> Iterator[Tuple[Grupo, EspecificacionAccion]]:
    W = construir_w()
    N = W.normal
    K = W.complemento
    subgrupos = {}
    for u in N.elementos:
        for v in N.elementos:
            if u <= v:
                S = clausura(N, [u, v])
                if S.orden == 27:
                    subgrupos.setdefault(S.elementos, S)
    for S in subgrupos.values():
        if not all(S.contiene(W.actuar(k, s)) for k in K.generadores for s in S.generadores):
            continue
        yield S, EspecificacionAccion([[W.actuar(k, s) for s in S.generadores] for k in K.generadores],
                                      ['x', 'y', 't'])
        Q = GrupoCociente(N, S)
        yield Q, EspecificacionAccion([[Q.proyectar(W.actuar(k, q)) for q in Q.generadores]
                                       for k in K.generadores], ['x', 'y', 't'])


def buscar_contraejemplo_1458(paralelismo: int = 1, solo_secciones_de_w: bool = False) -> ProductoSemidirecto:
    """
    Busca un grupo de orden 1458 no metabeliano con subgrupos potencia coprimos metabelianos.

    Parámetros:
    -----------
    paralelismo : int
        Número de procesos para evaluar candidatos; el resultado no depende de él.
    solo_secciones_de_w : bool
        Si es True, sólo se prueban las acciones inducidas por W en sus secciones de orden 27.

    Retorna:
    --------
    ProductoSemidirecto
        El primer grupo encontrado en orden lexicográfico de candidatos.

    Excepciones:
    ------------
    NoEncontradoError
        Si ningún candidato tiene la propiedad.
    """
    if solo_secciones_de_w:
        examinados = 0
        K = _grupo_actuante()
        for seccion, accion in _secciones_de_w():
            examinados += 1
            G = ProductoSemidirecto(seccion, K, accion, f'sd(sección de W de orden {seccion.orden},{K.descriptor})')
            if cumple_propiedad(G):
                return G
        raise NoEncontradoError('una acción inducida por W con la propiedad', examinados)

    lista = list(candidatos())
    logger.info('Búsqueda de orden 1458: %d candidatos', len(lista))
    if paralelismo > 1:
        with multiprocessing.Pool(paralelismo) as pool:
            for i, G in enumerate(pool.imap(_evaluar, lista, chunksize=4)):
                if G is not None:
                    logger.info('Candidato %d de %d: %s', i + 1, len(lista), G.descriptor)
                    pool.terminate()
                    return G
    else:
        for i, imagenes in enumerate(lista):
            G = _evaluar(imagenes)
            logger.debug('Candidato %d: %s', i + 1, 'descartado' if G is None else 'aceptado')
            if G is not None:
                return G
    raise NoEncontradoError('un grupo de orden 1458 con la propiedad', len(lista))
