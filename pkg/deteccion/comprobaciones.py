"""
Módulo con las comprobaciones de detectabilidad de la clase de nilpotencia, la cota de Fitting y la búsqueda
de testigos de que cinco de los seis relatores de potencias no bastan.

Clases:
    - TestigoTruncamiento

Funciones:
    - comprobar_detectabilidad_clase(G, m, n) -> bool
    - comprobar_fitting(G, M, N) -> bool
    - orden_permutacion(p) -> int
    - testigo_truncamiento(m, n, cota) -> TestigoTruncamiento

Excepciones:
    - NoNilpotenteError: Error personalizado para grupos no nilpotentes.
    - PrecondicionVioladaError: Error personalizado para subgrupos no normales o no nilpotentes.
    - BusquedaAgotadaError: Error personalizado para búsquedas sin testigo.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from typing import List, Tuple

from sympy.combinatorics import Permutation

from construcciones.basicas import GrupoPermutaciones
from deteccion.busqueda_agotada_error import BusquedaAgotadaError
from deteccion.no_nilpotente_error import NoNilpotenteError
from deteccion.precondicion_violada_error import PrecondicionVioladaError
from grupos_finitos.grupo import Grupo
from grupos_finitos.series import clase_nilpotencia, clausura, es_normal, subgrupo_potencia
from grupos_libres.no_coprimos_error import NoCoprimosError

logger = logging.getLogger(__name__)

Permutacion = Tuple[int, ...]


def comprobar_detectabilidad_clase(G: Grupo, m: int, n: int) -> bool:
    """
    Comprueba que la clase de nilpotencia de G es el máximo de las clases de G^{*m} y G^{*n}.

    Parámetros:
    -----------
    G : Grupo
        Grupo finito nilpotente.
    m, n : int
        Exponentes coprimos.

    Retorna:
    --------
    bool
        True si clase(G) = max(clase(G^{*m}), clase(G^{*n})).

    Excepciones:
    ------------
    NoNilpotenteError
        Si G no es nilpotente.
    NoCoprimosError
        Si m y n no son coprimos.
    """
    if math.gcd(m, n) != 1:
        raise NoCoprimosError(m, n)
    clase = clase_nilpotencia(G)
    if clase is None:
        raise NoNilpotenteError(G.descriptor)
    clase_m = clase_nilpotencia(subgrupo_potencia(G, m))
    clase_n = clase_nilpotencia(subgrupo_potencia(G, n))
    logger.debug('Clases de %s, potencia %d y potencia %d: %s, %s, %s', G.descriptor, m, n, clase, clase_m, clase_n)
    return clase == max(clase_m, clase_n)


def comprobar_fitting(G: Grupo, M: Grupo, N: Grupo) -> bool:
    """
    Comprueba la cota de Fitting: el producto de dos subgrupos normales nilpotentes M y N tiene clase a lo
    sumo clase(M) + clase(N).

    Parámetros:
    -----------
    G : Grupo
        Grupo ambiente.
    M, N : Grupo
        Subgrupos normales nilpotentes de G.

    Retorna:
    --------
    bool
        True si clase(MN) ≤ clase(M) + clase(N).

    Excepciones:
    ------------
    PrecondicionVioladaError
        Si M o N no son normales en G o no son nilpotentes.
    """
    clases = []
    for nombre, H in (('M', M), ('N', N)):
        if not es_normal(G, H):
            raise PrecondicionVioladaError(f'{nombre} no es normal en {G.descriptor}')
        clase = clase_nilpotencia(H)
        if clase is None:
            raise PrecondicionVioladaError(f'{nombre} no es nilpotente')
        clases.append(clase)
    producto = clausura(G, list(M.generadores) + list(N.generadores))
    clase_producto = clase_nilpotencia(producto)
    return clase_producto is not None and clase_producto <= sum(clases)


def orden_permutacion(p: Permutacion) -> int:
    """
    Orden de una permutación en forma de lista.
    """
    return int(Permutation(list(p)).order())


@dataclass(frozen=True)
class TestigoTruncamiento:
    """
    Testigo de que la presentación sin el relator [b^n, (ab)^n] no define un grupo abeliano: un grupo de
    permutaciones no abeliano generado por a de orden n y b de orden m con ab de orden m.
    """
    grupo: GrupoPermutaciones
    a: Permutacion
    b: Permutacion

    def to_dict(self) -> dict:
        G = self.grupo
        return {
            'degree': G.grado,
            'a': list(self.a),
            'b': list(self.b),
            'order': G.orden,
            'orders': [orden_permutacion(self.a), orden_permutacion(self.b),
                       orden_permutacion(G.operar(self.a, self.b))],
        }


def testigo_truncamiento(m: int, n: int, cota: int) -> TestigoTruncamiento:
    """
    Busca permutaciones a, b de grado ≤ cota con orden(a) = n, orden(b) = m, orden(ab) = m y ab ≠ ba.

    Parámetros:
    -----------
    m, n : int
        Exponentes (m, n ≥ 2).
    cota : int
        Grado máximo de las permutaciones.

    Retorna:
    --------
    TestigoTruncamiento
        El primer testigo en orden de grado y, dentro de cada grado, lexicográfico en (a, b).

    Excepciones:
    ------------
    BusquedaAgotadaError
        Si no hay testigo en grado ≤ cota.
    """
    if m < 2 or n < 2:
        raise ValueError(f'Los exponentes deben ser al menos 2 y son {m} y {n}')
    for grado in range(1, cota + 1):
        permutaciones = [Permutation(list(p)) for p in itertools.permutations(range(grado))]
        candidatos_a: List[Permutation] = [p for p in permutaciones if p.order() == n]
        candidatos_b: List[Permutation] = [p for p in permutaciones if p.order() == m]
        for a, b in itertools.product(candidatos_a, candidatos_b):
            ab = a * b
            if ab != b * a and ab.order() == m:
                forma_a, forma_b = tuple(a.array_form), tuple(b.array_form)
                G = GrupoPermutaciones(grado, [forma_a, forma_b])
                logger.info('Testigo de grado %d: a = %s, b = %s, orden %d', grado, forma_a, forma_b, G.orden)
                return TestigoTruncamiento(G, forma_a, forma_b)
    raise BusquedaAgotadaError(m, n, cota)
