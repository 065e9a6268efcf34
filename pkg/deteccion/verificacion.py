"""
Módulo con la verificación completa: un conjunto de comprobaciones con nombre que reproducen los resultados
sobre W, los holomorfos, la tubería abeliana, el cociente de clase 2 y las propiedades del corpus.

Cada comprobación retorna el valor esperado y el obtenido; se supera cuando coinciden. Los fallos se anotan
en la tabla, nunca se propagan.

Clases:
    - FilaVerificacion

Funciones:
    - nombres_comprobaciones() -> List[str]
    - ejecutar_comprobacion(nombre) -> FilaVerificacion
    - verificar(seleccion, paralelismo) -> List[FilaVerificacion]
"""

import functools
import itertools
import logging
import math
import multiprocessing
import os
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple

from config import PARES_VERIFICACION, PATH_TRAZAS
from construcciones.basicas import GrupoHeisenberg3, GrupoMatricial, grupo_gl2
from construcciones.busqueda_1458 import buscar_contraejemplo_1458, cumple_propiedad
from construcciones.especificacion import construir_grupo
from construcciones.grupo_w import MATRIZ_T, MATRIZ_X, MATRIZ_Y, MATRIZ_Z, conmuta_con_z
from construcciones.no_encontrado_error import NoEncontradoError
from deteccion.comprobaciones import comprobar_detectabilidad_clase, comprobar_fitting, testigo_truncamiento
from deteccion.corpus import corpus, grupo_w
from deteccion.informe_deteccion import informe_deteccion
from grupos_finitos.cociente import GrupoCociente
from grupos_finitos.grupo import Grupo
from grupos_finitos.matriz2 import Matriz2
from grupos_finitos.series import (centralizador, clase_nilpotencia, clausura, exponente, longitud_derivada,
                                   orden_de, serie_central_inferior, serie_derivada, subgrupo_potencia)
from grupos_finitos.subgrupo import Subgrupo
from grupos_libres.abeliano import comprobar_conjunto_gamma, tuberia_abeliana
from grupos_libres.certificado import comprobar_certificado
from grupos_libres.ficheros import leer_certificado, leer_presentacion
from grupos_libres.malcev import IDENTIDAD, TripleMalcev, nq2_eval, nq2_orden_c
from grupos_libres.no_coprimos_error import NoCoprimosError
from grupos_libres.palabra_libre import conmutador, evaluar_palabra, grupo_libre, palabra, palabras_reducidas
from grupos_libres.presentacion import presentacion_potencias, relatores_potencias
from leyes.analizador import analizar_ley
from leyes.evaluacion import satisface
from leyes.leyes_notables import (ley_conmutativa, ley_metabeliana, palabra_burnside, palabra_engel,
                                  palabra_nilpotencia)

logger = logging.getLogger(__name__)

Comprobacion = Callable[[], Tuple[Any, Any]]


@dataclass(frozen=True)
class FilaVerificacion:
    """
    Fila de la tabla de verificación.

    Atributos:
    ----------
    nombre : str
        Nombre de la comprobación.
    superada : bool
        True si el valor obtenido coincide con el esperado.
    esperado, obtenido : Any
        Valores serializables en JSON.
    milisegundos : float
        Duración de la comprobación.
    """
    nombre: str
    superada: bool
    esperado: Any
    obtenido: Any
    milisegundos: float

    @property
    def estado(self) -> str:
        return 'pass' if self.superada else 'fail'

    def to_dict(self) -> dict:
        return {
            'name': self.nombre,
            'status': self.estado,
            'expected': self.esperado,
            'actual': self.obtenido,
            'millis': round(self.milisegundos, 3),
        }


def _filas(M: Matriz2) -> List[List[int]]:
    return [list(fila) for fila in M.filas()]


def _candidatos_normales(G: Grupo) -> List[Subgrupo]:
    # Subgrupos potencia y términos de las series: todos normales en G
    candidatos = [subgrupo_potencia(G, k) for k in range(1, 13)]
    candidatos += serie_derivada(G)[1:] + serie_central_inferior(G)[1:]
    unicos: Dict[Tuple, Subgrupo] = {}
    for H in candidatos:
        unicos.setdefault(H.elementos, H)
    return list(unicos.values())


def _pares_coprimos(cota: int) -> List[Tuple[int, int]]:
    return [(m, n) for m, n in itertools.combinations(range(2, cota + 1), 2) if math.gcd(m, n) == 1]


def _violaciones(descripciones: Iterable[str], nombre: str) -> int:
    lista = list(descripciones)
    for descripcion in lista[:5]:
        logger.info('%s: %s', nombre, descripcion)
    return len(lista)


def _orden_w() -> Tuple[Any, Any]:
    return 4374, grupo_w().orden


def _longitud_derivada_w() -> Tuple[Any, Any]:
    return 3, longitud_derivada(grupo_w())


def _potencia_w(k: int) -> Tuple[Any, Any]:
    potencia = subgrupo_potencia(grupo_w(), k)
    esperado = {2: [2187, 2], 3: [162, 2]}[k]
    return esperado, [potencia.orden, longitud_derivada(potencia)]


def _matrices_w() -> Tuple[Any, Any]:
    esperado = {
        'X^2': [[-2, 1], [-3, 1]],
        'Y^2': [[4, 0], [0, -2]],
        'XY': [[-2, -4], [3, 1]],
        'Z': [[1, 3], [0, 1]],
    }
    obtenido = {
        'X^2': MATRIZ_X.potencia(2),
        'Y^2': MATRIZ_Y.potencia(2),
        'XY': MATRIZ_X * MATRIZ_Y,
        'Z': MATRIZ_Z,
    }
    esperado = {clave: _filas(Matriz2.de_filas(9, filas)) for clave, filas in esperado.items()}
    obtenido = {clave: _filas(M) for clave, M in obtenido.items()}
    identidad = Matriz2.identidad(9)
    gl2 = grupo_gl2(9)
    centro_z = centralizador(gl2, [MATRIZ_Z.como_tupla()])
    esperado.update({'order(Z)': 3, 'criterion(X)': True, 'criterion(Y)': True, 'order(<X,Y,T>)': 54,
                     'order(C(Z))': 486, 'criterion=centralizer': True})
    obtenido.update({
        'order(Z)': next(k for k in range(1, 10) if MATRIZ_Z.potencia(k) == identidad),
        'criterion(X)': conmuta_con_z(MATRIZ_X),
        'criterion(Y)': conmuta_con_z(MATRIZ_Y),
        'order(<X,Y,T>)': GrupoMatricial(9, [MATRIZ_X, MATRIZ_Y, MATRIZ_T]).orden,
        'order(C(Z))': centro_z.orden,
        'criterion=centralizer': all(conmuta_con_z(gl2.matriz(g)) == (g in centro_z) for g in gl2.elementos),
    })
    return esperado, obtenido


def _deteccion(descriptor: str, texto_ley: str) -> Tuple[Any, Any]:
    informe = informe_deteccion(construir_grupo(descriptor), analizar_ley(texto_ley), 2, 3)
    return ['holds', 'holds', 'fails'], [v.value for v in informe.veredictos]


def _deteccion_metabeliana_w() -> Tuple[Any, Any]:
    informe = informe_deteccion(grupo_w(), ley_metabeliana(), 2, 3)
    return ['holds', 'holds', 'fails'], [v.value for v in informe.veredictos]


def _trazas_gamma() -> Tuple[Any, Any]:
    informe = comprobar_conjunto_gamma()
    fallidas = [r.nombre for r in informe.resultados if not r.valido]
    return [], fallidas


def _certificado_a2_b() -> Tuple[Any, Any]:
    presentacion = leer_presentacion(os.path.join(PATH_TRAZAS, 'presentacion_ab.txt'))
    objetivo, certificado = leer_certificado(os.path.join(PATH_TRAZAS, 'certificado_a2_b.txt'), presentacion)
    return {'status': 'valid'}, comprobar_certificado(presentacion, objetivo, certificado).to_dict()


def _abeliano() -> Tuple[Any, Any]:
    fallidos = [[m, n] for m, n in PARES_VERIFICACION if not tuberia_abeliana(m, n).superada]
    no_coprimos = []
    for m, n in ((2, 4), (6, 9)):
        try:
            tuberia_abeliana(m, n)
        except NoCoprimosError:
            no_coprimos.append([m, n])
    return {'failed': [], 'not_coprime': [[2, 4], [6, 9]]}, {'failed': fallidos, 'not_coprime': no_coprimos}


def _nq2_valores() -> Tuple[Any, Any]:
    F = grupo_libre(['a', 'b'])
    esperado = {'powers': [[0, 0, m * m] for m in range(1, 11)], 'homomorphism': 0, 'class-2': 0}
    potencias = [list(nq2_eval(palabra(f'[a^{m}, b^{m}]', F)).como_tupla()) for m in range(1, 11)]

    palabras = palabras_reducidas(F, 4)
    imagenes = {w: nq2_eval(w) for w in palabras}
    homomorfismo = _violaciones((f'{u} · {v}' for u, v in itertools.product(palabras, repeat=2)
                                 if nq2_eval(u * v) != imagenes[u] * imagenes[v]), 'nq2-homomorfismo')

    # nq2 es homomorfismo: basta evaluar [[u, v], w] sobre las imágenes distintas
    triples = sorted(set(imagenes.values()), key=TripleMalcev.como_tupla)

    def conmutador_triples(s, t):
        return s.inverso() * t.inverso() * s * t

    conmutadores = {conmutador_triples(s, t) for s, t in itertools.product(triples, repeat=2)}
    truncamiento = sum(1 for c, r in itertools.product(conmutadores, triples) if conmutador_triples(c, r) != IDENTIDAD)
    cortas = palabras_reducidas(F, 2)
    truncamiento += _violaciones((f'[[{u}, {v}], {w}]' for u, v, w in itertools.product(cortas, repeat=3)
                                  if nq2_eval(conmutador(conmutador(u, v), w)) != IDENTIDAD), 'nq2-clase-2')
    return esperado, {'powers': potencias, 'homomorphism': homomorfismo, 'class-2': truncamiento}


def _nq2_cociente() -> Tuple[Any, Any]:
    F = grupo_libre(['a', 'b'])
    return ({'(2,3)': 1, '(3,4)': 1, 'm=2': 4},
            {'(2,3)': nq2_orden_c(presentacion_potencias(2, 3).relatores),
             '(3,4)': nq2_orden_c(presentacion_potencias(3, 4).relatores),
             'm=2': nq2_orden_c(relatores_potencias(2, F))})


def _nilpotentes(cota_orden: Optional[int]) -> List[Grupo]:
    return [G for G in corpus(cota_orden) if clase_nilpotencia(G) is not None]


def _detectabilidad_clase() -> Tuple[Any, Any]:
    violaciones = (f'{G.descriptor} ({m}, {n})' for G in _nilpotentes(None) for m, n in _pares_coprimos(12)
                   if not comprobar_detectabilidad_clase(G, m, n))
    return 0, _violaciones(violaciones, 'class-detectability')


def _fitting() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            normales = [H for H in _candidatos_normales(G) if clase_nilpotencia(H) is not None]
            for M, N in itertools.combinations_with_replacement(normales, 2):
                if not comprobar_fitting(G, M, N):
                    yield f'{G.descriptor}: órdenes {M.orden} y {N.orden}'
    return 0, _violaciones(violaciones(), 'fitting')


def _heisenberg() -> Tuple[Any, Any]:
    H = GrupoHeisenberg3()
    M = clausura(H, [GrupoHeisenberg3.X, GrupoHeisenberg3.Z])
    N = clausura(H, [GrupoHeisenberg3.Y, GrupoHeisenberg3.Z])
    producto = clausura(H, [GrupoHeisenberg3.X, GrupoHeisenberg3.Y, GrupoHeisenberg3.Z])
    return ({'order_MN': 27, 'class_M': 1, 'class_N': 1, 'class_MN': 2, 'bound': True},
            {'order_MN': producto.orden, 'class_M': clase_nilpotencia(M), 'class_N': clase_nilpotencia(N),
             'class_MN': clase_nilpotencia(producto), 'bound': comprobar_fitting(H, M, N)})


def _cociente_basico() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            potencias = {m: subgrupo_potencia(G, m) for m in range(1, 13)}
            for N in _candidatos_normales(G):
                Q = GrupoCociente(G, N)
                for m, P in potencias.items():
                    proyeccion = {Q.proyectar(g) for g in P.elementos}
                    if proyeccion != set(subgrupo_potencia(Q, m).elementos):
                        yield f'{G.descriptor} / orden {N.orden}, m = {m}'
    return 0, _violaciones(violaciones(), 'basic-quotient')


def _super_basico() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            for g in G.elementos:
                orden = orden_de(G, g)
                for m in range(1, 13):
                    if math.gcd(orden, m) != 1:
                        continue
                    h = G.potencia(g, m)
                    if g not in {G.potencia(h, k) for k in range(orden)}:
                        yield f'{G.descriptor}: {g!r}, m = {m}'
    return 0, _violaciones(violaciones(), 'super-basic')


def _lagrange() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            subgrupos = [subgrupo_potencia(G, m) for m in range(1, 13)] + serie_derivada(G)
            for H in subgrupos:
                if G.orden % H.orden:
                    yield f'{G.descriptor}: subgrupo de orden {H.orden}'
            for g in G.elementos:
                if G.orden % orden_de(G, g):
                    yield f'{G.descriptor}: elemento {g!r}'
    return 0, _violaciones(violaciones(), 'lagrange')


def _monotonia() -> Tuple[Any, Any]:
    leyes = [ley_conmutativa(), ley_metabeliana(), palabra_nilpotencia(2), palabra_engel(2), palabra_burnside(6)]
    violaciones = (f'{G.descriptor}: {ley.texto}' for G in corpus(200) for ley in leyes
                   if not informe_deteccion(G, ley, 2, 3).coherente)
    return 0, _violaciones(violaciones, 'law-monotonicity')


def _detectabilidad_engel() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            for k in range(1, 5):
                ley = palabra_engel(k)
                en_g = satisface(G, ley).cumple
                for m, n in ((2, 3), (3, 4), (2, 5)):
                    en_potencias = (satisface(subgrupo_potencia(G, m), ley).cumple and
                                    satisface(subgrupo_potencia(G, n), ley).cumple)
                    if en_g != en_potencias:
                        yield f'{G.descriptor}: Engel {k} con ({m}, {n})'
    return 0, _violaciones(violaciones(), 'engel-detectability')


def _detectabilidad_burnside() -> Tuple[Any, Any]:
    def violaciones():
        for G in corpus(200):
            exponente_g = exponente(G)
            for m, n in ((2, 3), (3, 4), (2, 5)):
                exponente_m = exponente(subgrupo_potencia(G, m))
                exponente_n = exponente(subgrupo_potencia(G, n))
                for r in range(1, 13):
                    if (r % exponente_g == 0) != (r % exponente_m == 0 and r % exponente_n == 0):
                        yield f'{G.descriptor}: x^{r} con ({m}, {n})'
    return 0, _violaciones(violaciones(), 'burnside-detectability')


def _testigo_truncamiento() -> Tuple[Any, Any]:
    testigo = testigo_truncamiento(2, 3, 5)
    G = testigo.grupo
    relatores = presentacion_potencias(2, 3).relatores[:5]
    triviales = all(evaluar_palabra(r, G, {'a': testigo.a, 'b': testigo.b}) == G.identidad for r in relatores)
    abeliano = G.operar(testigo.a, testigo.b) == G.operar(testigo.b, testigo.a)
    return ({'order': 6, 'abelian': False, 'relators_hold': True},
            {'order': G.orden, 'abelian': abeliano, 'relators_hold': triviales})


def _busqueda_1458() -> Tuple[Any, Any]:
    try:
        G = buscar_contraejemplo_1458()
    except NoEncontradoError:
        return {'order': 1458, 'property': True}, 'not-found'
    return {'order': 1458, 'property': True}, {'order': G.orden, 'property': cumple_propiedad(G)}


def _busqueda_secciones_w() -> Tuple[Any, Any]:
    try:
        G = buscar_contraejemplo_1458(solo_secciones_de_w=True)
    except NoEncontradoError:
        return 'not-found', 'not-found'
    return 'not-found', G.descriptor


_COMPROBACIONES: Dict[str, Comprobacion] = {
    'W-order': _orden_w,
    'W-derived-length': _longitud_derivada_w,
    'W-power-2': functools.partial(_potencia_w, 2),
    'W-power-3': functools.partial(_potencia_w, 3),
    'W-matrices': _matrices_w,
    'W-metabelian-detect': _deteccion_metabeliana_w,
    'hol7-detect': functools.partial(_deteccion, 'hol(7)', '[[x^2,y^2]^3,y^3]'),
    'hol9-detect': functools.partial(_deteccion, 'hol(9)', '[x^2,x^y]'),
    'gamma-traces': _trazas_gamma,
    'a2-b-certificate': _certificado_a2_b,
    'its-abelian': _abeliano,
    'nq2-goldens': _nq2_valores,
    'nq2-quotient': _nq2_cociente,
    'class-detectability': _detectabilidad_clase,
    'fitting': _fitting,
    'heisenberg-two-subgroups': _heisenberg,
    'basic-quotient': _cociente_basico,
    'super-basic': _super_basico,
    'lagrange': _lagrange,
    'law-monotonicity': _monotonia,
    'engel-detectability': _detectabilidad_engel,
    'burnside-detectability': _detectabilidad_burnside,
    'truncation-witness': _testigo_truncamiento,
    'search-1458': _busqueda_1458,
    'search-1458-w-sections': _busqueda_secciones_w,
}


def nombres_comprobaciones() -> List[str]:
    return sorted(_COMPROBACIONES)


def ejecutar_comprobacion(nombre: str) -> FilaVerificacion:
    """
    Ejecuta una comprobación con nombre y mide su duración. Las excepciones se anotan como fallo.

    Parámetros:
    -----------
    nombre : str
        Nombre de la comprobación.

    Retorna:
    --------
    FilaVerificacion
        La fila con el estado, los valores y la duración.
    """
    inicio = time.perf_counter()
    try:
        esperado, obtenido = _COMPROBACIONES[nombre]()
    except Exception as e:
        logger.exception('La comprobación %s ha lanzado una excepción', nombre)
        esperado, obtenido = None, f'{type(e).__name__}: {e}'
    milisegundos = (time.perf_counter() - inicio) * 1000
    fila = FilaVerificacion(nombre, esperado == obtenido, esperado, obtenido, milisegundos)
    logger.info('Comprobación %s: %s en %.1f ms', nombre, fila.estado, milisegundos)
    return fila


def verificar(seleccion: Optional[Iterable[str]] = None, paralelismo: int = 1) -> List[FilaVerificacion]:
    """
    Ejecuta las comprobaciones seleccionadas (todas si no se indica selección).

    Parámetros:
    -----------
    seleccion : Optional[Iterable[str]]
        Nombres de las comprobaciones; una selección vacía produce una tabla vacía.
    paralelismo : int
        Número de procesos; el orden de la tabla no depende de él.

    Retorna:
    --------
    List[FilaVerificacion]
        Las filas, ordenadas por nombre.

    Excepciones:
    ------------
    ValueError
        Si algún nombre no corresponde a ninguna comprobación.
    """
    nombres = nombres_comprobaciones() if seleccion is None else sorted(set(seleccion))
    desconocidos = [nombre for nombre in nombres if nombre not in _COMPROBACIONES]
    if desconocidos:
        raise ValueError(f'Comprobaciones desconocidas: {", ".join(desconocidos)}')
    if paralelismo > 1 and len(nombres) > 1:
        with multiprocessing.Pool(min(paralelismo, len(nombres))) as pool:
            return pool.map(ejecutar_comprobacion, nombres)
    return [ejecutar_comprobacion(nombre) for nombre in nombres]
