"""
Módulo con la comprobación mecánica de que ⟨a, b | [a^m, b^m], [a^m, (ab)^m], [b^m, (ab)^m], [a^n, b^n],
[a^n, (ab)^n], [b^n, (ab)^n]⟩ presenta Z × Z para m y n coprimos.

La comprobación tiene tres etapas:

1. Conjunto de trazas del grupo Γ (a, b, x, y, z con nueve relatores): la simetría φ (a ↔ b, x ↔ y,
   z ↦ z^a) está bien definida y [a, [a, b]] y [b, [a, b]] están en la clausura normal de los relatores.
   Cada traza válida establece la relación inicio · fin⁻¹. Un fichero de traza puede declarar relatores
   adicionales tras los nueve de Γ; sólo se admiten si son conjugados (o inversos de conjugados) de una
   relación ya establecida o, superada la etapa de simetría, de su imagen por φ.
2. Mapa de extensión Γ → G_{m,n}: a ↦ a, b ↦ b, x ↦ a^{qn}, y ↦ b^{qn}, z ↦ (ab)^{qn}, con pm − qn = 1.
   Cada relator de Γ debe ir a ε o a [u^k, v^l] con u, v ∈ {a, b, ab} y m | k, l o n | k, l.
3. Cociente nilpotente de clase 2: el orden de [a, b] es el mcd de los |γ| de los seis relatores, y debe
   ser 1.

Clases:
    - ResultadoTraza
    - InformeTrazas
    - ConjuntoEstablecido
    - ImagenRelator
    - InformeExtension
    - EtapaTuberia
    - InformeTuberia

Funciones:
    - simetria(w) -> PalabraLibre
    - comprobar_conjunto_gamma(directorio) -> InformeTrazas
    - coeficientes_bezout(m, n) -> Tuple[int, int]
    - verificar_mapa_extension(m, n) -> InformeExtension
    - tuberia_abeliana(m, n) -> InformeTuberia

Excepciones:
    - NoCoprimosError: Error personalizado para pares no coprimos.
"""

import functools
import logging
import math
import operator
import os
from dataclasses import dataclass
from typing import List, Optional, Tuple

from config import PATH_TRAZAS
from grupos_libres.formato_fichero_error import FormatoFicheroError
from grupos_libres.ficheros import leer_traza
from grupos_libres.malcev import nq2_orden_c
from grupos_libres.no_coprimos_error import NoCoprimosError
from grupos_libres.palabra_libre import (PalabraLibre, aplicar_sustitucion, conmutador, generador, grupo_libre,
                                         palabra, son_conjugadas, texto)
from grupos_libres.presentacion import (ALFABETO_GAMMA, RELATORES_GAMMA, Presentacion, gamma_presentacion,
                                        presentacion_potencias)
from grupos_libres.traza import comprobar_traza
from leyes.analizador import analizar_palabra
from leyes.ley import Corchete, evaluar_arbol

logger = logging.getLogger(__name__)

TRAZAS_SIMETRIA = ('simetria_ab_z', 'simetria_x_z', 'simetria_y_z', 'simetria_ax_abz', 'simetria_by_abz')
TRAZAS_CONMUTADORES = ('conmutador_ba_xy', 'conmutador_a_bzy', 'conmutador_b_zm1x', 'conmutador_b_az',
                       'clase_dos')
# Relaciones que deben quedar establecidas al final; las dos últimas dan la clase 2 de ⟨a, b⟩.
AFIRMACIONES = ('[a b, y x]', '[b, z a x]', '[b, [a, z]]', '[b, [a, b]]', '[a, [a, b]]')

IMAGENES_SIMETRIA = {'a': 'b', 'b': 'a', 'x': 'y', 'y': 'x', 'z': 'z^a'}


def simetria(w: PalabraLibre) -> PalabraLibre:
    """
    Imagen de una palabra de F(a, b, x, y, z) por φ: a ↔ b, x ↔ y, z ↦ a⁻¹za.
    """
    F = w.group
    mapa = {letra: palabra(imagen, F) for letra, imagen in IMAGENES_SIMETRIA.items()}
    return aplicar_sustitucion(w, mapa, F)


@dataclass(frozen=True)
class ResultadoTraza:
    nombre: str
    valido: bool
    paso: Optional[int] = None
    motivo: str = ''

    def to_dict(self) -> dict:
        return {'name': self.nombre, 'status': 'pass' if self.valido else 'fail', 'step': self.paso,
                'reason': self.motivo}


@dataclass(frozen=True)
class InformeTrazas:
    """
    Resultado del conjunto de trazas de Γ, en el orden en que se comprueban.
    """
    resultados: Tuple[ResultadoTraza, ...]

    @property
    def valido(self) -> bool:
        return all(r.valido for r in self.resultados)

    def to_dict(self) -> dict:
        return {'status': 'pass' if self.valido else 'fail', 'checks': [r.to_dict() for r in self.resultados]}


class ConjuntoEstablecido:
    """
    Clase que lleva las relaciones de Γ ya establecidas.

    Métodos:
    --------
    admite(w) -> bool:
        Indica si w es conjugada (o inversa de una conjugada) de una relación establecida o, con la
        simetría activada, de su imagen por φ.
    anyadir(w) -> None:
        Añade una relación establecida.
    activar_simetria() -> None:
        Admite desde ahora las imágenes por φ.
    """

    def __init__(self, presentacion: Presentacion) -> None:
        self.__relaciones: List[PalabraLibre] = list(presentacion.relatores)
        self.__simetria = False

    @property
    def simetria_activa(self) -> bool:
        return self.__simetria

    @property
    def relaciones(self) -> Tuple[PalabraLibre, ...]:
        return tuple(self.__relaciones)

    def anyadir(self, w: PalabraLibre) -> None:
        if not w.is_identity:
            self.__relaciones.append(w)

    def activar_simetria(self) -> None:
        self.__simetria = True

    def admite(self, w: PalabraLibre) -> bool:
        candidatas = list(self.__relaciones)
        if self.__simetria:
            candidatas += [simetria(r) for r in self.__relaciones]
        return any(son_conjugadas(w, r, admitir_inverso=True) for r in candidatas)


def _comprobar_fichero(directorio: str, nombre: str, gamma: Presentacion,
                       establecido: ConjuntoEstablecido) -> ResultadoTraza:
    ruta = os.path.join(directorio, f'{nombre}.txt')
    try:
        presentacion, traza = leer_traza(ruta)
    except FormatoFicheroError as error:
        return ResultadoTraza(nombre, False, None, str(error))
    base = presentacion.relatores[:len(gamma)]
    if presentacion.alfabeto != gamma.alfabeto or base != gamma.relatores:
        return ResultadoTraza(nombre, False, None, 'La presentación no empieza por los relatores de Γ')
    for i, extra in enumerate(presentacion.relatores[len(gamma):], start=len(gamma)):
        if not establecido.admite(extra):
            return ResultadoTraza(nombre, False, None, f'El relator {i} ({texto(extra)}) no está establecido')
    resultado = comprobar_traza(presentacion, traza)
    if not resultado.valido:
        return ResultadoTraza(nombre, False, resultado.paso, resultado.motivo)
    establecido.anyadir(traza.relacion)
    logger.info('Traza %s válida: establece %s', nombre, texto(traza.relacion))
    return ResultadoTraza(nombre, True)


@functools.lru_cache(maxsize=4)
def comprobar_conjunto_gamma(directorio: str = PATH_TRAZAS) -> InformeTrazas:
    """
    Comprueba el conjunto de trazas de Γ: simetría, trazas de conmutadores y afirmaciones finales.

    Parámetros:
    -----------
    directorio : str
        Directorio con los ficheros de traza.

    Retorna:
    --------
    InformeTrazas
        Un resultado por traza, uno para la buena definición de φ y uno por afirmación.
    """
    gamma = gamma_presentacion()
    establecido = ConjuntoEstablecido(gamma)
    resultados = [_comprobar_fichero(directorio, n, gamma, establecido) for n in TRAZAS_SIMETRIA]

    no_admitidos = [texto(r) for r in gamma.relatores if not establecido.admite(simetria(r))]
    if no_admitidos:
        resultados.append(ResultadoTraza('simetria', False, None,
                                         f'Imágenes por φ no establecidas: {", ".join(no_admitidos)}'))
    else:
        establecido.activar_simetria()
        resultados.append(ResultadoTraza('simetria', True))

    resultados += [_comprobar_fichero(directorio, n, gamma, establecido) for n in TRAZAS_CONMUTADORES]
    for afirmacion in AFIRMACIONES:
        valido = establecido.admite(gamma.palabra(afirmacion))
        resultados.append(ResultadoTraza(afirmacion, valido, None, '' if valido else 'Relación no establecida'))
    informe = InformeTrazas(tuple(resultados))
    logger.info('Conjunto de trazas de Γ: %s', 'válido' if informe.valido else 'inválido')
    return informe


def coeficientes_bezout(m: int, n: int) -> Tuple[int, int]:
    """
    Retorna (p, q) con pm − qn = 1 y q el menor entero no negativo posible.

    Excepciones:
    ------------
    NoCoprimosError
        Si mcd(m, n) ≠ 1.
    """
    if m < 1 or n < 1:
        raise ValueError(f'Los exponentes deben ser positivos y son {m} y {n}')
    if math.gcd(m, n) != 1:
        raise NoCoprimosError(m, n)
    q = -pow(n, -1, m) % m
    return (q * n + 1) // m, q


@dataclass(frozen=True)
class ImagenRelator:
    relator: str
    imagen: str
    forma: str
    valida: bool

    def to_dict(self) -> dict:
        return {'relator': self.relator, 'image': self.imagen, 'form': self.forma, 'valid': self.valida}


@dataclass(frozen=True)
class InformeExtension:
    """
    Resultado de comprobar el mapa de extensión Γ → G_{m,n}.
    """
    m: int
    n: int
    p: int
    q: int
    imagenes: Tuple[ImagenRelator, ...]

    @property
    def valido(self) -> bool:
        return all(i.valida for i in self.imagenes)

    def to_dict(self) -> dict:
        return {'m': self.m, 'n': self.n, 'p': self.p, 'q': self.q,
                'status': 'pass' if self.valido else 'fail', 'images': [i.to_dict() for i in self.imagenes]}


def _como_potencia(w: PalabraLibre, bases) -> Optional[Tuple[str, PalabraLibre, int]]:
    for nombre, u in bases:
        if len(w) % len(u):
            continue
        k = len(w) // len(u)
        for candidato in (k, -k):
            if u ** candidato == w:
                return nombre, u, candidato
    return None


def verificar_mapa_extension(m: int, n: int) -> InformeExtension:
    """
    Comprueba que a ↦ a, b ↦ b, x ↦ a^{qn}, y ↦ b^{qn}, z ↦ (ab)^{qn} define un homomorfismo Γ → G_{m,n}.

    Parámetros:
    -----------
    m : int
        Primer exponente.
    n : int
        Segundo exponente, coprimo con m.

    Retorna:
    --------
    InformeExtension
        La imagen de cada relator de Γ y si es ε o un conmutador [u^k, v^l] admisible.

    Excepciones:
    ------------
    NoCoprimosError
        Si mcd(m, n) ≠ 1.
    """
    p, q = coeficientes_bezout(m, n)
    F = grupo_libre(['a', 'b'])
    a, b = generador(F, 'a'), generador(F, 'b')
    mapa = {'a': a, 'b': b, 'x': a ** (q * n), 'y': b ** (q * n), 'z': (a * b) ** (q * n)}
    bases = (('a', a), ('b', b), ('ab', a * b))

    def imagen_de(nodo) -> PalabraLibre:
        return evaluar_arbol(nodo, lambda var: mapa[var.nombre], operator.mul, lambda g: g ** -1, F.identity)

    imagenes = []
    for relator in RELATORES_GAMMA:
        match analizar_palabra(relator, ALFABETO_GAMMA):
            case Corchete(izquierda, derecha):
                u, v = imagen_de(izquierda), imagen_de(derecha)
            case _:
                raise ValueError(f'El relator {relator} no es un conmutador')
        imagen = conmutador(u, v)
        if imagen.is_identity:
            imagenes.append(ImagenRelator(relator, '1', 'ε', True))
            continue
        pu, pv = _como_potencia(u, bases), _como_potencia(v, bases)
        if pu is None or pv is None:
            imagenes.append(ImagenRelator(relator, texto(imagen), 'no es [u^k, v^l]', False))
            continue
        (nu, base_u, k), (nv, base_v, l) = pu, pv
        divisible = (k % m == 0 and l % m == 0) or (k % n == 0 and l % n == 0)
        valida = divisible and imagen == conmutador(base_u ** k, base_v ** l)
        imagenes.append(ImagenRelator(relator, texto(imagen), f'[{nu}^{k}, {nv}^{l}]', valida))
    informe = InformeExtension(m, n, p, q, tuple(imagenes))
    logger.info('Mapa de extensión para (%d, %d) con p = %d, q = %d: %s', m, n, p, q,
                'válido' if informe.valido else 'inválido')
    return informe


@dataclass(frozen=True)
class EtapaTuberia:
    nombre: str
    superada: bool
    detalle: dict

    def to_dict(self) -> dict:
        return {'stage': self.nombre, 'status': 'pass' if self.superada else 'fail', 'detail': self.detalle}


@dataclass(frozen=True)
class InformeTuberia:
    """
    Resultado de las tres etapas para un par (m, n).
    """
    m: int
    n: int
    etapas: Tuple[EtapaTuberia, ...]

    @property
    def superada(self) -> bool:
        return all(e.superada for e in self.etapas)

    def to_dict(self) -> dict:
        return {'m': self.m, 'n': self.n, 'status': 'pass' if self.superada else 'fail',
                'stages': [e.to_dict() for e in self.etapas]}


def tuberia_abeliana(m: int, n: int, directorio: str = PATH_TRAZAS) -> InformeTuberia:
    """
    Ejecuta las tres etapas que prueban que la presentación de seis relatores define Z × Z.

    Parámetros:
    -----------
    m : int
        Primer exponente.
    n : int
        Segundo exponente, coprimo con m.
    directorio : str
        Directorio de las trazas de Γ.

    Retorna:
    --------
    InformeTuberia
        Estado y detalle de cada etapa.

    Excepciones:
    ------------
    NoCoprimosError
        Si mcd(m, n) ≠ 1.
    """
    coeficientes_bezout(m, n)
    trazas = comprobar_conjunto_gamma(directorio)
    extension = verificar_mapa_extension(m, n)
    orden_c = nq2_orden_c(presentacion_potencias(m, n).relatores)
    etapas = (
        EtapaTuberia('trazas-gamma', trazas.valido, trazas.to_dict()),
        EtapaTuberia('mapa-extension', extension.valido, extension.to_dict()),
        EtapaTuberia('cociente-clase-2', orden_c == 1, {'order_c': orden_c}),
    )
    return InformeTuberia(m, n, etapas)
