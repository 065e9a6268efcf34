"""
Módulo para la evaluación de leyes en grupos finitos y la decisión de su satisfacción.

Se ofrecen tres estrategias:

- `Exhaustivo(presupuesto)`: recorre todas las tuplas en orden lexicográfico del soporte, si su número no
  supera el presupuesto; si lo supera devuelve `Veredicto.DESCONOCIDO`.
- `Estructural(presupuesto)`: reconoce la ley conmutativa, la metabeliana, las de nilpotencia, las de
  Burnside y las de Engel, y decide con series, exponentes o pares (las de Engel, dentro del presupuesto).
- `Automatico()`: prueba la estructural y recurre a la exhaustiva.

Clases:
    - Veredicto
    - ResultadoSatisfaccion
    - Exhaustivo
    - Estructural
    - Automatico

Funciones:
    - evaluar(ley, G, tupla) -> Elemento
    - satisface(objetivo, ley, estrategia) -> ResultadoSatisfaccion

Excepciones:
    - AridadIncorrectaError: Error personalizado para tuplas más cortas que la aridad de la ley.
"""

import itertools
import logging
import multiprocessing
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple, Union

from config import PRESUPUESTO_EXHAUSTIVO
from grupos_finitos.grupo import Elemento, Grupo
from grupos_finitos.series import (clase_nilpotencia, conmutador_de_subgrupos, exponente, orden_de,
                                   subgrupo_total)
from grupos_finitos.subgrupo import Subgrupo
from leyes.aridad_incorrecta_error import AridadIncorrectaError
from leyes.ley import Corchete, Inverso, Ley, Nodo, Potencia, Variable, evaluar_arbol

logger = logging.getLogger(__name__)


class Veredicto(Enum):
    CUMPLE = 'holds'
    FALLA = 'fails'
    DESCONOCIDO = 'unknown'


@dataclass(frozen=True)
class ResultadoSatisfaccion:
    """
    Resultado de decidir si un grupo satisface una ley.

    Atributos:
    ----------
    veredicto : Veredicto
        CUMPLE, FALLA o DESCONOCIDO.
    estrategia : str
        Estrategia que ha producido el veredicto.
    examinadas : int
        Número de tuplas evaluadas.
    testigo : Optional[Tuple]
        Tupla en la que la ley no se anula (sólo si el veredicto es FALLA).
    """
    veredicto: Veredicto
    estrategia: str
    examinadas: int = 0
    testigo: Optional[Tuple[Elemento, ...]] = None

    @property
    def cumple(self) -> bool:
        return self.veredicto is Veredicto.CUMPLE

    def to_dict(self) -> dict:
        return {'verdict': self.veredicto.value,
                'strategy': self.estrategia,
                'examined': self.examinadas,
                'witness': None if self.testigo is None else [repr(g) for g in self.testigo]}


@dataclass(frozen=True)
class Exhaustivo:
    presupuesto: int = PRESUPUESTO_EXHAUSTIVO
    paralelismo: int = 1


@dataclass(frozen=True)
class Estructural:
    presupuesto: int = PRESUPUESTO_EXHAUSTIVO


@dataclass(frozen=True)
class Automatico:
    presupuesto: int = PRESUPUESTO_EXHAUSTIVO
    paralelismo: int = 1


Estrategia = Union[Exhaustivo, Estructural, Automatico]


def evaluar(ley: Ley, G: Grupo, tupla: Sequence[Elemento]) -> Elemento:
    """
    Evalúa una ley sustituyendo xᵢ por el i-ésimo elemento de la tupla.

    Parámetros:
    -----------
    ley : Ley
        Ley a evaluar.
    G : Grupo
        Grupo (o subgrupo) en el que se evalúa.
    tupla : Sequence[Elemento]
        Elementos asignados a x1, x2, …

    Retorna:
    --------
    Elemento
        El valor w(g₁, …, g_k).

    Excepciones:
    ------------
    AridadIncorrectaError
        Si la tupla es más corta que la aridad de la ley.
    """
    if len(tupla) < ley.aridad:
        raise AridadIncorrectaError(ley.texto, ley.aridad, len(tupla))
    return evaluar_arbol(ley.arbol, lambda v: tupla[v.indice - 1], G.operar, G.inverso, G.identidad)


def _explorar_bloque(argumentos) -> Optional[Tuple[int, Tuple[Elemento, ...]]]:
    # argumentos: (G, ley, inicio, fin); recorre las tuplas cuyo primer componente está en [inicio, fin)
    G, ley, inicio, fin = argumentos
    elementos = G.elementos
    e = G.identidad
    resto = len(elementos) ** (ley.aridad - 1)
    for i in range(inicio, fin):
        for j, cola in enumerate(itertools.product(elementos, repeat=ley.aridad - 1)):
            tupla = (elementos[i],) + cola
            if evaluar(ley, G, tupla) != e:
                return i * resto + j, tupla
    return None


def _exhaustivo(G: Grupo, ley: Ley, presupuesto: Optional[int], paralelismo: int,
                nombre: str = 'exhaustive') -> ResultadoSatisfaccion:
    total = G.orden ** ley.aridad
    if presupuesto is not None and total > presupuesto:
        logger.info('Exploración de %s sobre %s descartada: %d tuplas superan el presupuesto %d',
                    ley, G.descriptor, total, presupuesto)
        return ResultadoSatisfaccion(Veredicto.DESCONOCIDO, nombre, 0)
    n = G.orden
    if paralelismo > 1 and n > 1:
        trozos = min(n, paralelismo * 4)
        cortes = [n * i // trozos for i in range(trozos + 1)]
        tareas = [(G, ley, cortes[i], cortes[i + 1]) for i in range(trozos)]
        with multiprocessing.Pool(paralelismo) as pool:
            hallazgos = [h for h in pool.map(_explorar_bloque, tareas) if h is not None]
        hallazgo = min(hallazgos, key=lambda h: h[0]) if hallazgos else None
    else:
        hallazgo = _explorar_bloque((G, ley, 0, n))
    if hallazgo is None:
        return ResultadoSatisfaccion(Veredicto.CUMPLE, nombre, total)
    posicion, testigo = hallazgo
    return ResultadoSatisfaccion(Veredicto.FALLA, nombre, posicion + 1, testigo)


def _indices(nodos: Sequence[Nodo]) -> Optional[List[int]]:
    # índices de variables distintas, o None si algún nodo no es una variable o hay repeticiones
    if not all(isinstance(n, Variable) for n in nodos):
        return None
    indices = [n.indice for n in nodos]
    return indices if len(set(indices)) == len(indices) else None


def _normado_izquierda(arbol: Nodo) -> Optional[List[Nodo]]:
    # [[…[u1, u2], u3], …, uk] → [u1, …, uk]
    hojas = []
    while isinstance(arbol, Corchete):
        hojas.append(arbol.derecha)
        arbol = arbol.izquierda
    hojas.append(arbol)
    return hojas[::-1] if len(hojas) >= 2 else None


def _testigo_de_termino(G: Grupo, termino: Subgrupo, indices: List[int], aridad: int) -> Tuple[Elemento, ...]:
    arbol = termino.testigos[termino.generadores[0]]
    tupla = [G.identidad] * aridad
    for i, hoja in zip(indices, arbol.hojas()):
        tupla[i - 1] = hoja
    return tuple(tupla)


def _estructural(G: Grupo, ley: Ley, presupuesto: int = PRESUPUESTO_EXHAUSTIVO,
                 paralelismo: int = 1) -> Optional[ResultadoSatisfaccion]:
    """
    Decide la ley por vía estructural si la reconoce; retorna None en otro caso. Las leyes de Engel en
    grupos de clase mayor que k se deciden sobre los pares, dentro del presupuesto.
    """
    arbol = ley.arbol
    nombre = 'structural'

    if isinstance(arbol, (Potencia, Inverso)) and isinstance(arbol.base, Variable):
        m = abs(arbol.exponente) if isinstance(arbol, Potencia) else 1
        if m % exponente(G) == 0:
            return ResultadoSatisfaccion(Veredicto.CUMPLE, nombre)
        tupla = [G.identidad] * ley.aridad
        tupla[arbol.base.indice - 1] = next(g for g in G.elementos if m % orden_de(G, g) != 0)
        return ResultadoSatisfaccion(Veredicto.FALLA, nombre, 0, tuple(tupla))

    if isinstance(arbol, Corchete) and isinstance(arbol.izquierda, Corchete) \
            and isinstance(arbol.derecha, Corchete):
        indices = _indices([arbol.izquierda.izquierda, arbol.izquierda.derecha,
                            arbol.derecha.izquierda, arbol.derecha.derecha])
        if indices is not None:
            total = subgrupo_total(G)
            derivado = conmutador_de_subgrupos(total, total)
            segundo = conmutador_de_subgrupos(derivado, derivado)
            if segundo.es_trivial():
                return ResultadoSatisfaccion(Veredicto.CUMPLE, nombre)
            return ResultadoSatisfaccion(Veredicto.FALLA, nombre, 0,
                                         _testigo_de_termino(G, segundo, indices, ley.aridad))

    hojas = _normado_izquierda(arbol)
    if hojas is None:
        return None
    indices = _indices(hojas)
    if indices is not None:
        total = subgrupo_total(G)
        termino = total
        for _ in range(len(hojas) - 1):
            termino = conmutador_de_subgrupos(termino, total)
            if termino.es_trivial():
                return ResultadoSatisfaccion(Veredicto.CUMPLE, nombre)
        return ResultadoSatisfaccion(Veredicto.FALLA, nombre, 0,
                                     _testigo_de_termino(G, termino, indices, ley.aridad))

    if all(isinstance(h, Variable) for h in hojas) and len({h.indice for h in hojas[1:]}) == 1 \
            and hojas[0].indice != hojas[1].indice:
        clase = clase_nilpotencia(G)
        if clase is not None and clase <= len(hojas) - 1:
            return ResultadoSatisfaccion(Veredicto.CUMPLE, nombre)
        # Engel: basta con recorrer los pares
        return _exhaustivo(G, ley, presupuesto, paralelismo, nombre)
    return None


def satisface(objetivo: Grupo, ley: Ley, estrategia: Estrategia = Automatico()) -> ResultadoSatisfaccion:
    """
    Decide si un grupo satisface una ley.

    Parámetros:
    -----------
    objetivo : Grupo
        Grupo o subgrupo finito.
    ley : Ley
        Ley a comprobar.
    estrategia : Estrategia
        `Exhaustivo`, `Estructural` o `Automatico`.

    Retorna:
    --------
    ResultadoSatisfaccion
        El veredicto, la estrategia usada, las tuplas examinadas y el testigo si la ley falla.
    """
    match estrategia:
        case Exhaustivo(presupuesto, paralelismo):
            return _exhaustivo(objetivo, ley, presupuesto, paralelismo)
        case Estructural(presupuesto):
            resultado = _estructural(objetivo, ley, presupuesto)
            return resultado or ResultadoSatisfaccion(Veredicto.DESCONOCIDO, 'structural')
        case Automatico(presupuesto, paralelismo):
            resultado = _estructural(objetivo, ley, presupuesto, paralelismo)
            return resultado or _exhaustivo(objetivo, ley, presupuesto, paralelismo)
    raise TypeError(f'Estrategia desconocida: {estrategia!r}')
