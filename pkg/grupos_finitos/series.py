"""
Módulo de algoritmos sobre subgrupos: clausuras, subgrupos potencia, conmutadores y series.

Todas las funciones aceptan tanto un `Grupo` como un `Subgrupo`; los subgrupos resultantes viven siempre en
el grupo ambiente. Los miembros de cada subgrupo se materializan con un cierre incremental: cada semilla
que no está ya en el subgrupo pasa a ser generador y el conjunto se amplía multiplicando por ella.

Funciones:
    - clausura(ambiente, semilla) -> Subgrupo
    - subgrupo_total(G) -> Subgrupo
    - orden_de(G, g) -> int
    - subgrupo_potencia(G, m) -> Subgrupo
    - conmutador_de_subgrupos(A, B) -> Subgrupo
    - clausura_normal(G, semilla) -> Subgrupo
    - es_normal(G, H) -> bool
    - serie_derivada(G) -> List[Subgrupo]
    - longitud_derivada(G) -> Optional[int]
    - serie_central_inferior(G) -> List[Subgrupo]
    - clase_nilpotencia(G) -> Optional[int]
    - exponente(G) -> int
    - centralizador(G, elementos) -> Subgrupo
"""

import logging
import math
from typing import Dict, Iterable, List, Optional, Sequence, Set

from grupos_finitos.grupo import Elemento, Grupo
from grupos_finitos.subgrupo import Conmutador, Subgrupo

logger = logging.getLogger(__name__)


def _extender(G: Grupo, miembros: Set[Elemento], generadores: Sequence[Elemento], nuevo: Elemento) -> None:
    # `miembros` es un subgrupo cerrado para los generadores previos a `nuevo`
    frontera = []
    for x in list(miembros):
        y = G.operar(x, nuevo)
        if y not in miembros:
            miembros.add(y)
            frontera.append(y)
    while frontera:
        x = frontera.pop()
        for g in generadores:
            y = G.operar(x, g)
            if y not in miembros:
                miembros.add(y)
                frontera.append(y)


def clausura(ambiente: Grupo, semilla: Iterable[Elemento]) -> Subgrupo:
    """
    Calcula el menor subgrupo del ambiente que contiene la semilla.

    Las semillas se recorren en orden de codificación, de modo que los generadores y los miembros del
    resultado son deterministas.

    Parámetros:
    -----------
    ambiente : Grupo
        Grupo (o subgrupo) en el que se calcula el cierre.
    semilla : Iterable[Elemento]
        Elementos de partida. Una semilla vacía produce el subgrupo trivial.

    Retorna:
    --------
    Subgrupo
        El subgrupo generado por la semilla.
    """
    G = ambiente.ambiente
    miembros = {G.identidad}
    generadores: List[Elemento] = []
    for s in sorted(set(semilla)):
        if s not in miembros:
            generadores.append(s)
            _extender(G, miembros, generadores, s)
    return Subgrupo(G, generadores, miembros)


def subgrupo_total(G: Grupo) -> Subgrupo:
    """
    Retorna G como subgrupo de su ambiente, sin árboles de conmutadores en los generadores.
    """
    if isinstance(G, Subgrupo) and not G.testigos:
        return G
    return Subgrupo(G.ambiente, G.generadores, G.elementos)


def orden_de(G: Grupo, g: Elemento) -> int:
    e = G.identidad
    x, r = g, 1
    while x != e:
        x = G.operar(x, g)
        r += 1
    return r


def subgrupo_potencia(G: Grupo, m: int) -> Subgrupo:
    """
    Calcula el subgrupo potencia ⟨g^m : g ∈ G⟩.

    Parámetros:
    -----------
    G : Grupo
        Grupo o subgrupo de partida.
    m : int
        Exponente (m ≥ 1).

    Retorna:
    --------
    Subgrupo
        El subgrupo generado por las potencias m-ésimas, que es normal en G.
    """
    if m < 1:
        raise ValueError(f'El exponente del subgrupo potencia debe ser positivo y es {m}')
    if m == 1:
        return subgrupo_total(G)
    return clausura(G, {G.potencia(g, m) for g in G.elementos})


def _cierre_normal(G: Grupo, iniciales: Dict[Elemento, object], conjugadores: Sequence[Elemento]) -> Subgrupo:
    # `iniciales` asocia a cada generador su árbol de conmutadores (o None)
    miembros = {G.identidad}
    generadores: List[Elemento] = []
    testigos: Dict[Elemento, Conmutador] = {}

    def anyadir(x: Elemento, arbol: object) -> None:
        if x in miembros:
            return
        generadores.append(x)
        if arbol is not None:
            testigos[x] = arbol
        _extender(G, miembros, generadores, x)

    for x in sorted(iniciales):
        anyadir(x, iniciales[x])
    i = 0
    while i < len(generadores):
        x = generadores[i]
        arbol = testigos.get(x)
        for c in conjugadores:
            y = G.conjugado(x, c)
            if y not in miembros:
                anyadir(y, arbol.conjugar(G, c) if arbol is not None else None)
        i += 1
    return Subgrupo(G, generadores, miembros, testigos)


def conmutador_de_subgrupos(A: Grupo, B: Grupo) -> Subgrupo:
    """
    Calcula el subgrupo [A, B] = ⟨[a, b] : a ∈ A, b ∈ B⟩.

    Se obtiene como clausura normal en ⟨A, B⟩ de los conmutadores de generadores. Cada generador del
    resultado lleva su árbol de conmutadores en `testigos`.

    Parámetros:
    -----------
    A : Grupo
        Primer subgrupo.
    B : Grupo
        Segundo subgrupo, en el mismo ambiente.

    Retorna:
    --------
    Subgrupo
        El subgrupo conmutador.
    """
    G = A.ambiente
    testigos_a = A.testigos if isinstance(A, Subgrupo) else {}
    testigos_b = B.testigos if isinstance(B, Subgrupo) else {}
    iniciales: Dict[Elemento, object] = {}
    for a in A.generadores:
        for b in B.generadores:
            x = G.conmutador(a, b)
            if x != G.identidad and x not in iniciales:
                iniciales[x] = Conmutador(testigos_a.get(a, a), testigos_b.get(b, b))
    return _cierre_normal(G, iniciales, tuple(A.generadores) + tuple(B.generadores))


def clausura_normal(G: Grupo, semilla: Iterable[Elemento]) -> Subgrupo:
    """
    Calcula el menor subgrupo normal de G que contiene la semilla.
    """
    return _cierre_normal(G.ambiente, {s: None for s in semilla if s != G.identidad}, G.generadores)


def es_normal(G: Grupo, H: Grupo) -> bool:
    """
    Indica si H es normal en G, comprobando que los conjugados de los generadores de H por los generadores
    de G quedan dentro de H.
    """
    return all(H.contiene(G.conjugado(h, g)) for h in H.generadores for g in G.generadores)


def serie_derivada(G: Grupo) -> List[Subgrupo]:
    """
    Calcula la serie derivada G ⊇ G' ⊇ G'' ⊇ … hasta que es trivial o se estabiliza.

    Parámetros:
    -----------
    G : Grupo
        Grupo o subgrupo de partida.

    Retorna:
    --------
    List[Subgrupo]
        Los términos de la serie; el primero es G y el último es trivial o igual al anterior.
    """
    serie = [subgrupo_total(G)]
    while not serie[-1].es_trivial():
        siguiente = conmutador_de_subgrupos(serie[-1], serie[-1])
        if siguiente.orden == serie[-1].orden:
            break
        serie.append(siguiente)
    logger.debug('Serie derivada de %s: %s', G.descriptor, [H.orden for H in serie])
    return serie


def longitud_derivada(G: Grupo) -> Optional[int]:
    """
    Retorna la longitud derivada de G (0 para el grupo trivial) o None si G no es resoluble.
    """
    serie = serie_derivada(G)
    return len(serie) - 1 if serie[-1].es_trivial() else None


def serie_central_inferior(G: Grupo) -> List[Subgrupo]:
    """
    Calcula la serie central inferior γ₁ = G, γᵢ₊₁ = [γᵢ, G] hasta que es trivial o se estabiliza.
    """
    total = subgrupo_total(G)
    serie = [total]
    while not serie[-1].es_trivial():
        siguiente = conmutador_de_subgrupos(serie[-1], total)
        if siguiente.orden == serie[-1].orden:
            break
        serie.append(siguiente)
    logger.debug('Serie central inferior de %s: %s', G.descriptor, [H.orden for H in serie])
    return serie


def clase_nilpotencia(G: Grupo) -> Optional[int]:
    """
    Retorna la clase de nilpotencia de G (0 para el grupo trivial) o None si G no es nilpotente.
    """
    serie = serie_central_inferior(G)
    return len(serie) - 1 if serie[-1].es_trivial() else None


def exponente(G: Grupo) -> int:
    return math.lcm(*(orden_de(G, g) for g in G.elementos))


def centralizador(G: Grupo, elementos: Iterable[Elemento]) -> Subgrupo:
    """
    Calcula el centralizador en G de un conjunto de elementos.
    """
    elementos = list(elementos)
    return clausura(G, [g for g in G.elementos
                        if all(G.operar(g, h) == G.operar(h, g) for h in elementos)])
