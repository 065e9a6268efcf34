"""
Módulo con las leyes notables: conmutatividad, metabeliana, Engel, nilpotencia y Burnside.

Funciones:
    - ley_conmutativa() -> Ley
    - ley_metabeliana() -> Ley
    - palabra_engel(k) -> Ley
    - palabra_nilpotencia(c) -> Ley
    - palabra_burnside(m) -> Ley
"""

from leyes.ley import Corchete, Ley, Potencia, Variable


def _x(i: int) -> Variable:
    return Variable(f'x{i}')


def ley_conmutativa() -> Ley:
    return Ley(Corchete(_x(1), _x(2)))


def ley_metabeliana() -> Ley:
    return Ley(Corchete(Corchete(_x(1), _x(2)), Corchete(_x(3), _x(4))))


def palabra_engel(k: int) -> Ley:
    """
    Construye la palabra de Engel E_k(x, y), con E_0 = x y E_{k+1} = [E_k, y].

    Parámetros:
    -----------
    k : int
        Longitud de Engel (k ≥ 0).

    Retorna:
    --------
    Ley
        La palabra E_k.
    """
    if k < 0:
        raise ValueError(f'La longitud de Engel debe ser no negativa y es {k}')
    arbol = _x(1)
    for _ in range(k):
        arbol = Corchete(arbol, _x(2))
    return Ley(arbol)


def palabra_nilpotencia(c: int) -> Ley:
    """
    Construye la ley de nilpotencia [[…[x1, x2], x3], …, x_{c+1}] en c + 1 variables.

    Parámetros:
    -----------
    c : int
        Clase (c ≥ 1).

    Retorna:
    --------
    Ley
        El conmutador normado a la izquierda de peso c + 1.
    """
    if c < 1:
        raise ValueError(f'La clase de la ley de nilpotencia debe ser positiva y es {c}')
    arbol = _x(1)
    for i in range(2, c + 2):
        arbol = Corchete(arbol, _x(i))
    return Ley(arbol)


def palabra_burnside(m: int) -> Ley:
    if m < 1:
        raise ValueError(f'El exponente de la ley de Burnside debe ser positivo y es {m}')
    return Ley(_x(1) if m == 1 else Potencia(_x(1), m))
