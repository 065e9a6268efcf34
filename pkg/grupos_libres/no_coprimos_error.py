"""
Módulo de excepciones personalizadas para los pares de exponentes.

Clases:
    - NoCoprimosError: Excepción personalizada para pares (m, n) con mcd distinto de 1.
"""


class NoCoprimosError(ValueError):
    """
    Excepción personalizada para indicar que los exponentes m y n no son coprimos.

    Atributos:
    ----------
    m : int
        Primer exponente.
    n : int
        Segundo exponente.
    """

    def __init__(self, m: int, n: int) -> None:
        self.m = m
        self.n = n
        super().__init__(f'Los exponentes {m} y {n} no son coprimos')
