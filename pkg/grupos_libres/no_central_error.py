"""
Módulo de excepciones personalizadas para relatores del cociente de clase 2.

Clases:
    - NoCentralError: Excepción personalizada para relatores cuya imagen no es central.
"""


class NoCentralError(ValueError):
    """
    Excepción personalizada para indicar que un relator tiene suma de exponentes no nula en a o en b.
    """

    def __init__(self, relator: str, alfa: int, beta: int) -> None:
        self.relator = relator
        super().__init__(f'El relator {relator} tiene sumas de exponentes ({alfa}, {beta}) y su imagen no es central')
