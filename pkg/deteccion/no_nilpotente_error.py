"""
Módulo de excepciones personalizadas para comprobaciones que exigen grupos nilpotentes.

Clases:
    - NoNilpotenteError: Excepción personalizada para grupos que no son nilpotentes.
"""


class NoNilpotenteError(Exception):
    """
    Excepción personalizada para indicar que un grupo no es nilpotente.

    Atributos:
    ----------
    descriptor : str
        Descriptor del grupo.
    """

    def __init__(self, descriptor: str) -> None:
        self.descriptor = descriptor
        super().__init__(f'El grupo {descriptor} no es nilpotente')
