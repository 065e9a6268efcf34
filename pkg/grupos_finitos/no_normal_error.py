"""
Módulo de excepciones personalizadas para los grupos finitos.

Este módulo define una excepción personalizada `NoNormalError` que se utiliza cuando se intenta
formar el cociente de un grupo por un subgrupo que no es normal.

Clases:
    - NoNormalError: Excepción personalizada para subgrupos no normales.
"""


class NoNormalError(Exception):
    """
    Excepción personalizada para indicar que un subgrupo no es normal en el grupo ambiente.

    Atributos:
    ----------
    descriptor : str
        Descriptor del grupo ambiente.
    orden : int
        Orden del subgrupo que no es normal.

    Métodos:
    --------
    __init__(self, descriptor: str, orden: int) -> None:
        Inicializa la excepción con el descriptor del grupo y el orden del subgrupo.
    """

    def __init__(self, descriptor: str, orden: int) -> None:
        """
        Inicializa la excepción con un mensaje que incluye el grupo y el orden del subgrupo.

        Parámetros:
        -----------
        descriptor : str
            Descriptor del grupo ambiente.
        orden : int
            Orden del subgrupo que no es normal.
        """
        super().__init__(f'El subgrupo de orden {orden} no es normal en {descriptor}')
