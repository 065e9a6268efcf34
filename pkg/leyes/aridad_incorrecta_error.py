"""
Módulo de excepciones personalizadas para la evaluación de leyes.

Este módulo define una excepción personalizada `AridadIncorrectaError` que se utiliza cuando se evalúa una
ley con menos elementos que variables.

Clases:
    - AridadIncorrectaError: Excepción personalizada para tuplas demasiado cortas.
"""


class AridadIncorrectaError(ValueError):
    """
    Excepción personalizada para indicar que la tupla de evaluación es más corta que la aridad de la ley.

    Atributos:
    ----------
    ley : str
        Texto de la ley.
    aridad : int
        Número de variables de la ley.
    longitud : int
        Longitud de la tupla recibida.
    """

    def __init__(self, ley: str, aridad: int, longitud: int) -> None:
        super().__init__(f'La ley {ley} tiene {aridad} variables y se ha evaluado con {longitud} elementos')
