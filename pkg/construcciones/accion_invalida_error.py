"""
Módulo de excepciones personalizadas para las construcciones de grupos.

Este módulo define una excepción personalizada `AccionInvalidaError` que se utiliza cuando la acción de un
producto semidirecto no define un homomorfismo K → Aut(N).

Clases:
    - AccionInvalidaError: Excepción personalizada para acciones inválidas.
"""

from typing import List


class AccionInvalidaError(Exception):
    """
    Excepción personalizada para indicar que una acción no es válida.

    Atributos:
    ----------
    violaciones : List[str]
        Descripción de cada comprobación fallida.

    Métodos:
    --------
    __init__(self, violaciones: List[str]) -> None:
        Inicializa la excepción con la lista de violaciones.
    """

    def __init__(self, violaciones: List[str]) -> None:
        """
        Inicializa la excepción con un mensaje que enumera las violaciones.

        Parámetros:
        -----------
        violaciones : List[str]
            Descripción de cada comprobación fallida.
        """
        self.violaciones = list(violaciones)
        super().__init__(f'La acción no es válida: {"; ".join(self.violaciones)}')
