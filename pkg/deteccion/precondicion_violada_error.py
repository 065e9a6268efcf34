"""
Módulo de excepciones personalizadas para precondiciones de las comprobaciones.

Clases:
    - PrecondicionVioladaError: Excepción personalizada para entradas que no cumplen la precondición.
"""


class PrecondicionVioladaError(Exception):
    """
    Excepción personalizada para indicar que los subgrupos dados no son normales o no son nilpotentes.
    """

    def __init__(self, motivo: str) -> None:
        super().__init__(f'Precondición violada: {motivo}')
