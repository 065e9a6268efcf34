"""
Módulo de excepciones personalizadas para las búsquedas de grupos.

Clases:
    - NoEncontradoError: Excepción personalizada para búsquedas que agotan su espacio.
"""


class NoEncontradoError(Exception):
    """
    Excepción personalizada para indicar que una búsqueda ha agotado su espacio sin encontrar un grupo.

    Atributos:
    ----------
    candidatos : int
        Número de candidatos examinados.
    """

    def __init__(self, descripcion: str, candidatos: int) -> None:
        self.candidatos = candidatos
        super().__init__(f'No se ha encontrado {descripcion} tras examinar {candidatos} candidatos')
