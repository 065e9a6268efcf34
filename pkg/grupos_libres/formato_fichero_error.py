"""
Módulo de excepciones personalizadas para los ficheros de presentaciones, certificados y trazas.

Clases:
    - FormatoFicheroError: Excepción personalizada para ficheros mal formados.
"""


class FormatoFicheroError(ValueError):
    """
    Excepción personalizada para indicar que un fichero no respeta el formato esperado.

    Atributos:
    ----------
    ruta : str
        Fichero leído.
    linea : int
        Número de línea (desde 1) donde se detectó el error; 0 si el error afecta al fichero completo.
    """

    def __init__(self, ruta: str, linea: int, motivo: str) -> None:
        self.ruta = ruta
        self.linea = linea
        donde = f'{ruta}:{linea}' if linea else ruta
        super().__init__(f'Formato incorrecto en {donde}: {motivo}')
