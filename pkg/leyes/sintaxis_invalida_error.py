"""
Módulo de excepciones personalizadas para el análisis de expresiones.

Este módulo define una excepción personalizada `SintaxisInvalidaError` que se utiliza cuando un texto no
se ajusta a la gramática de leyes, de palabras libres o de grupos.

Clases:
    - SintaxisInvalidaError: Excepción personalizada para errores de gramática.
"""


class SintaxisInvalidaError(SyntaxError):
    """
    Excepción personalizada para indicar que un texto no se ajusta a la gramática esperada.

    Atributos:
    ----------
    texto : str
        Texto analizado.
    posicion : int
        Posición (base 0) del símbolo problemático.
    token : str
        Símbolo encontrado en esa posición (vacío al final del texto).

    Métodos:
    --------
    __init__(self, texto: str, posicion: int, esperado: str) -> None:
        Inicializa la excepción con el texto, la posición y lo que se esperaba encontrar.
    """

    def __init__(self, texto: str, posicion: int, esperado: str) -> None:
        """
        Inicializa la excepción con un mensaje que nombra el símbolo problemático y su posición.

        Parámetros:
        -----------
        texto : str
            Texto analizado.
        posicion : int
            Posición (base 0) del error.
        esperado : str
            Descripción de lo que se esperaba.
        """
        self.texto = texto
        self.posicion = posicion
        self.token = texto[posicion] if posicion < len(texto) else ''
        encontrado = f"'{self.token}'" if self.token else 'el final del texto'
        super().__init__(f'Error de sintaxis en la posición {posicion} de "{texto}": '
                         f'se esperaba {esperado} y se encontró {encontrado}')
