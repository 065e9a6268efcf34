"""
Módulo de excepciones personalizadas para el cociente nilpotente de clase 2.

Clases:
    - AlfabetoNoSoportadoError: Excepción personalizada para palabras con letras fuera de {a, b}.
"""


class AlfabetoNoSoportadoError(ValueError):
    """
    Excepción personalizada para indicar que una palabra usa letras que el cociente no admite.

    Atributos:
    ----------
    letras : list
        Letras no admitidas, ordenadas.
    """

    def __init__(self, letras) -> None:
        self.letras = sorted(letras)
        super().__init__(f'Sólo se admiten las letras a y b; la palabra usa {", ".join(self.letras)}')
