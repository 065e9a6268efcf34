"""
Módulo de excepciones personalizadas para la búsqueda de testigos de truncamiento.

Clases:
    - BusquedaAgotadaError: Excepción personalizada para búsquedas sin testigo dentro de la cota.
"""


class BusquedaAgotadaError(Exception):
    """
    Excepción personalizada para indicar que no hay testigo en grado menor o igual que la cota.

    Atributos:
    ----------
    cota : int
        Grado máximo explorado.
    """

    def __init__(self, m: int, n: int, cota: int) -> None:
        self.cota = cota
        super().__init__(f'No hay permutaciones a, b de grado ≤ {cota} con órdenes ({n}, {m}, {m}) '
                         f'para a, b y ab que generen un grupo no abeliano')
