"""
Módulo para matrices 2×2 con entradas en Z/n.

Las matrices se usan como automorfismos de (Z/n)² (acción sobre vectores columna) y como elementos de los
grupos matriciales `mat2`. Las entradas se normalizan siempre a [0, n), de modo que dos matrices iguales
tienen la misma codificación.

Clases:
    - Matriz2
"""

from typing import Sequence, Tuple


class Matriz2:
    """
    Clase que representa una matriz 2×2 con entradas módulo n.

    Atributos:
    ----------
    modulo : int
        Módulo n de las entradas.
    a, b, c, d : int
        Entradas de la matriz [[a, b], [c, d]], normalizadas a [0, n).
    determinante : int
        Determinante módulo n.

    Métodos:
    --------
    de_filas(modulo, filas) -> 'Matriz2':
        Crea una matriz a partir de sus filas (admite entradas negativas).
    identidad(modulo) -> 'Matriz2':
        Crea la matriz identidad.
    inversa() -> 'Matriz2':
        Calcula la inversa, si el determinante es una unidad.
    aplicar(vector) -> Tuple[int, int]:
        Aplica la matriz a un vector columna.
    como_tupla() -> Tuple[int, int, int, int]:
        Codificación canónica (a, b, c, d).
    """

    def __init__(self, modulo: int, a: int, b: int, c: int, d: int) -> None:
        self.__modulo = modulo
        self.__entradas = (a % modulo, b % modulo, c % modulo, d % modulo)

    @classmethod
    def de_filas(cls, modulo: int, filas: Sequence[Sequence[int]]) -> 'Matriz2':
        (a, b), (c, d) = filas
        return cls(modulo, a, b, c, d)

    @classmethod
    def de_tupla(cls, modulo: int, entradas: Tuple[int, int, int, int]) -> 'Matriz2':
        return cls(modulo, *entradas)

    @classmethod
    def identidad(cls, modulo: int) -> 'Matriz2':
        return cls(modulo, 1, 0, 0, 1)

    @property
    def modulo(self) -> int:
        return self.__modulo

    @property
    def a(self) -> int:
        return self.__entradas[0]

    @property
    def b(self) -> int:
        return self.__entradas[1]

    @property
    def c(self) -> int:
        return self.__entradas[2]

    @property
    def d(self) -> int:
        return self.__entradas[3]

    @property
    def determinante(self) -> int:
        a, b, c, d = self.__entradas
        return (a * d - b * c) % self.__modulo

    def es_invertible(self) -> bool:
        try:
            pow(self.determinante, -1, self.__modulo)
        except ValueError:
            return self.__modulo == 1
        return True

    def inversa(self) -> 'Matriz2':
        """
        Calcula la inversa como det⁻¹ · adj.

        Retorna:
        --------
        Matriz2
            La matriz inversa.

        Excepciones:
        ------------
        ValueError
            Si el determinante no es una unidad módulo n.
        """
        a, b, c, d = self.__entradas
        if self.__modulo == 1:
            return self
        k = pow(self.determinante, -1, self.__modulo)
        return Matriz2(self.__modulo, k * d, -k * b, -k * c, k * a)

    def aplicar(self, vector: Sequence[int]) -> Tuple[int, int]:
        a, b, c, d = self.__entradas
        u, v = vector
        return (a * u + b * v) % self.__modulo, (c * u + d * v) % self.__modulo

    def potencia(self, k: int) -> 'Matriz2':
        base = self if k >= 0 else self.inversa()
        resultado = Matriz2.identidad(self.__modulo)
        for _ in range(abs(k)):
            resultado = resultado * base
        return resultado

    def como_tupla(self) -> Tuple[int, int, int, int]:
        return self.__entradas

    def filas(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        a, b, c, d = self.__entradas
        return (a, b), (c, d)

    def __mul__(self, otra: 'Matriz2') -> 'Matriz2':
        a, b, c, d = self.__entradas
        e, f, g, h = otra.como_tupla()
        return Matriz2(self.__modulo, a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __eq__(self, otra: object) -> bool:
        if not isinstance(otra, Matriz2):
            return NotImplemented
        return self.__modulo == otra.modulo and self.__entradas == otra.como_tupla()

    def __hash__(self) -> int:
        return hash((self.__modulo, self.__entradas))

    def __str__(self) -> str:
        (a, b), (c, d) = self.filas()
        return f'[[{a},{b}],[{c},{d}]] mod {self.__modulo}'

    def __repr__(self) -> str:
        return f'Matriz2({self.__modulo}, {self.a}, {self.b}, {self.c}, {self.d})'

    def to_dict(self) -> dict:
        return {'modulo': self.__modulo, 'filas': [list(f) for f in self.filas()]}
