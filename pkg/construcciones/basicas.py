"""
Módulo con las construcciones básicas de grupos finitos.

Clases:
    - GrupoCiclico: Z/n con codificación por residuos.
    - ProductoDirecto: producto directo de una lista de grupos, con codificación por tuplas.
    - GrupoHeisenberg3: grupo de Heisenberg módulo 3 (orden 27, exponente 3).
    - GrupoUnidades: grupo multiplicativo U(n) de Z/n.
    - GrupoMatricial: subgrupo de GL₂(Z/n) generado por una lista de matrices.
    - GrupoPermutaciones: subgrupo de S_d generado por una lista de permutaciones.

Funciones:
    - grupo_gl2(n) -> GrupoMatricial
"""

import math
from typing import Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from grupos_finitos.grupo import Elemento, Grupo
from grupos_finitos.matriz2 import Matriz2


class GrupoCiclico(Grupo):
    """
    Grupo cíclico Z/n; los elementos son los residuos 0, …, n − 1 y el generador es 1.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f'El orden de un grupo cíclico debe ser positivo y es {n}')
        self.__n = n
        super().__init__(f'Z({n})', 0, [1 % n])

    @property
    def n(self) -> int:
        return self.__n

    def operar(self, g: int, h: int) -> int:
        return (g + h) % self.__n

    def inverso(self, g: int) -> int:
        return -g % self.__n


class ProductoDirecto(Grupo):
    """
    Clase que representa el producto directo G₁ × … × G_r.

    Atributos:
    ----------
    partes : Tuple[Grupo, ...]
        Factores del producto.

    Métodos:
    --------
    incrustar(i, g) -> Tuple:
        Incrusta un elemento del factor i en el producto.
    """

    def __init__(self, partes: Sequence[Grupo]) -> None:
        self.__partes = tuple(partes)
        identidad = tuple(p.identidad for p in self.__partes)
        generadores = [self.incrustar(i, g) for i, p in enumerate(self.__partes) for g in p.generadores]
        super().__init__(f'prod({",".join(p.descriptor for p in self.__partes)})', identidad, generadores)

    @property
    def partes(self) -> Tuple[Grupo, ...]:
        return self.__partes

    def incrustar(self, i: int, g: Elemento) -> Tuple:
        return tuple(g if j == i else p.identidad for j, p in enumerate(self.__partes))

    def operar(self, g: Tuple, h: Tuple) -> Tuple:
        return tuple(p.operar(a, b) for p, a, b in zip(self.__partes, g, h))

    def inverso(self, g: Tuple) -> Tuple:
        return tuple(p.inverso(a) for p, a in zip(self.__partes, g))


class GrupoHeisenberg3(Grupo):
    """
    Grupo de Heisenberg módulo 3: matrices unitriangulares [[1, a, c], [0, 1, b], [0, 0, 1]] sobre Z/3,
    codificadas como ternas (a, b, c). Los generadores son x = (1, 0, 0) e y = (0, 1, 0), y su conmutador
    z = [x, y] = (0, 0, 1) es central.
    """

    X = (1, 0, 0)
    Y = (0, 1, 0)
    Z = (0, 0, 1)

    def __init__(self) -> None:
        super().__init__('heis3', (0, 0, 0), [self.X, self.Y])

    def operar(self, g: Tuple[int, int, int], h: Tuple[int, int, int]) -> Tuple[int, int, int]:
        a, b, c = g
        d, e, f = h
        return (a + d) % 3, (b + e) % 3, (c + f + a * e) % 3

    def inverso(self, g: Tuple[int, int, int]) -> Tuple[int, int, int]:
        a, b, c = g
        return -a % 3, -b % 3, (a * b - c) % 3


class GrupoUnidades(Grupo):
    """
    Grupo de unidades U(n) = (Z/n)^× con el producto módulo n.

    Los generadores se eligen de forma voraz: se recorren las unidades en orden creciente y se añade
    cada una que no esté ya en el subgrupo generado por las anteriores.
    """

    def __init__(self, n: int) -> None:
        if n < 1:
            raise ValueError(f'El módulo debe ser positivo y es {n}')
        self.__n = n
        unidades = [u for u in range(n) if math.gcd(u, n) == 1] if n > 1 else [0]
        generadores = []
        generado = {1 % n}
        for u in unidades:
            if u in generado:
                continue
            generadores.append(u)
            frontera = list(generado)
            while frontera:
                g = frontera.pop()
                for s in generadores:
                    h = g * s % n
                    if h not in generado:
                        generado.add(h)
                        frontera.append(h)
        super().__init__(f'U({n})', 1 % n, generadores)

    @property
    def n(self) -> int:
        return self.__n

    def operar(self, g: int, h: int) -> int:
        return g * h % self.__n

    def inverso(self, g: int) -> int:
        return pow(g, -1, self.__n) if self.__n > 1 else 0


class GrupoMatricial(Grupo):
    """
    Subgrupo de GL₂(Z/n) generado por matrices invertibles; los elementos son 4-tuplas (a, b, c, d).
    """

    def __init__(self, n: int, generadores: Sequence[Matriz2], descriptor: str = '') -> None:
        for m in generadores:
            if not m.es_invertible():
                raise ValueError(f'La matriz {m} no es invertible')
        self.__n = n
        matrices = ','.join('[[{},{}],[{},{}]]'.format(*m.como_tupla()) for m in generadores)
        super().__init__(descriptor or f'mat2({n};{matrices})',
                         Matriz2.identidad(n).como_tupla(), [m.como_tupla() for m in generadores])

    @property
    def n(self) -> int:
        return self.__n

    def matriz(self, g: Tuple[int, int, int, int]) -> Matriz2:
        return Matriz2.de_tupla(self.__n, g)

    def operar(self, g: Tuple[int, int, int, int], h: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        return (self.matriz(g) * self.matriz(h)).como_tupla()

    def inverso(self, g: Tuple[int, int, int, int]) -> Tuple[int, int, int, int]:
        return self.matriz(g).inversa().como_tupla()


def grupo_gl2(n: int) -> GrupoMatricial:
    """
    GL₂(Z/n), generado por las transvecciones elementales y por las diagonales diag(u, 1) con u generador
    de U(n).
    """
    generadores = [Matriz2.de_filas(n, [[1, 1], [0, 1]]), Matriz2.de_filas(n, [[1, 0], [1, 1]])]
    generadores += [Matriz2.de_filas(n, [[u, 0], [0, 1]]) for u in GrupoUnidades(n).generadores]
    return GrupoMatricial(n, generadores, f'GL2(Z/{n})')


class GrupoPermutaciones(Grupo):
    """
    Subgrupo de S_d generado por permutaciones en forma de lista (p[i] es la imagen de i).

    Los elementos se codifican por su forma de lista; el cálculo se delega en
    `sympy.combinatorics.PermutationGroup`. El producto p·q aplica primero p y después q, como en sympy.
    """

    def __init__(self, grado: int, generadores: Sequence[Sequence[int]]) -> None:
        self.__grado = grado
        self.__permutaciones = PermutationGroup([Permutation(list(p), size=grado) for p in generadores]
                                                or [Permutation(grado - 1)])
        self.__elementos_sympy = None
        super().__init__(f'perm({grado};{";".join(" ".join(map(str, p)) for p in generadores)})',
                         tuple(range(grado)), [tuple(p) for p in generadores])

    @property
    def grado(self) -> int:
        return self.__grado

    @property
    def permutaciones(self) -> PermutationGroup:
        return self.__permutaciones

    @property
    def elementos(self) -> Tuple[Tuple[int, ...], ...]:
        if self.__elementos_sympy is None:
            self.__elementos_sympy = tuple(sorted(tuple(p.array_form) for p in self.__permutaciones.generate()))
        return self.__elementos_sympy

    @property
    def orden(self) -> int:
        return int(self.__permutaciones.order())

    def operar(self, p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple((Permutation(list(p)) * Permutation(list(q))).array_form)

    def inverso(self, p: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple((~Permutation(list(p))).array_form)
