"""
Módulo base para la representación de grupos finitos.

Este módulo define la clase `Grupo`, que representa un grupo finito como un soporte enumerable
(los elementos, con codificación canónica) junto con un oráculo de multiplicación. Las construcciones
concretas (cíclicos, productos, semidirectos, matrices, cocientes, permutaciones) heredan de ella y
sólo tienen que implementar `operar` e `inverso`.

Clases:
    - Grupo
"""

import itertools
import random
from typing import Any, List, Sequence, Tuple

from config import COTA_ASOCIATIVIDAD

Elemento = Any


class Grupo:
    """
    Clase base que representa un grupo finito dado por generadores y un oráculo de multiplicación.

    Atributos:
    ----------
    descriptor : str
        Expresión de construcción del grupo (en la gramática de grupos).
    identidad : Elemento
        Elemento neutro, en su codificación canónica.
    generadores : Tuple[Elemento, ...]
        Generadores del grupo.
    elementos : Tuple[Elemento, ...]
        Soporte completo, ordenado por codificación (se calcula al primer acceso).
    orden : int
        Número de elementos.

    Métodos:
    --------
    operar(g, h) -> Elemento:
        Producto g·h (a implementar por cada construcción).
    inverso(g) -> Elemento:
        Inverso de g (a implementar por cada construcción).
    potencia(g, k) -> Elemento:
        Potencia entera g^k.
    conjugado(g, h) -> Elemento:
        Conjugado g^h = h⁻¹·g·h.
    conmutador(g, h) -> Elemento:
        Conmutador [g, h] = g⁻¹·h⁻¹·g·h.
    comprobar_axiomas() -> List[str]:
        Comprueba los axiomas de grupo y devuelve las violaciones encontradas.
    """

    def __init__(self, descriptor: str, identidad: Elemento, generadores: Sequence[Elemento]) -> None:
        """
        Inicializa el grupo. Los generadores repetidos o iguales a la identidad se descartan.

        Parámetros:
        -----------
        descriptor : str
            Expresión de construcción del grupo.
        identidad : Elemento
            Elemento neutro.
        generadores : Sequence[Elemento]
            Generadores del grupo.
        """
        self.__descriptor = descriptor
        self.__identidad = identidad
        unicos: List[Elemento] = []
        for g in generadores:
            if g != identidad and g not in unicos:
                unicos.append(g)
        self.__generadores = tuple(unicos)
        self.__elementos = None
        self.__indice = None

    @property
    def descriptor(self) -> str:
        return self.__descriptor

    @property
    def identidad(self) -> Elemento:
        return self.__identidad

    @property
    def generadores(self) -> Tuple[Elemento, ...]:
        return self.__generadores

    @property
    def ambiente(self) -> 'Grupo':
        """
        Un grupo es su propio ambiente; así `Grupo` y `Subgrupo` comparten interfaz.
        """
        return self

    @property
    def elementos(self) -> Tuple[Elemento, ...]:
        if self.__elementos is None:
            self.__elementos = self.__enumerar()
        return self.__elementos

    @property
    def orden(self) -> int:
        return len(self.elementos)

    def __enumerar(self) -> Tuple[Elemento, ...]:
        vistos = {self.__identidad}
        frontera = [self.__identidad]
        while frontera:
            x = frontera.pop()
            for g in self.__generadores:
                y = self.operar(x, g)
                if y not in vistos:
                    vistos.add(y)
                    frontera.append(y)
        return tuple(sorted(vistos))

    def indice(self, g: Elemento) -> int:
        """
        Retorna la posición de g en el soporte ordenado (su identificador de elemento).
        """
        if self.__indice is None:
            self.__indice = {x: i for i, x in enumerate(self.elementos)}
        return self.__indice[g]

    def operar(self, g: Elemento, h: Elemento) -> Elemento:
        raise NotImplementedError

    def inverso(self, g: Elemento) -> Elemento:
        raise NotImplementedError

    def potencia(self, g: Elemento, k: int) -> Elemento:
        """
        Calcula g^k por cuadrados sucesivos; los exponentes negativos usan el inverso.

        Parámetros:
        -----------
        g : Elemento
            Base.
        k : int
            Exponente entero.

        Retorna:
        --------
        Elemento
            La potencia g^k.
        """
        if k < 0:
            g, k = self.inverso(g), -k
        resultado = self.__identidad
        while k:
            if k & 1:
                resultado = self.operar(resultado, g)
            g = self.operar(g, g)
            k >>= 1
        return resultado

    def conjugado(self, g: Elemento, h: Elemento) -> Elemento:
        return self.operar(self.operar(self.inverso(h), g), h)

    def conmutador(self, g: Elemento, h: Elemento) -> Elemento:
        return self.operar(self.operar(self.inverso(g), self.inverso(h)), self.operar(g, h))

    def contiene(self, g: Elemento) -> bool:
        if self.__indice is None:
            self.__indice = {x: i for i, x in enumerate(self.elementos)}
        return g in self.__indice

    def comprobar_axiomas(self, muestras: int = 20000) -> List[str]:
        """
        Comprueba identidad, inversos y asociatividad.

        La asociatividad se comprueba sobre todas las ternas si el orden no supera `COTA_ASOCIATIVIDAD`
        y sobre una muestra determinista de ternas en otro caso.

        Parámetros:
        -----------
        muestras : int
            Número de ternas a comprobar en grupos grandes.

        Retorna:
        --------
        List[str]
            Descripción de cada violación encontrada (vacía si el grupo es correcto).
        """
        violaciones = []
        e = self.__identidad
        for g in self.elementos:
            if self.operar(e, g) != g or self.operar(g, e) != g:
                violaciones.append(f'La identidad falla con {g}')
            if self.operar(g, self.inverso(g)) != e:
                violaciones.append(f'El inverso de {g} es incorrecto')
        if self.orden <= COTA_ASOCIATIVIDAD:
            ternas = itertools.product(self.elementos, repeat=3)
        else:
            azar = random.Random(self.orden)
            ternas = (tuple(azar.choice(self.elementos) for _ in range(3)) for _ in range(muestras))
        for g, h, k in ternas:
            if self.operar(self.operar(g, h), k) != self.operar(g, self.operar(h, k)):
                violaciones.append(f'No se cumple la asociatividad en ({g}, {h}, {k})')
                break
        return violaciones

    def __len__(self) -> int:
        return self.orden

    def __iter__(self):
        return iter(self.elementos)

    def __contains__(self, g: Elemento) -> bool:
        return self.contiene(g)

    def __str__(self) -> str:
        return f'{self.__descriptor} (orden {self.orden})'
