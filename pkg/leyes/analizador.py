"""
Módulo con el analizador sintáctico de leyes y palabras.

Gramática:

    palabra    := factor+
    factor     := base ('^' exponente)?
    base       := VAR | '1' | '(' palabra ')' | '[' palabra ',' palabra ']'
    exponente  := ENTERO | base

Un exponente entero (con signo opcional) es una potencia y un exponente palabra es una conjugación. En modo
ley las variables son `x`, `y` y `x<dígitos>`; en modo palabra son las letras de un alfabeto dado.

Clases:
    - Analizador

Funciones:
    - analizar_ley(texto) -> Ley
    - analizar_palabra(texto, alfabeto) -> Nodo

Excepciones:
    - SintaxisInvalidaError: Error personalizado para textos que no se ajustan a la gramática.
"""

import re
from typing import Iterable, List, Optional

from leyes.ley import (PALABRA_VACIA, Conjugado, Corchete, Inverso, Ley, Nodo, Potencia, Producto,
                       Variable)
from leyes.sintaxis_invalida_error import SintaxisInvalidaError

_VARIABLE = re.compile(r'[A-Za-z][0-9]*')
_ENTERO = re.compile(r'[+-]?[0-9]+')
_VARIABLE_LEY = re.compile(r'x|y|x[1-9][0-9]*')


class Analizador:
    """
    Analizador descendente recursivo de la gramática de palabras.

    Atributos:
    ----------
    texto : str
        Texto a analizar.
    alfabeto : Optional[frozenset]
        Letras admitidas en modo palabra; None en modo ley.

    Métodos:
    --------
    analizar() -> Nodo:
        Analiza el texto completo.
    """

    def __init__(self, texto: str, alfabeto: Optional[Iterable[str]] = None) -> None:
        self.__texto = texto
        self.__pos = 0
        self.__alfabeto = frozenset(alfabeto) if alfabeto is not None else None

    def analizar(self) -> Nodo:
        """
        Analiza el texto completo.

        Retorna:
        --------
        Nodo
            Árbol de la palabra.

        Excepciones:
        ------------
        SintaxisInvalidaError
            Si el texto no se ajusta a la gramática.
        """
        nodo = self.__palabra()
        self.__saltar_espacios()
        if self.__pos < len(self.__texto):
            self.__error('un factor')
        return nodo

    def __error(self, esperado: str) -> None:
        raise SintaxisInvalidaError(self.__texto, self.__pos, esperado)

    def __saltar_espacios(self) -> None:
        while self.__pos < len(self.__texto) and self.__texto[self.__pos].isspace():
            self.__pos += 1

    def __siguiente(self) -> str:
        self.__saltar_espacios()
        return self.__texto[self.__pos] if self.__pos < len(self.__texto) else ''

    def __consumir(self, simbolo: str) -> None:
        if self.__siguiente() != simbolo:
            self.__error(f"'{simbolo}'")
        self.__pos += 1

    def __empieza_base(self) -> bool:
        c = self.__siguiente()
        return c != '' and (c.isalpha() or c in '([1')

    def __palabra(self) -> Nodo:
        if not self.__empieza_base():
            self.__error('una variable, "1", "(" o "["')
        factores: List[Nodo] = []
        while self.__empieza_base():
            factor = self.__factor()
            if isinstance(factor, Producto):
                factores.extend(factor.factores)
            else:
                factores.append(factor)
        return factores[0] if len(factores) == 1 else Producto(tuple(factores))

    def __factor(self) -> Nodo:
        base = self.__base()
        if self.__siguiente() != '^':
            return base
        self.__pos += 1
        self.__saltar_espacios()
        entero = _ENTERO.match(self.__texto, self.__pos)
        if entero:
            self.__pos = entero.end()
            k = int(entero.group())
            if k == 0:
                return PALABRA_VACIA
            if k == 1:
                return base
            if k == -1:
                return Inverso(base)
            return Potencia(base, k)
        if not self.__empieza_base():
            self.__error('un entero o una base como exponente')
        return Conjugado(base, self.__base())

    def __base(self) -> Nodo:
        c = self.__siguiente()
        if c == '(':
            self.__pos += 1
            nodo = self.__palabra()
            self.__consumir(')')
            return nodo
        if c == '[':
            self.__pos += 1
            izquierda = self.__palabra()
            self.__consumir(',')
            derecha = self.__palabra()
            self.__consumir(']')
            return Corchete(izquierda, derecha)
        if c == '1':
            self.__pos += 1
            return PALABRA_VACIA
        coincidencia = _VARIABLE.match(self.__texto, self.__pos)
        if coincidencia is None:
            self.__error('una variable')
        nombre = coincidencia.group()
        if self.__alfabeto is None:
            if not _VARIABLE_LEY.fullmatch(nombre):
                self.__error('una variable x, y o x<n>')
        elif nombre not in self.__alfabeto:
            self.__error(f'una letra del alfabeto {" ".join(sorted(self.__alfabeto))}')
        self.__pos = coincidencia.end()
        return Variable(nombre)


def analizar_ley(texto: str) -> Ley:
    """
    Analiza el texto de una ley.

    Parámetros:
    -----------
    texto : str
        Texto en la gramática de leyes, por ejemplo "[x^2,x^y]".

    Retorna:
    --------
    Ley
        La ley analizada.

    Excepciones:
    ------------
    SintaxisInvalidaError
        Si el texto no se ajusta a la gramática.
    """
    return Ley(Analizador(texto).analizar())


def analizar_palabra(texto: str, alfabeto: Iterable[str]) -> Nodo:
    return Analizador(texto, alfabeto).analizar()
