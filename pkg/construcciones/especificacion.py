"""
Módulo con el analizador de la gramática de grupos.

Gramática:

    grupo   := 'Z(' ENTERO ')' | 'hol(' ENTERO ')' | 'heis3' | 'W4374'
             | 'prod(' grupo (',' grupo)* ')'
             | 'sd(' grupo ',' grupo (';' accion)? ')'
             | 'mat2(' ENTERO ';' matriz (',' matriz)* ')'
    accion  := elemento (',' elemento)*
    elemento:= (NOMBRE '=')? (matriz | ENTERO)
    matriz  := '[[' ENTERO ',' ENTERO '],[' ENTERO ',' ENTERO ']]'

Los elementos de la acción se asignan por posición a los generadores de K; los nombres son etiquetas.
Una matriz actúa sobre N = Z/r × Z/s por vectores columna y un entero k actúa sobre un N cíclico
multiplicando por k. `W4374` abrevia la expresión completa del grupo W.

Clases:
    - AnalizadorGrupos

Funciones:
    - construir_grupo(texto) -> Grupo
"""

import math
import re
from typing import List, Optional, Tuple

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3, GrupoMatricial, ProductoDirecto
from construcciones.grupo_w import construir_w
from construcciones.semidirecto import EspecificacionAccion, ProductoSemidirecto, holomorfo_ciclico
from grupos_finitos.grupo import Grupo
from grupos_finitos.matriz2 import Matriz2
from leyes.sintaxis_invalida_error import SintaxisInvalidaError

_ENTERO = re.compile(r'[+-]?[0-9]+')
_NOMBRE = re.compile(r'[A-Za-z_][A-Za-z0-9_]*')


class AnalizadorGrupos:
    """
    Analizador descendente recursivo de la gramática de grupos.

    Métodos:
    --------
    analizar() -> Grupo:
        Analiza el texto completo y construye el grupo.
    """

    def __init__(self, texto: str) -> None:
        self.__texto = texto
        self.__pos = 0

    def analizar(self) -> Grupo:
        """
        Analiza el texto completo y construye el grupo.

        Retorna:
        --------
        Grupo
            El grupo descrito.

        Excepciones:
        ------------
        SintaxisInvalidaError
            Si el texto no se ajusta a la gramática o describe una construcción imposible.
        AccionInvalidaError
            Si la acción de un producto semidirecto no es válida.
        """
        grupo = self.__grupo()
        self.__saltar_espacios()
        if self.__pos < len(self.__texto):
            self.__error('el final de la expresión')
        return grupo

    def __error(self, esperado: str, posicion: Optional[int] = None) -> None:
        raise SintaxisInvalidaError(self.__texto, self.__pos if posicion is None else posicion, esperado)

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

    def __entero(self) -> int:
        self.__saltar_espacios()
        coincidencia = _ENTERO.match(self.__texto, self.__pos)
        if coincidencia is None:
            self.__error('un entero')
        self.__pos = coincidencia.end()
        return int(coincidencia.group())

    def __nombre(self) -> str:
        self.__saltar_espacios()
        coincidencia = _NOMBRE.match(self.__texto, self.__pos)
        if coincidencia is None:
            self.__error('un nombre de construcción (Z, prod, sd, hol, heis3, W4374, mat2)')
        self.__pos = coincidencia.end()
        return coincidencia.group()

    def __texto_desde(self, inicio: int) -> str:
        return re.sub(r'\s+', '', self.__texto[inicio:self.__pos])

    def __grupo(self) -> Grupo:
        self.__saltar_espacios()
        inicio = self.__pos
        nombre = self.__nombre()
        try:
            match nombre:
                case 'heis3':
                    return GrupoHeisenberg3()
                case 'W4374':
                    return construir_w()
                case 'Z' | 'hol':
                    self.__consumir('(')
                    n = self.__entero()
                    self.__consumir(')')
                    return GrupoCiclico(n) if nombre == 'Z' else holomorfo_ciclico(n)
                case 'prod':
                    self.__consumir('(')
                    partes = [self.__grupo()]
                    while self.__siguiente() == ',':
                        self.__pos += 1
                        partes.append(self.__grupo())
                    self.__consumir(')')
                    return ProductoDirecto(partes)
                case 'sd':
                    return self.__semidirecto(inicio)
                case 'mat2':
                    self.__consumir('(')
                    n = self.__entero()
                    self.__consumir(';')
                    matrices = [self.__matriz()]
                    while self.__siguiente() == ',':
                        self.__pos += 1
                        matrices.append(self.__matriz())
                    self.__consumir(')')
                    return GrupoMatricial(n, [Matriz2.de_filas(n, m) for m in matrices])
        except ValueError as error:
            self.__error(f'una construcción válida ({error})', inicio)
        self.__error('un nombre de construcción (Z, prod, sd, hol, heis3, W4374, mat2)', inicio)

    def __matriz(self) -> List[List[int]]:
        filas = []
        self.__consumir('[')
        for i in range(2):
            if i:
                self.__consumir(',')
            self.__consumir('[')
            a = self.__entero()
            self.__consumir(',')
            b = self.__entero()
            self.__consumir(']')
            filas.append([a, b])
        self.__consumir(']')
        return filas

    def __semidirecto(self, inicio: int) -> ProductoSemidirecto:
        self.__consumir('(')
        N = self.__grupo()
        self.__consumir(',')
        K = self.__grupo()
        elementos: List[Tuple[Optional[str], object]] = []
        if self.__siguiente() == ';':
            self.__pos += 1
            elementos.append(self.__elemento_accion())
            while self.__siguiente() == ',':
                self.__pos += 1
                elementos.append(self.__elemento_accion())
        self.__consumir(')')

        modulo = 1
        if isinstance(N, ProductoDirecto) and all(isinstance(p, GrupoCiclico) for p in N.partes):
            modulo = math.lcm(*(p.n for p in N.partes))
        imagenes, etiquetas = [], []
        for i, (etiqueta, valor) in enumerate(elementos):
            etiquetas.append(etiqueta or f'k{i + 1}')
            if isinstance(valor, int):
                imagenes.append(EspecificacionAccion.de_enteros(N, [valor]).imagenes[0])
            else:
                imagenes.append(EspecificacionAccion.de_matrices(N, [Matriz2.de_filas(modulo, valor)]).imagenes[0])
        if not elementos:
            imagenes = [N.generadores for _ in K.generadores]
            etiquetas = None
        return ProductoSemidirecto(N, K, EspecificacionAccion(imagenes, etiquetas), self.__texto_desde(inicio))

    def __elemento_accion(self) -> Tuple[Optional[str], object]:
        self.__saltar_espacios()
        etiqueta = None
        coincidencia = _NOMBRE.match(self.__texto, self.__pos)
        if coincidencia:
            self.__pos = coincidencia.end()
            self.__consumir('=')
            etiqueta = coincidencia.group()
        if self.__siguiente() == '[':
            return etiqueta, self.__matriz()
        return etiqueta, self.__entero()


def construir_grupo(texto: str) -> Grupo:
    """
    Construye el grupo descrito por una expresión de la gramática de grupos.

    Parámetros:
    -----------
    texto : str
        Expresión, por ejemplo "hol(7)" o "sd(Z(7),Z(6);3)".

    Retorna:
    --------
    Grupo
        El grupo construido.
    """
    return AnalizadorGrupos(texto).analizar()
