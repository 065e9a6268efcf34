"""
Módulo con el árbol sintáctico de las leyes de grupo y de las palabras libres.

Una ley es una palabra en las variables x1, x2, … construida con productos, inversos, potencias enteras,
conjugaciones u^v = v⁻¹uv y conmutadores [u, v] = u⁻¹v⁻¹uv. Los mismos nodos, con nombres de letra
arbitrarios, representan las palabras de los ficheros de presentaciones y trazas.

Clases:
    - Variable
    - Producto
    - Inverso
    - Potencia
    - Conjugado
    - Corchete
    - Ley

Funciones:
    - imprimir(nodo, nombres) -> str
    - evaluar_arbol(nodo, valor, operar, inverso, identidad) -> Any
"""

import re
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple, Union

_PATRON_INDICE = re.compile(r'x(\d+)')


@dataclass(frozen=True)
class Variable:
    nombre: str

    @property
    def indice(self) -> Optional[int]:
        """
        Índice de la variable en una ley: x → 1, y → 2, xN → N. None para otras letras.
        """
        if self.nombre == 'x':
            return 1
        if self.nombre == 'y':
            return 2
        coincidencia = _PATRON_INDICE.fullmatch(self.nombre)
        return int(coincidencia.group(1)) if coincidencia else None


@dataclass(frozen=True)
class Producto:
    factores: Tuple['Nodo', ...]


@dataclass(frozen=True)
class Inverso:
    base: 'Nodo'


@dataclass(frozen=True)
class Potencia:
    base: 'Nodo'
    exponente: int


@dataclass(frozen=True)
class Conjugado:
    base: 'Nodo'
    conjugador: 'Nodo'


@dataclass(frozen=True)
class Corchete:
    izquierda: 'Nodo'
    derecha: 'Nodo'


Nodo = Union[Variable, Producto, Inverso, Potencia, Conjugado, Corchete]

PALABRA_VACIA = Producto(())


def variables(nodo: Nodo) -> frozenset:
    match nodo:
        case Variable():
            return frozenset([nodo])
        case Producto(factores):
            return frozenset().union(*(variables(f) for f in factores))
        case Inverso(base) | Potencia(base, _):
            return variables(base)
        case Conjugado(base, conjugador):
            return variables(base) | variables(conjugador)
        case Corchete(izquierda, derecha):
            return variables(izquierda) | variables(derecha)
    raise TypeError(f'Nodo desconocido: {nodo!r}')


def _atomico(nodo: Nodo) -> bool:
    return isinstance(nodo, (Variable, Corchete)) or nodo == PALABRA_VACIA


def imprimir(nodo: Nodo, nombres: Optional[Dict[str, str]] = None, separador: str = '') -> str:
    """
    Escribe un nodo en la forma normal de la gramática.

    Parámetros:
    -----------
    nodo : Nodo
        Árbol a escribir.
    nombres : Optional[Dict[str, str]]
        Renombrado opcional de las variables.
    separador : str
        Texto entre factores consecutivos de un producto.

    Retorna:
    --------
    str
        Texto que, analizado de nuevo, produce el mismo árbol.
    """
    nombres = nombres or {}

    def base(n: Nodo) -> str:
        texto = imprimir(n, nombres, separador)
        return texto if _atomico(n) else f'({texto})'

    match nodo:
        case Variable(nombre):
            return nombres.get(nombre, nombre)
        case Producto(()):
            return '1'
        case Producto(factores):
            return separador.join(imprimir(f, nombres, separador) for f in factores)
        case Inverso(b):
            return f'{base(b)}^-1'
        case Potencia(b, exponente):
            return f'{base(b)}^{exponente}'
        case Conjugado(b, conjugador):
            return f'{base(b)}^{base(conjugador)}'
        case Corchete(izquierda, derecha):
            return f'[{imprimir(izquierda, nombres, separador)},{imprimir(derecha, nombres, separador)}]'
    raise TypeError(f'Nodo desconocido: {nodo!r}')


def evaluar_arbol(nodo: Nodo, valor: Callable[[Variable], Any], operar: Callable[[Any, Any], Any],
                  inverso: Callable[[Any], Any], identidad: Any) -> Any:
    """
    Evalúa un árbol de forma homomorfa en cualquier estructura de grupo.

    Parámetros:
    -----------
    nodo : Nodo
        Árbol a evaluar.
    valor : Callable[[Variable], Any]
        Valor asignado a cada variable.
    operar : Callable[[Any, Any], Any]
        Producto del grupo.
    inverso : Callable[[Any], Any]
        Inverso del grupo.
    identidad : Any
        Elemento neutro.

    Retorna:
    --------
    Any
        El valor de la palabra.
    """
    def ev(n: Nodo) -> Any:
        match n:
            case Variable():
                return valor(n)
            case Producto(factores):
                resultado = identidad
                for f in factores:
                    resultado = operar(resultado, ev(f))
                return resultado
            case Inverso(b):
                return inverso(ev(b))
            case Potencia(b, exponente):
                g = ev(b)
                if exponente < 0:
                    g, exponente = inverso(g), -exponente
                resultado = identidad
                while exponente:
                    if exponente & 1:
                        resultado = operar(resultado, g)
                    g = operar(g, g)
                    exponente >>= 1
                return resultado
            case Conjugado(b, conjugador):
                c = ev(conjugador)
                return operar(operar(inverso(c), ev(b)), c)
            case Corchete(izquierda, derecha):
                u, v = ev(izquierda), ev(derecha)
                return operar(operar(inverso(u), inverso(v)), operar(u, v))
        raise TypeError(f'Nodo desconocido: {n!r}')

    return ev(nodo)


class Ley:
    """
    Clase que representa una ley de grupo: una palabra en las variables x1, …, xk.

    Atributos:
    ----------
    arbol : Nodo
        Árbol sintáctico de la palabra.
    aridad : int
        Mayor índice de variable que aparece (al menos 1).
    texto : str
        Forma normal de la ley; usa x, y si la aridad es como mucho 2 y x1, x2, … en otro caso.

    Métodos:
    --------
    to_dict() -> dict:
        Convierte la ley a un diccionario.
    """

    def __init__(self, arbol: Nodo) -> None:
        indices = []
        for v in variables(arbol):
            if v.indice is None or v.indice < 1:
                raise ValueError(f'La variable {v.nombre} no es una variable de ley')
            indices.append(v.indice)
        self.__arbol = arbol
        self.__aridad = max(indices, default=1)

    @property
    def arbol(self) -> Nodo:
        return self.__arbol

    @property
    def aridad(self) -> int:
        return self.__aridad

    @property
    def texto(self) -> str:
        nombres = {}
        for v in variables(self.__arbol):
            if self.__aridad <= 2:
                nombres[v.nombre] = 'x' if v.indice == 1 else 'y'
            else:
                nombres[v.nombre] = f'x{v.indice}'
        return imprimir(self.__arbol, nombres)

    def __eq__(self, otra: object) -> bool:
        if not isinstance(otra, Ley):
            return NotImplemented
        return self.texto == otra.texto

    def __hash__(self) -> int:
        return hash(self.texto)

    def __str__(self) -> str:
        return self.texto

    def __repr__(self) -> str:
        return f'Ley({self.texto!r})'

    def to_dict(self) -> dict:
        return {'ley': self.texto, 'aridad': self.__aridad}
