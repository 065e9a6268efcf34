"""
Módulo para productos semidirectos y holomorfos de grupos cíclicos.

El producto semidirecto N ⋊ K se construye con acción por la izquierda: cada generador de K actúa sobre N
mediante un automorfismo α, y el producto de pares es (n₁, k₁)(n₂, k₂) = (n₁ · α_{k₁}(n₂), k₁k₂).
La acción se valida antes de construir el grupo: cada α debe ser un automorfismo de N y k ↦ α_k debe
ser un homomorfismo K → Aut(N).

Clases:
    - EspecificacionAccion
    - ProductoSemidirecto

Funciones:
    - extender_homomorfismo(A, imagenes, operar, identidad) -> Optional[Dict]
    - validar_accion(N, K, accion) -> List[str]
    - holomorfo_ciclico(n) -> ProductoSemidirecto

Excepciones:
    - AccionInvalidaError: Error personalizado para acciones que no definen un homomorfismo K → Aut(N).
"""

import logging
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from construcciones.accion_invalida_error import AccionInvalidaError
from construcciones.basicas import GrupoCiclico, GrupoUnidades, ProductoDirecto
from grupos_finitos.grupo import Elemento, Grupo
from grupos_finitos.matriz2 import Matriz2
from grupos_finitos.series import clausura
from grupos_finitos.subgrupo import Subgrupo

logger = logging.getLogger(__name__)

Tabla = Tuple[int, ...]


class EspecificacionAccion:
    """
    Clase que describe la acción de los generadores de K sobre N.

    Cada generador de K, por posición, recibe las imágenes de los generadores de N bajo su automorfismo.
    Las matrices (sobre N = Z/r₁ × Z/r₂) y los enteros (sobre N cíclico) se traducen a imágenes.

    Atributos:
    ----------
    imagenes : Tuple[Tuple[Elemento, ...], ...]
        Para cada generador de K, las imágenes de los generadores de N.
    etiquetas : Tuple[str, ...]
        Nombres opcionales de los generadores de K (por ejemplo x, y, t).

    Métodos:
    --------
    de_matrices(N, matrices, etiquetas) -> 'EspecificacionAccion':
        Acción por matrices 2×2 sobre vectores columna.
    de_enteros(N, enteros, etiquetas) -> 'EspecificacionAccion':
        Acción por multiplicación sobre un N cíclico.
    to_dict() -> dict:
        Convierte la especificación a un diccionario.
    """

    def __init__(self, imagenes: Sequence[Sequence[Elemento]], etiquetas: Optional[Sequence[str]] = None) -> None:
        self.__imagenes = tuple(tuple(i) for i in imagenes)
        self.__etiquetas = tuple(etiquetas) if etiquetas else tuple(f'k{i + 1}' for i in range(len(imagenes)))

    @classmethod
    def de_matrices(cls, N: Grupo, matrices: Sequence[Matriz2],
                    etiquetas: Optional[Sequence[str]] = None) -> 'EspecificacionAccion':
        """
        Traduce matrices a imágenes: la columna j de la matriz es la imagen del j-ésimo generador de N.

        Parámetros:
        -----------
        N : Grupo
            Producto directo de dos grupos cíclicos.
        matrices : Sequence[Matriz2]
            Una matriz por generador de K.
        etiquetas : Optional[Sequence[str]]
            Nombres de los generadores de K.

        Retorna:
        --------
        EspecificacionAccion
            La especificación equivalente por imágenes.

        Excepciones:
        ------------
        AccionInvalidaError
            Si N no es un producto de dos grupos cíclicos.
        """
        if not (isinstance(N, ProductoDirecto) and len(N.partes) == 2
                and all(isinstance(p, GrupoCiclico) for p in N.partes)):
            raise AccionInvalidaError([f'Una acción matricial exige N = Z/r × Z/s y N es {N.descriptor}'])
        r, s = (p.n for p in N.partes)
        imagenes = [((m.a % r, m.c % s), (m.b % r, m.d % s)) for m in matrices]
        return cls(imagenes, etiquetas)

    @classmethod
    def de_enteros(cls, N: Grupo, enteros: Sequence[int],
                   etiquetas: Optional[Sequence[str]] = None) -> 'EspecificacionAccion':
        if not isinstance(N, GrupoCiclico):
            raise AccionInvalidaError([f'Una acción por enteros exige un N cíclico y N es {N.descriptor}'])
        return cls([(k % N.n,) if N.generadores else () for k in enteros], etiquetas)

    @property
    def imagenes(self) -> Tuple[Tuple[Elemento, ...], ...]:
        return self.__imagenes

    @property
    def etiquetas(self) -> Tuple[str, ...]:
        return self.__etiquetas

    def __len__(self) -> int:
        return len(self.__imagenes)

    def to_dict(self) -> dict:
        return {e: [repr(i) for i in imgs] for e, imgs in zip(self.__etiquetas, self.__imagenes)}


def extender_homomorfismo(A: Grupo, imagenes: Sequence[Any], operar: Callable[[Any, Any], Any],
                          identidad: Any) -> Optional[Dict[Elemento, Any]]:
    """
    Extiende una asignación de imágenes a los generadores de A a un homomorfismo, si existe.

    Recorre el grafo de Cayley de A desde la identidad imponiendo f(x·gᵢ) = f(x)·imagenᵢ en cada arista y
    comprobando la coherencia con los valores ya asignados.

    Parámetros:
    -----------
    A : Grupo
        Grupo de partida.
    imagenes : Sequence[Any]
        Imagen de cada generador de A.
    operar : Callable[[Any, Any], Any]
        Producto del grupo de llegada.
    identidad : Any
        Identidad del grupo de llegada.

    Retorna:
    --------
    Optional[Dict[Elemento, Any]]
        La tabla del homomorfismo, o None si la asignación es incoherente.
    """
    generadores = A.generadores
    if len(imagenes) != len(generadores):
        return None
    f = {A.identidad: identidad}
    frontera = [A.identidad]
    while frontera:
        x = frontera.pop()
        for g, img in zip(generadores, imagenes):
            y = A.operar(x, g)
            valor = operar(f[x], img)
            if y not in f:
                f[y] = valor
                frontera.append(y)
            elif f[y] != valor:
                return None
    return f


def _componer(alfa: Tabla, beta: Tabla) -> Tabla:
    # (α ∘ β)[i] = α[β[i]]
    return tuple(alfa[j] for j in beta)


def _tablas_de_accion(N: Grupo, K: Grupo, accion: EspecificacionAccion) -> Tuple[List[str], Dict[Elemento, Tabla]]:
    violaciones = []
    if len(accion) != len(K.generadores):
        violaciones.append(f'Se esperaban {len(K.generadores)} automorfismos (uno por generador de '
                           f'{K.descriptor}) y se han dado {len(accion)}')
        return violaciones, {}
    tablas = []
    for etiqueta, imagenes in zip(accion.etiquetas, accion.imagenes):
        if any(not N.contiene(i) for i in imagenes):
            violaciones.append(f'Las imágenes de {etiqueta} no están en {N.descriptor}')
            continue
        f = extender_homomorfismo(N, imagenes, N.operar, N.identidad)
        if f is None:
            violaciones.append(f'La acción de {etiqueta} no define un endomorfismo de {N.descriptor}')
        elif len(set(f.values())) != N.orden:
            violaciones.append(f'La acción de {etiqueta} no es biyectiva')
        else:
            tablas.append(tuple(N.indice(f[n]) for n in N.elementos))
    if violaciones:
        return violaciones, {}
    identidad = tuple(range(N.orden))
    accion_k = extender_homomorfismo(K, tablas, _componer, identidad)
    if accion_k is None:
        violaciones.append(f'La acción no define un homomorfismo {K.descriptor} → Aut({N.descriptor})')
        return violaciones, {}
    return violaciones, accion_k


def validar_accion(N: Grupo, K: Grupo, accion: EspecificacionAccion) -> List[str]:
    """
    Valida una acción: cada generador de K debe actuar por un automorfismo de N y k ↦ α_k debe ser un
    homomorfismo K → Aut(N).

    Parámetros:
    -----------
    N : Grupo
        Grupo sobre el que se actúa.
    K : Grupo
        Grupo que actúa.
    accion : EspecificacionAccion
        Automorfismos de los generadores de K.

    Retorna:
    --------
    List[str]
        Las violaciones encontradas; la lista vacía indica que la acción es válida.
    """
    violaciones, _ = _tablas_de_accion(N, K, accion)
    return violaciones


class ProductoSemidirecto(Grupo):
    """
    Clase que representa el producto semidirecto N ⋊ K, con elementos codificados como pares (n, k).

    Atributos:
    ----------
    normal : Grupo
        Factor normal N.
    complemento : Grupo
        Factor K que actúa.
    accion : EspecificacionAccion
        Acción de los generadores de K.

    Métodos:
    --------
    actuar(k, n) -> Elemento:
        Calcula α_k(n).
    incrustar_normal(n) / incrustar_complemento(k) -> Tuple:
        Incrustaciones de N y K en el producto.
    parte_normal() / parte_complemento() -> Subgrupo:
        Las copias de N y de K como subgrupos.
    """

    def __init__(self, N: Grupo, K: Grupo, accion: EspecificacionAccion, descriptor: str = '') -> None:
        """
        Inicializa el producto semidirecto tras validar la acción.

        Parámetros:
        -----------
        N : Grupo
            Factor normal.
        K : Grupo
            Factor que actúa.
        accion : EspecificacionAccion
            Automorfismos de los generadores de K.
        descriptor : str
            Descriptor del grupo; por defecto sd(N,K).

        Excepciones:
        ------------
        AccionInvalidaError
            Si la acción no es válida.
        """
        violaciones, accion_k = _tablas_de_accion(N, K, accion)
        if violaciones:
            raise AccionInvalidaError(violaciones)
        self.__normal = N
        self.__complemento = K
        self.__accion = accion
        elementos_n = N.elementos
        self.__tablas = {k: tuple(elementos_n[i] for i in tabla) for k, tabla in accion_k.items()}
        generadores = [self.incrustar_normal(n) for n in N.generadores] + \
                      [self.incrustar_complemento(k) for k in K.generadores]
        super().__init__(descriptor or f'sd({N.descriptor},{K.descriptor})',
                         (N.identidad, K.identidad), generadores)

    @property
    def normal(self) -> Grupo:
        return self.__normal

    @property
    def complemento(self) -> Grupo:
        return self.__complemento

    @property
    def accion(self) -> EspecificacionAccion:
        return self.__accion

    def actuar(self, k: Elemento, n: Elemento) -> Elemento:
        return self.__tablas[k][self.__normal.indice(n)]

    def incrustar_normal(self, n: Elemento) -> Tuple:
        return n, self.__complemento.identidad

    def incrustar_complemento(self, k: Elemento) -> Tuple:
        return self.__normal.identidad, k

    def parte_normal(self) -> Subgrupo:
        return clausura(self, [self.incrustar_normal(n) for n in self.__normal.generadores])

    def parte_complemento(self) -> Subgrupo:
        return clausura(self, [self.incrustar_complemento(k) for k in self.__complemento.generadores])

    def operar(self, g: Tuple, h: Tuple) -> Tuple:
        n1, k1 = g
        n2, k2 = h
        return self.__normal.operar(n1, self.actuar(k1, n2)), self.__complemento.operar(k1, k2)

    def inverso(self, g: Tuple) -> Tuple:
        n, k = g
        k_inv = self.__complemento.inverso(k)
        return self.actuar(k_inv, self.__normal.inverso(n)), k_inv


def holomorfo_ciclico(n: int) -> ProductoSemidirecto:
    """
    Construye el holomorfo Z/n ⋊ U(n), donde cada unidad actúa multiplicando.

    Parámetros:
    -----------
    n : int
        Orden del grupo cíclico (n ≥ 2).

    Retorna:
    --------
    ProductoSemidirecto
        El holomorfo hol(n), de orden n·φ(n).
    """
    if n < 2:
        raise ValueError(f'El holomorfo exige n ≥ 2 y se ha pedido n = {n}')
    N = GrupoCiclico(n)
    K = GrupoUnidades(n)
    return ProductoSemidirecto(N, K, EspecificacionAccion.de_enteros(N, K.generadores), f'hol({n})')
