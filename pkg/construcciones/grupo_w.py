"""
Módulo con la construcción del grupo W = (Z/9 × Z/9) ⋊ (H₃ × Z/2), de orden 4374.

W es un grupo de longitud derivada 3 cuyos subgrupos potencia W^{*2} y W^{*3} son metabelianos. H₃ actúa
sobre (Z/9)² mediante las matrices X (imagen de x) e Y (imagen de y), y el generador de Z/2 mediante
T = −I. El conmutador Z = [X, Y] tiene orden 3 y conmuta con X e Y.

Funciones:
    - construir_w() -> ProductoSemidirecto
    - conmuta_con_z(matriz) -> bool
    - elementos_accion(W) -> Dict[str, Tuple]
    - copia_h3(W) -> Subgrupo
"""

import logging
from typing import Dict, Tuple

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3, ProductoDirecto
from construcciones.semidirecto import EspecificacionAccion, ProductoSemidirecto
from grupos_finitos.matriz2 import Matriz2
from grupos_finitos.series import clausura
from grupos_finitos.subgrupo import Subgrupo

logger = logging.getLogger(__name__)

MATRIZ_X = Matriz2.de_filas(9, [[1, -1], [3, -2]])
MATRIZ_Y = Matriz2.de_filas(9, [[-2, 0], [0, 4]])
MATRIZ_T = Matriz2.de_filas(9, [[-1, 0], [0, -1]])
MATRIZ_Z = MATRIZ_X.inversa() * MATRIZ_Y.inversa() * MATRIZ_X * MATRIZ_Y

EXPRESION_W = 'sd(prod(Z(9),Z(9)),prod(heis3,Z(2));x=[[1,-1],[3,-2]],y=[[-2,0],[0,4]],t=[[-1,0],[0,-1]])'


def construir_w() -> ProductoSemidirecto:
    """
    Construye W con la acción x ↦ X, y ↦ Y, t ↦ T.

    Retorna:
    --------
    ProductoSemidirecto
        El grupo W, con descriptor 'W4374'.
    """
    N = ProductoDirecto([GrupoCiclico(9), GrupoCiclico(9)])
    K = ProductoDirecto([GrupoHeisenberg3(), GrupoCiclico(2)])
    accion = EspecificacionAccion.de_matrices(N, [MATRIZ_X, MATRIZ_Y, MATRIZ_T], ['x', 'y', 't'])
    W = ProductoSemidirecto(N, K, accion, 'W4374')
    logger.info('Construido %s', W.descriptor)
    return W


def conmuta_con_z(matriz: Matriz2) -> bool:
    """
    Criterio del centralizador de Z: [[a, b], [c, d]] conmuta con Z si y sólo si 3 | a − d y 3 | c.
    """
    return (matriz.a - matriz.d) % 3 == 0 and matriz.c % 3 == 0


def elementos_accion(W: ProductoSemidirecto) -> Dict[str, Tuple]:
    """
    Retorna los elementos de W que actúan como X, Y, T y Z = [X, Y] sobre (Z/9)².
    """
    K = W.complemento
    x = W.incrustar_complemento(K.incrustar(0, GrupoHeisenberg3.X))
    y = W.incrustar_complemento(K.incrustar(0, GrupoHeisenberg3.Y))
    t = W.incrustar_complemento(K.incrustar(1, 1))
    return {'x': x, 'y': y, 't': t, 'z': W.conmutador(x, y)}


def copia_h3(W: ProductoSemidirecto) -> Subgrupo:
    """
    Retorna la copia de H₃ que actúa sobre (Z/9)², generada por x e y.
    """
    elementos = elementos_accion(W)
    return clausura(W, [elementos['x'], elementos['y']])
