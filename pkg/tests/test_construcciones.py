import itertools

import pytest

from construcciones.accion_invalida_error import AccionInvalidaError
from construcciones.basicas import (GrupoCiclico, GrupoHeisenberg3, GrupoMatricial, GrupoPermutaciones, GrupoUnidades,
                                    ProductoDirecto, grupo_gl2)
from construcciones.busqueda_1458 import automorfismos, buscar_contraejemplo_1458, cumple_propiedad
from construcciones.especificacion import construir_grupo
from construcciones.grupo_w import (MATRIZ_T, MATRIZ_X, MATRIZ_Y, MATRIZ_Z, conmuta_con_z, construir_w, copia_h3,
                                    elementos_accion)
from construcciones.no_encontrado_error import NoEncontradoError
from construcciones.semidirecto import EspecificacionAccion, ProductoSemidirecto, holomorfo_ciclico, validar_accion
from grupos_finitos.matriz2 import Matriz2
from grupos_finitos.series import (centralizador, clase_nilpotencia, es_normal, longitud_derivada, orden_de,
                                   subgrupo_potencia)
from leyes.sintaxis_invalida_error import SintaxisInvalidaError


@pytest.fixture(scope='module')
def W():
    return construir_w()


def test_producto_directo():
    G = ProductoDirecto([GrupoCiclico(2), GrupoCiclico(3)])
    assert G.orden == 6
    assert clase_nilpotencia(G) == 1
    assert G.incrustar(1, 1) == (0, 1)


def test_heisenberg():
    H = GrupoHeisenberg3()
    assert H.orden == 27
    assert H.comprobar_axiomas() == []
    assert H.conmutador(GrupoHeisenberg3.X, GrupoHeisenberg3.Y) in (GrupoHeisenberg3.Z, H.inverso(GrupoHeisenberg3.Z))


def test_unidades():
    U = GrupoUnidades(9)
    assert U.orden == 6
    assert U.generadores == (2,)


def test_permutaciones():
    S3 = GrupoPermutaciones(3, [[1, 0, 2], [1, 2, 0]])
    assert S3.orden == 6
    assert longitud_derivada(S3) == 2
    assert S3.permutaciones.order() == 6
    assert S3.operar((1, 0, 2), (1, 2, 0)) == (2, 1, 0)
    assert S3.inverso((1, 2, 0)) == (2, 0, 1)


@pytest.mark.parametrize('n, orden', [(3, 6), (7, 42), (9, 54)])
def test_holomorfo(n, orden):
    G = holomorfo_ciclico(n)
    assert G.orden == orden
    assert es_normal(G, G.parte_normal())


def test_holomorfo_pequeno():
    with pytest.raises(ValueError):
        holomorfo_ciclico(1)


def test_accion_invalida():
    N, K = GrupoCiclico(7), GrupoCiclico(4)
    accion = EspecificacionAccion.de_enteros(N, [3])
    assert validar_accion(N, K, accion) != []
    with pytest.raises(AccionInvalidaError) as error:
        ProductoSemidirecto(N, K, accion)
    assert error.value.violaciones


def test_accion_no_biyectiva():
    with pytest.raises(AccionInvalidaError):
        construir_grupo('sd(Z(7),Z(2);7)')


def test_gramatica_semidirecto():
    G = construir_grupo('sd(Z(7),Z(6);3)')
    assert G.orden == 42
    assert G.descriptor == 'sd(Z(7),Z(6);3)'
    assert construir_grupo('sd(Z(7), Z(3); 2)').orden == 21


def test_gramatica_producto_y_matrices():
    assert construir_grupo('prod(Z(2),heis3)').orden == 54
    assert construir_grupo('mat2(9;[[1,-1],[3,-2]])').orden == 3


@pytest.mark.parametrize('texto', ['Q(3)', 'Z(0)', 'Z(3', 'hol(7)x', 'sd(Z(7))'])
def test_gramatica_invalida(texto):
    with pytest.raises(SintaxisInvalidaError):
        construir_grupo(texto)


def test_w_orden_y_serie_derivada(W):
    assert W.orden == 4374
    assert longitud_derivada(W) == 3
    assert construir_grupo('W4374').orden == 4374


def test_w_subgrupos_potencia(W):
    W2 = subgrupo_potencia(W, 2)
    W3 = subgrupo_potencia(W, 3)
    assert (W2.orden, longitud_derivada(W2)) == (2187, 2)
    assert (W3.orden, longitud_derivada(W3)) == (162, 2)


def test_w_matrices():
    assert MATRIZ_X.potencia(2) == Matriz2.de_filas(9, [[-2, 1], [-3, 1]])
    assert MATRIZ_Y.potencia(2) == Matriz2.de_filas(9, [[4, 0], [0, -2]])
    assert MATRIZ_X * MATRIZ_Y == Matriz2.de_filas(9, [[-2, -4], [3, 1]])
    assert MATRIZ_Z == Matriz2.de_filas(9, [[1, 3], [0, 1]])
    assert MATRIZ_Z.potencia(3) == Matriz2.identidad(9)
    assert MATRIZ_Z != Matriz2.identidad(9)
    assert MATRIZ_Z * MATRIZ_X == MATRIZ_X * MATRIZ_Z
    assert MATRIZ_Z * MATRIZ_Y == MATRIZ_Y * MATRIZ_Z
    assert conmuta_con_z(MATRIZ_X) and conmuta_con_z(MATRIZ_Y)
    assert conmuta_con_z(Matriz2.de_filas(9, [[1, 1], [0, 1]]))
    assert not conmuta_con_z(Matriz2.de_filas(9, [[1, 0], [1, 1]]))


def test_criterio_centralizador_de_z():
    for entradas in itertools.product(range(9), repeat=4):
        M = Matriz2.de_tupla(9, entradas)
        if M.es_invertible():
            assert conmuta_con_z(M) == (M * MATRIZ_Z == MATRIZ_Z * M), entradas


def test_centralizador_de_z_en_gl2():
    gl2 = grupo_gl2(9)
    assert gl2.orden == 3888
    centro = centralizador(gl2, [MATRIZ_Z.como_tupla()])
    assert centro.orden == 486
    assert all(conmuta_con_z(gl2.matriz(g)) == (g in centro) for g in gl2.elementos)


def test_accion_de_w_fiel():
    assert GrupoMatricial(9, [MATRIZ_X, MATRIZ_Y, MATRIZ_T]).orden == 54


def test_w_copia_h3(W):
    assert copia_h3(W).orden == 27
    assert orden_de(W, elementos_accion(W)['z']) == 3


def test_automorfismos_ciclico():
    assert len(automorfismos(GrupoCiclico(9))) == 6


def test_propiedad_w(W):
    assert cumple_propiedad(W)
    assert not cumple_propiedad(holomorfo_ciclico(7))


@pytest.mark.slow
def test_busqueda_secciones_de_w():
    with pytest.raises(NoEncontradoError) as error:
        buscar_contraejemplo_1458(solo_secciones_de_w=True)
    assert error.value.candidatos > 0


@pytest.mark.slow
def test_busqueda_1458():
    G = buscar_contraejemplo_1458(paralelismo=2)
    assert G.orden == 1458
    assert cumple_propiedad(G)
    assert longitud_derivada(G) == 3
