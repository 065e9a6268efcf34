import pytest

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3
from construcciones.semidirecto import holomorfo_ciclico
from grupos_finitos.cociente import GrupoCociente, cociente
from grupos_finitos.matriz2 import Matriz2
from grupos_finitos.no_normal_error import NoNormalError
from grupos_finitos.series import (centralizador, clase_nilpotencia, clausura, clausura_normal,
                                   conmutador_de_subgrupos, es_normal, exponente, longitud_derivada, orden_de,
                                   serie_central_inferior, serie_derivada, subgrupo_potencia, subgrupo_total)


@pytest.fixture
def heis3():
    return GrupoHeisenberg3()


@pytest.fixture
def s3():
    return holomorfo_ciclico(3)


def test_grupo_ciclico():
    G = GrupoCiclico(6)
    assert G.orden == 6
    assert G.elementos == (0, 1, 2, 3, 4, 5)
    assert G.potencia(1, 4) == 4
    assert G.potencia(1, -1) == 5
    assert orden_de(G, 2) == 3


def test_grupo_trivial():
    G = GrupoCiclico(1)
    assert G.orden == 1
    assert G.generadores == ()
    assert clase_nilpotencia(G) == 0
    assert longitud_derivada(G) == 0


def test_axiomas(heis3, s3):
    assert heis3.comprobar_axiomas() == []
    assert s3.comprobar_axiomas() == []


def test_clausura_vacia_es_trivial(heis3):
    H = clausura(heis3, [])
    assert H.es_trivial()
    assert H.elementos == (heis3.identidad,)


def test_clausura_determinista(heis3):
    H1 = clausura(heis3, [GrupoHeisenberg3.Y, GrupoHeisenberg3.X])
    H2 = clausura(heis3, [GrupoHeisenberg3.X, GrupoHeisenberg3.Y])
    assert H1.elementos == H2.elementos
    assert H1.generadores == H2.generadores
    assert H1.orden == 27


@pytest.mark.parametrize('m, orden', [(1, 12), (2, 6), (3, 4), (4, 3), (5, 12), (12, 1)])
def test_subgrupo_potencia_ciclico(m, orden):
    assert subgrupo_potencia(GrupoCiclico(12), m).orden == orden


def test_subgrupo_potencia_heisenberg(heis3):
    assert subgrupo_potencia(heis3, 3).es_trivial()
    assert subgrupo_potencia(heis3, 2).orden == 27


def test_subgrupo_potencia_exponente_no_positivo(heis3):
    with pytest.raises(ValueError):
        subgrupo_potencia(heis3, 0)


def test_series_heisenberg(heis3):
    assert [H.orden for H in serie_derivada(heis3)] == [27, 3, 1]
    assert [H.orden for H in serie_central_inferior(heis3)] == [27, 3, 1]
    assert longitud_derivada(heis3) == 2
    assert clase_nilpotencia(heis3) == 2
    assert exponente(heis3) == 3


def test_series_s3(s3):
    assert s3.orden == 6
    assert longitud_derivada(s3) == 2
    assert clase_nilpotencia(s3) is None
    assert [H.orden for H in serie_central_inferior(s3)] == [6, 3]


def test_conmutador_lleva_testigos(s3):
    total = subgrupo_total(s3)
    derivado = conmutador_de_subgrupos(total, total)
    assert derivado.orden == 3
    for g in derivado.generadores:
        assert derivado.testigos[g].valor(s3) == g


def test_normalidad(s3):
    reflexion = clausura(s3, [(0, 2)])
    assert reflexion.orden == 2
    assert not es_normal(s3, reflexion)
    assert es_normal(s3, subgrupo_potencia(s3, 2))
    assert clausura_normal(s3, [(0, 2)]).orden == 6


def test_cociente(s3):
    Q, proyectar = cociente(s3, subgrupo_potencia(s3, 2))
    assert Q.orden == 2
    assert proyectar(s3.identidad) == Q.identidad
    assert Q.comprobar_axiomas() == []


def test_cociente_no_normal(s3):
    with pytest.raises(NoNormalError):
        cociente(s3, clausura(s3, [(0, 2)]))


def test_cociente_ciclico():
    G = GrupoCiclico(12)
    Q = GrupoCociente(G, subgrupo_potencia(G, 4))
    assert Q.orden == 4
    assert Q.proyectar(5) == Q.proyectar(1) == 1


def test_centralizador(heis3):
    assert centralizador(heis3, [GrupoHeisenberg3.X]).orden == 9
    assert centralizador(heis3, [GrupoHeisenberg3.Z]).orden == 27


def test_matriz2_normaliza():
    M = Matriz2.de_filas(9, [[-2, 1], [-3, 1]])
    assert M.como_tupla() == (7, 1, 6, 1)
    assert M.determinante == 1


def test_matriz2_inversa_y_potencia():
    X = Matriz2.de_filas(9, [[1, -1], [3, -2]])
    assert X * X.inversa() == Matriz2.identidad(9)
    assert X.potencia(3) == Matriz2.identidad(9)
    assert X.potencia(-1) == X.inversa()
    assert X.aplicar((1, 0)) == (1, 3)


def test_matriz2_no_invertible():
    M = Matriz2.de_filas(9, [[3, 0], [0, 1]])
    assert not M.es_invertible()
    with pytest.raises(ValueError):
        M.inversa()


@pytest.mark.parametrize('G, m', [(holomorfo_ciclico(3), 2), (holomorfo_ciclico(7), 2), (holomorfo_ciclico(9), 3),
                                  (GrupoHeisenberg3(), 3), (GrupoCiclico(12), 4)])
def test_proyeccion_es_homomorfismo(G, m):
    N = subgrupo_potencia(G, m)
    Q, proyectar = cociente(G, N)
    assert G.orden == Q.orden * N.orden
    for g in G.elementos:
        for h in G.elementos:
            assert proyectar(G.operar(g, h)) == Q.operar(proyectar(g), proyectar(h))


@pytest.mark.parametrize('G', [holomorfo_ciclico(7), holomorfo_ciclico(9), GrupoHeisenberg3(), GrupoCiclico(12)])
def test_series_descendentes(G):
    for serie in (serie_derivada(G), serie_central_inferior(G)):
        assert serie[0].orden == G.orden
        for mayor, menor in zip(serie, serie[1:]):
            assert menor.orden < mayor.orden
            assert mayor.orden % menor.orden == 0
            assert all(g in mayor for g in menor.elementos)
