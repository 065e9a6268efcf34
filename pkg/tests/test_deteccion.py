import pytest

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3
from construcciones.especificacion import construir_grupo
from construcciones.semidirecto import holomorfo_ciclico
from deteccion.busqueda_agotada_error import BusquedaAgotadaError
from deteccion import comprobaciones
from deteccion.comprobaciones import comprobar_detectabilidad_clase, comprobar_fitting, orden_permutacion
from deteccion.corpus import descriptores_corpus
from deteccion.informe_deteccion import informe_deteccion
from deteccion.no_nilpotente_error import NoNilpotenteError
from deteccion.precondicion_violada_error import PrecondicionVioladaError
from deteccion.verificacion import FilaVerificacion, ejecutar_comprobacion, nombres_comprobaciones, verificar
from grupos_finitos.series import clausura, subgrupo_potencia
from grupos_libres.no_coprimos_error import NoCoprimosError
from leyes.analizador import analizar_ley
from leyes.evaluacion import Exhaustivo, Veredicto
from leyes.leyes_notables import ley_conmutativa


@pytest.mark.parametrize('descriptor, ley', [('hol(7)', '[[x^2,y^2]^3,y^3]'), ('hol(9)', '[x^2,x^y]')])
def test_informe_holomorfos(descriptor, ley):
    informe = informe_deteccion(construir_grupo(descriptor), analizar_ley(ley), 2, 3)
    assert informe.veredictos == (Veredicto.CUMPLE, Veredicto.CUMPLE, Veredicto.FALLA)
    assert informe.coherente
    datos = informe.to_dict()
    assert (datos['in_m'], datos['in_n'], datos['in_G']) == ('holds', 'holds', 'fails')


def test_informe_holomorfo_7_ordenes():
    informe = informe_deteccion(holomorfo_ciclico(7), analizar_ley('[[x^2,y^2]^3,y^3]'), 2, 3)
    assert (informe.orden_g, informe.orden_m, informe.orden_n) == (42, 21, 14)


def test_informe_testigo_reproducible():
    G = holomorfo_ciclico(9)
    ley = analizar_ley('[x^2,x^y]')
    informe = informe_deteccion(G, ley, 2, 3, Exhaustivo())
    x, y = informe.en_g.testigo
    x2 = G.potencia(x, 2)
    assert G.conmutador(x2, G.conjugado(x, y)) != G.identidad


def test_informe_exponentes_no_coprimos(caplog):
    informe = informe_deteccion(GrupoCiclico(12), ley_conmutativa(), 2, 4)
    assert informe.en_g.cumple
    assert 'no son coprimos' in caplog.text


def test_detectabilidad_clase():
    assert comprobar_detectabilidad_clase(GrupoHeisenberg3(), 2, 3)
    assert comprobar_detectabilidad_clase(GrupoCiclico(12), 3, 4)


def test_detectabilidad_clase_no_nilpotente():
    with pytest.raises(NoNilpotenteError):
        comprobar_detectabilidad_clase(holomorfo_ciclico(3), 2, 3)


def test_detectabilidad_clase_no_coprimos():
    with pytest.raises(NoCoprimosError):
        comprobar_detectabilidad_clase(GrupoHeisenberg3(), 2, 4)


def test_fitting_heisenberg():
    H = GrupoHeisenberg3()
    M = clausura(H, [GrupoHeisenberg3.X, GrupoHeisenberg3.Z])
    N = clausura(H, [GrupoHeisenberg3.Y, GrupoHeisenberg3.Z])
    assert comprobar_fitting(H, M, N)


def test_fitting_precondiciones():
    s3 = holomorfo_ciclico(3)
    reflexion = clausura(s3, [(0, 2)])
    with pytest.raises(PrecondicionVioladaError):
        comprobar_fitting(s3, reflexion, subgrupo_potencia(s3, 2))
    with pytest.raises(PrecondicionVioladaError):
        comprobar_fitting(s3, subgrupo_potencia(s3, 1), subgrupo_potencia(s3, 2))


@pytest.mark.parametrize('p, orden', [((0, 1, 2), 1), ((1, 0, 2), 2), ((1, 2, 0), 3), ((1, 0, 3, 4, 2), 6)])
def test_orden_permutacion(p, orden):
    assert orden_permutacion(p) == orden


def test_testigo_truncamiento():
    testigo = comprobaciones.testigo_truncamiento(2, 3, 5)
    assert testigo.grupo.orden == 6
    assert testigo.grupo.operar(testigo.a, testigo.b) != testigo.grupo.operar(testigo.b, testigo.a)
    assert testigo.to_dict()['orders'] == [3, 2, 2]


def test_testigo_truncamiento_agotado():
    with pytest.raises(BusquedaAgotadaError):
        comprobaciones.testigo_truncamiento(2, 3, 1)


def test_corpus_descriptores():
    descriptores = descriptores_corpus()
    assert 'hol(7)' in descriptores and 'heis3' in descriptores
    assert construir_grupo('sd(Z(5),Z(2);-1)').orden == 10


def test_verificar_seleccion_vacia():
    assert verificar([]) == []


def test_verificar_una_comprobacion():
    filas = verificar(['W-derived-length'])
    assert len(filas) == 1
    assert filas[0].esperado == 3
    assert filas[0].to_dict()['status'] == 'pass'


def test_verificar_nombre_desconocido():
    with pytest.raises(ValueError):
        verificar(['no-existe'])


def test_nombres_comprobaciones():
    nombres = nombres_comprobaciones()
    assert nombres == sorted(nombres)
    assert {'W-order', 'hol7-detect', 'its-abelian', 'truncation-witness'} <= set(nombres)


@pytest.mark.parametrize('nombre', ['hol7-detect', 'hol9-detect', 'a2-b-certificate', 'nq2-quotient',
                                    'heisenberg-two-subgroups', 'truncation-witness', 'W-matrices'])
def test_comprobaciones_rapidas(nombre):
    fila = ejecutar_comprobacion(nombre)
    assert fila.superada, fila.obtenido


def test_fila_verificacion_fallida():
    fila = FilaVerificacion('x', False, 1, 2, 1.23456)
    assert fila.to_dict() == {'name': 'x', 'status': 'fail', 'expected': 1, 'actual': 2, 'millis': 1.235}


@pytest.mark.slow
def test_verificacion_completa():
    filas = verificar()
    assert [f.nombre for f in filas if not f.superada] == []
