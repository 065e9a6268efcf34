import pytest

from construcciones.basicas import GrupoCiclico, GrupoHeisenberg3
from construcciones.especificacion import construir_grupo
from construcciones.semidirecto import holomorfo_ciclico
from leyes.analizador import analizar_ley, analizar_palabra
from leyes.aridad_incorrecta_error import AridadIncorrectaError
from leyes.evaluacion import Automatico, Estructural, Exhaustivo, Veredicto, evaluar, satisface
from leyes.ley import Conjugado, Corchete, Potencia, Variable
from leyes.leyes_notables import (ley_conmutativa, ley_metabeliana, palabra_burnside, palabra_engel,
                                  palabra_nilpotencia)
from leyes.sintaxis_invalida_error import SintaxisInvalidaError


@pytest.fixture
def s3():
    return holomorfo_ciclico(3)


def test_analizar_ley_forma_normal():
    ley = analizar_ley('[ x^2 , x^y ]')
    assert ley.texto == '[x^2,x^y]'
    assert ley.aridad == 2
    assert ley.arbol == Corchete(Potencia(Variable('x'), 2), Conjugado(Variable('x'), Variable('y')))


def test_analizar_ley_releida():
    ley = analizar_ley('[[x^2,y^2]^3,y^3]')
    assert analizar_ley(ley.texto) == ley


def test_analizar_ley_variables_indexadas():
    assert analizar_ley('[[x1,x2],[x3,x4]]') == ley_metabeliana()
    assert analizar_ley('[[x1,x2],[x3,x4]]').aridad == 4


def test_sintaxis_invalida_posicion():
    with pytest.raises(SintaxisInvalidaError) as error:
        analizar_ley('[x,')
    assert error.value.posicion == 3
    assert error.value.token == ''


def test_sintaxis_variable_no_admitida():
    with pytest.raises(SintaxisInvalidaError) as error:
        analizar_ley('[x, z]')
    assert error.value.token == 'z'


def test_analizar_palabra_con_alfabeto():
    assert analizar_palabra('z^a', ['a', 'z']) == Conjugado(Variable('z'), Variable('a'))
    with pytest.raises(SintaxisInvalidaError):
        analizar_palabra('b', ['a'])


def test_leyes_notables():
    assert ley_conmutativa().texto == '[x,y]'
    assert palabra_engel(3).texto == '[[[x,y],y],y]'
    assert palabra_engel(0).texto == 'x'
    assert palabra_nilpotencia(2).texto == '[[x1,x2],x3]'
    assert palabra_burnside(3).texto == 'x^3'
    with pytest.raises(ValueError):
        palabra_nilpotencia(0)


def test_evaluar(s3):
    ley = ley_conmutativa()
    assert evaluar(ley, s3, [(0, 1), (1, 1)]) == s3.identidad
    assert evaluar(ley, s3, [(0, 2), (1, 1)]) != s3.identidad


def test_evaluar_aridad_incorrecta(s3):
    with pytest.raises(AridadIncorrectaError):
        evaluar(ley_metabeliana(), s3, [(0, 1), (1, 1)])


def test_conmutativa_estructural():
    resultado = satisface(GrupoCiclico(5), ley_conmutativa())
    assert resultado.veredicto is Veredicto.CUMPLE
    assert resultado.estrategia == 'structural'


def test_conmutativa_falla_con_testigo(s3):
    resultado = satisface(s3, ley_conmutativa(), Estructural())
    assert resultado.veredicto is Veredicto.FALLA
    x, y = resultado.testigo
    assert s3.conmutador(x, y) != s3.identidad


def test_exhaustivo_menor_testigo(s3):
    resultado = satisface(s3, ley_conmutativa(), Exhaustivo())
    assert resultado.veredicto is Veredicto.FALLA
    assert resultado.testigo == ((0, 2), (1, 1))
    assert resultado.examinadas == 9


def test_exhaustivo_paralelo_mismo_testigo(s3):
    secuencial = satisface(s3, ley_conmutativa(), Exhaustivo(paralelismo=1))
    paralelo = satisface(s3, ley_conmutativa(), Exhaustivo(paralelismo=2))
    assert paralelo.testigo == secuencial.testigo


def test_exhaustivo_fuera_de_presupuesto(s3):
    resultado = satisface(s3, ley_metabeliana(), Exhaustivo(presupuesto=100))
    assert resultado.veredicto is Veredicto.DESCONOCIDO


def test_estructural_no_reconoce():
    resultado = satisface(GrupoCiclico(4), analizar_ley('[x^2,x^y]'), Estructural())
    assert resultado.veredicto is Veredicto.DESCONOCIDO


def test_metabeliana(s3):
    assert satisface(s3, ley_metabeliana()).cumple
    assert not satisface(construir_grupo('W4374'), ley_metabeliana()).cumple


def test_burnside():
    G = GrupoCiclico(6)
    assert satisface(G, palabra_burnside(6)).cumple
    resultado = satisface(G, palabra_burnside(3))
    assert resultado.veredicto is Veredicto.FALLA
    assert 3 * resultado.testigo[0] % 6 != 0


def test_nilpotencia_y_engel():
    H = GrupoHeisenberg3()
    assert satisface(H, palabra_nilpotencia(2)).cumple
    assert not satisface(H, palabra_nilpotencia(1)).cumple
    assert satisface(H, palabra_engel(2)).cumple


def test_engel_falla_en_s3(s3):
    resultado = satisface(s3, palabra_engel(2))
    assert resultado.veredicto is Veredicto.FALLA


def test_automatico_recurre_a_exhaustivo():
    hol7 = construir_grupo('hol(7)')
    resultado = satisface(hol7, analizar_ley('[[x^2,y^2]^3,y^3]'), Automatico())
    assert resultado.veredicto is Veredicto.FALLA
    assert resultado.estrategia == 'exhaustive'


def test_resultado_to_dict():
    resultado = satisface(GrupoCiclico(3), ley_conmutativa())
    assert resultado.to_dict() == {'verdict': 'holds', 'strategy': 'structural', 'examined': 0, 'witness': None}


@pytest.mark.parametrize('texto, arbol', [
    ('x', Variable('x')),
    ('[x,y]', Corchete(Variable('x'), Variable('y'))),
    ('[x^2,x^y]', Corchete(Potencia(Variable('x'), 2), Conjugado(Variable('x'), Variable('y')))),
])
def test_analizar_hasta_el_final(texto, arbol):
    ley = analizar_ley(texto)
    assert ley.arbol == arbol
    assert ley.texto == texto


@pytest.mark.parametrize('descriptor', ['Z(12)', 'heis3', 'hol(7)', 'sd(Z(9),Z(2);-1)', 'sd(Z(5),Z(4);2)'])
@pytest.mark.parametrize('texto', ['[x,y]', '[[x1,x2],[x3,x4]]', '[[x,y],x3]', '[[x,y],y]', '[[[x,y],y],y]',
                                   'x^6', 'x^-6', 'x^4'])
def test_estructural_coincide_con_exhaustivo(descriptor, texto):
    G = construir_grupo(descriptor)
    ley = analizar_ley(texto)
    if G.orden ** ley.aridad > 200000:
        pytest.skip('recorrido exhaustivo demasiado largo')
    estructural = satisface(G, ley, Estructural())
    exhaustivo = satisface(G, ley, Exhaustivo())
    assert exhaustivo.veredicto is not Veredicto.DESCONOCIDO
    if estructural.veredicto is not Veredicto.DESCONOCIDO:
        assert estructural.veredicto is exhaustivo.veredicto
    if estructural.veredicto is Veredicto.FALLA:
        assert evaluar(ley, G, estructural.testigo) != G.identidad


def test_engel_estructural_respeta_presupuesto():
    hol7 = holomorfo_ciclico(7)
    assert satisface(hol7, palabra_engel(2), Estructural(presupuesto=1000)).veredicto is Veredicto.DESCONOCIDO
    assert satisface(hol7, palabra_engel(2), Estructural()).veredicto is Veredicto.FALLA
