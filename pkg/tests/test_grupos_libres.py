import dataclasses
import os
import shutil

import pytest

from config import PARES_VERIFICACION, PATH_TRAZAS
from construcciones.semidirecto import holomorfo_ciclico
from grupos_libres.abeliano import (ConjuntoEstablecido, TRAZAS_CONMUTADORES, TRAZAS_SIMETRIA, coeficientes_bezout,
                                    comprobar_conjunto_gamma, simetria, tuberia_abeliana, verificar_mapa_extension)
from grupos_libres.alfabeto_no_soportado_error import AlfabetoNoSoportadoError
from grupos_libres.certificado import Certificado, PasoCertificado, comprobar_certificado
from grupos_libres.ficheros import (escribir_presentacion, escribir_traza, leer_certificado, leer_presentacion,
                                    leer_traza)
from grupos_libres.formato_fichero_error import FormatoFicheroError
from grupos_libres.malcev import TripleMalcev, nq2_eval, nq2_orden_c
from grupos_libres.no_central_error import NoCentralError
from grupos_libres.no_coprimos_error import NoCoprimosError
from grupos_libres.palabra_libre import (conjugar, evaluar_palabra, grupo_libre, palabra, palabras_reducidas,
                                         reduccion_ciclica, son_conjugadas, suma_exponentes, texto)
from grupos_libres.presentacion import (Presentacion, gamma_presentacion, presentacion_cuatro_relatores,
                                        presentacion_potencias)
from grupos_libres.traza import PasoTraza, Traza, comprobar_traza
from leyes.sintaxis_invalida_error import SintaxisInvalidaError


@pytest.fixture
def F():
    return grupo_libre(['a', 'b'])


@pytest.fixture
def ab():
    return leer_presentacion(os.path.join(PATH_TRAZAS, 'presentacion_ab.txt'))


def test_palabra_reducida(F):
    w = palabra('a b b^-1 a^-1 a^2', F)
    assert texto(w) == 'a^2'
    assert texto(palabra('1', F)) == '1'
    assert texto(palabra('[a, b]', F)) == 'a^-1 b^-1 a b'


def test_palabra_fuera_del_alfabeto(F):
    with pytest.raises(SintaxisInvalidaError):
        palabra('a c', F)


def test_alfabeto_repetido():
    with pytest.raises(ValueError):
        grupo_libre(['a', 'a'])


def test_conjugar_y_conjugadas(F):
    a, b = palabra('a', F), palabra('b', F)
    assert conjugar(a, b) == palabra('b^-1 a b', F)
    assert son_conjugadas(palabra('a b', F), palabra('b a', F))
    assert not son_conjugadas(palabra('a b', F), palabra('b^-1 a^-1', F))
    assert son_conjugadas(palabra('a b', F), palabra('b^-1 a^-1', F), admitir_inverso=True)
    assert son_conjugadas(a, palabra('b a b^-1', F))
    assert not son_conjugadas(a, palabra('b a^2 b^-1', F))
    assert reduccion_ciclica(palabra('b a^2 b^-1', F)) == [('a', 1), ('a', 1)]
    assert suma_exponentes(palabra('[a, b] a^3', F), 'a') == 3


def test_palabras_reducidas(F):
    palabras = palabras_reducidas(F, 2)
    assert len(palabras) == 1 + 4 + 12
    assert len(set(palabras)) == len(palabras)
    assert all(len(w) <= 2 for w in palabras)


def test_evaluar_palabra(F):
    s3 = holomorfo_ciclico(3)
    x, y = (0, 2), (1, 1)
    assert evaluar_palabra(palabra('[a, b]', F), s3, {'a': x, 'b': y}) == s3.conmutador(x, y)
    assert evaluar_palabra(palabra('1', F), s3, {}) == s3.identidad


def test_presentaciones():
    assert len(gamma_presentacion()) == 9
    assert len(presentacion_potencias(2, 3)) == 6
    assert len(presentacion_cuatro_relatores(2, 3)) == 4
    with pytest.raises(ValueError):
        Presentacion(['a', 'b'], ['a a^-1'])


def test_certificado_a2_b(ab):
    objetivo, certificado = leer_certificado(os.path.join(PATH_TRAZAS, 'certificado_a2_b.txt'), ab)
    assert len(certificado) == 2
    assert comprobar_certificado(ab, objetivo, certificado).to_dict() == {'status': 'valid'}


def test_certificado_signo_incorrecto(ab):
    objetivo = ab.palabra('[a^2, b]')
    certificado = Certificado((PasoCertificado(0, 2, ab.palabra('a')), PasoCertificado(0, 1, ab.palabra('1'))))
    resultado = comprobar_certificado(ab, objetivo, certificado)
    assert not resultado.valido
    assert resultado.paso == 0


def test_certificado_relator_inexistente(ab):
    objetivo = ab.palabra('[a^2, b]')
    certificado = Certificado((PasoCertificado(0, 1, ab.palabra('a')), PasoCertificado(3, 1, ab.palabra('1'))))
    assert comprobar_certificado(ab, objetivo, certificado).paso == 1


def test_certificado_incompleto(ab):
    objetivo = ab.palabra('[a^2, b]')
    certificado = Certificado((PasoCertificado(0, 1, ab.palabra('a')),))
    resultado = comprobar_certificado(ab, objetivo, certificado)
    assert resultado.to_dict()['status'] == 'invalid'
    assert resultado.paso == 1


def test_traza_sencilla(ab):
    traza = Traza(ab.palabra('b a'), (PasoTraza(2, 0, 1, ab.palabra('1'), ab.palabra('a b')),), ab.palabra('a b'))
    assert comprobar_traza(ab, traza).valido
    assert texto(traza.relacion) == 'b a b^-1 a^-1'


def test_traza_resultado_incorrecto(ab):
    traza = Traza(ab.palabra('b a'), (PasoTraza(2, 0, 1, ab.palabra('1'), ab.palabra('b a')),), ab.palabra('b a'))
    assert comprobar_traza(ab, traza).paso == 0


def test_traza_posicion_fuera_de_rango(ab):
    traza = Traza(ab.palabra('b a'), (PasoTraza(3, 0, 1, ab.palabra('1'), ab.palabra('a b')),), ab.palabra('a b'))
    resultado = comprobar_traza(ab, traza)
    assert not resultado.valido
    assert resultado.paso == 0


def test_traza_fin_incorrecto(ab):
    traza = Traza(ab.palabra('b a'), (PasoTraza(2, 0, 1, ab.palabra('1'), ab.palabra('a b')),), ab.palabra('a'))
    assert comprobar_traza(ab, traza).paso == 1


@pytest.mark.parametrize('nombre', TRAZAS_SIMETRIA + TRAZAS_CONMUTADORES)
def test_trazas_incluidas_validas(nombre):
    presentacion, traza = leer_traza(os.path.join(PATH_TRAZAS, f'{nombre}.txt'))
    assert comprobar_traza(presentacion, traza).valido


@pytest.mark.parametrize('campo, valor', [('posicion', 0), ('conjugador', None)])
def test_traza_alterada(campo, valor):
    presentacion, traza = leer_traza(os.path.join(PATH_TRAZAS, 'simetria_x_z.txt'))
    valor = presentacion.grupo.identity if valor is None else valor
    primero = dataclasses.replace(traza.pasos[0], **{campo: valor})
    alterada = Traza(traza.inicio, (primero,) + traza.pasos[1:], traza.fin)
    resultado = comprobar_traza(presentacion, alterada)
    assert not resultado.valido
    assert resultado.paso == 0


def test_escribir_y_leer_traza(tmp_path):
    ruta = os.path.join(PATH_TRAZAS, 'clase_dos.txt')
    presentacion, traza = leer_traza(ruta)
    copia = str(tmp_path / 'copia.txt')
    escribir_traza(copia, presentacion, traza)
    assert leer_traza(copia) == (presentacion, traza)


def test_escribir_y_leer_presentacion(tmp_path):
    ruta = str(tmp_path / 'p.txt')
    escribir_presentacion(ruta, presentacion_potencias(2, 3))
    assert leer_presentacion(ruta) == presentacion_potencias(2, 3)


def test_fichero_inexistente(tmp_path):
    with pytest.raises(FormatoFicheroError):
        leer_presentacion(str(tmp_path / 'no_existe.txt'))


def test_fichero_mal_formado(tmp_path):
    ruta = tmp_path / 'traza.txt'
    ruta.write_text('alphabet: a b\nrelators:\n[a, b]\nstart: a\nstep: pos=x\nend: a\n', encoding='utf-8')
    with pytest.raises(FormatoFicheroError) as error:
        leer_traza(str(ruta))
    assert error.value.linea == 5


def test_simetria():
    gamma = gamma_presentacion()
    assert simetria(gamma.palabra('z')) == gamma.palabra('a^-1 z a')
    assert simetria(gamma.palabra('a x')) == gamma.palabra('b y')


def test_conjunto_establecido():
    gamma = gamma_presentacion()
    establecido = ConjuntoEstablecido(gamma)
    assert establecido.admite(gamma.palabra('x^-1 a x a^-1'))
    assert not establecido.admite(gamma.palabra('[a, b]'))
    assert not establecido.simetria_activa


def test_conjunto_gamma_valido():
    informe = comprobar_conjunto_gamma()
    assert informe.valido
    assert [r.nombre for r in informe.resultados if not r.valido] == []


def test_conjunto_gamma_con_traza_alterada(tmp_path):
    for nombre in TRAZAS_SIMETRIA + TRAZAS_CONMUTADORES:
        shutil.copy(os.path.join(PATH_TRAZAS, f'{nombre}.txt'), tmp_path)
    (tmp_path / 'clase_dos.txt').unlink()
    informe = comprobar_conjunto_gamma(str(tmp_path))
    assert not informe.valido
    fallidas = [r.nombre for r in informe.resultados if not r.valido]
    assert 'clase_dos' in fallidas


def test_nq2_evaluacion(F):
    assert nq2_eval(palabra('[a, b]', F)) == TripleMalcev(0, 0, 1)
    assert nq2_eval(palabra('b a', F)) == TripleMalcev(1, 1, -1)
    assert nq2_eval(palabra('1', F)) == TripleMalcev()


@pytest.mark.parametrize('m', range(1, 11))
def test_nq2_conmutador_de_potencias(F, m):
    assert nq2_eval(palabra(f'[a^{m}, b^{m}]', F)).como_tupla() == (0, 0, m * m)


def test_nq2_es_homomorfismo(F):
    palabras = palabras_reducidas(F, 2)
    for u in palabras:
        for v in palabras:
            assert nq2_eval(u * v) == nq2_eval(u) * nq2_eval(v)
        assert nq2_eval(u ** -1) == nq2_eval(u).inverso()


def test_nq2_alfabeto_no_soportado():
    G = grupo_libre(['a', 'b', 'x'])
    with pytest.raises(AlfabetoNoSoportadoError):
        nq2_eval(palabra('a x', G))


@pytest.mark.parametrize('m, n, orden', [(2, 3, 1), (3, 4, 1), (2, 4, 4)])
def test_nq2_orden_c(m, n, orden):
    assert nq2_orden_c(presentacion_potencias(m, n).relatores) == orden


def test_nq2_relator_no_central(F):
    with pytest.raises(NoCentralError):
        nq2_orden_c([palabra('a', F)])


@pytest.mark.parametrize('m, n, coeficientes', [(2, 3, (2, 1)), (3, 4, (3, 2)), (5, 7, (3, 2))])
def test_coeficientes_bezout(m, n, coeficientes):
    p, q = coeficientes_bezout(m, n)
    assert (p, q) == coeficientes
    assert p * m - q * n == 1


@pytest.mark.parametrize('m, n', [(2, 4), (6, 9)])
def test_no_coprimos(m, n):
    with pytest.raises(NoCoprimosError):
        coeficientes_bezout(m, n)
    with pytest.raises(NoCoprimosError):
        tuberia_abeliana(m, n)


def test_mapa_extension():
    informe = verificar_mapa_extension(2, 3)
    assert informe.valido
    assert (informe.p, informe.q) == (2, 1)
    assert len(informe.imagenes) == 9


@pytest.mark.parametrize('m, n', [(2, 3), (3, 4), (2, 5)])
def test_tuberia_abeliana(m, n):
    informe = tuberia_abeliana(m, n)
    assert informe.superada
    assert [e.nombre for e in informe.etapas] == ['trazas-gamma', 'mapa-extension', 'cociente-clase-2']


@pytest.mark.slow
def test_tuberia_todos_los_pares():
    assert [(m, n) for m, n in PARES_VERIFICACION if not tuberia_abeliana(m, n).superada] == []
