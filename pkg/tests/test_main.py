import json
import os

import pytest

from config import PATH_TRAZAS, VARIABLE_PARALELISMO
from leyes.evaluacion import Automatico, Estructural, Exhaustivo
from main import estrategia_de_texto, paralelismo_por_defecto, run


def _json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def test_construct(capsys):
    assert run(['construct', 'heis3', '--json']) == 0
    salida = _json(capsys)
    assert salida['order'] == 27
    assert salida['derived_series'] == [27, 3, 1]
    assert salida['nilpotency_class'] == 2


def test_construct_texto(capsys):
    assert run(['construct', 'hol(7)']) == 0
    salida = capsys.readouterr().out
    assert 'order: 42' in salida
    assert 'nilpotency_class: None' in salida


def test_power(capsys):
    assert run(['power', 'Z(12)', '--m', '4', '--json']) == 0
    salida = _json(capsys)
    assert (salida['order'], salida['index']) == (3, 4)


def test_detect_holomorfo_7(capsys):
    assert run(['detect', 'hol(7)', '--law', '[[x^2,y^2]^3,y^3]', '--m', '2', '--n', '3', '--json']) == 0
    salida = _json(capsys)
    assert (salida['in_m'], salida['in_n'], salida['in_G']) == ('holds', 'holds', 'fails')


def test_law_check(capsys):
    assert run(['law-check', 'Z(5)', '--law', '[x,y]', '--json']) == 0
    assert _json(capsys)['verdict'] == 'holds'


def test_law_check_falla_sin_error(capsys):
    assert run(['law-check', 'hol(3)', '--law', '[x,y]', '--strategy', 'exhaustive:1000', '--json']) == 0
    salida = _json(capsys)
    assert salida['verdict'] == 'fails'
    assert salida['strategy'] == 'exhaustive'


def test_law_check_sintaxis(capsys):
    assert run(['law-check', 'Z(5)', '--law', '[x,']) == 2
    assert 'posición 3' in capsys.readouterr().err


def test_grupo_mal_escrito(capsys):
    assert run(['construct', 'Q(5)']) == 2
    assert 'Error de sintaxis' in capsys.readouterr().err


def test_estrategia_no_valida():
    assert run(['law-check', 'Z(5)', '--law', '[x,y]', '--strategy', 'exhaustive:x']) == 2


def test_opcion_desconocida():
    assert run(['construct', 'Z(5)', '--no-existe']) == 2


def test_sin_orden():
    assert run([]) == 2


def test_entero_no_positivo():
    assert run(['power', 'Z(12)', '--m', '0']) == 2


def test_certify(capsys):
    presentacion = os.path.join(PATH_TRAZAS, 'presentacion_ab.txt')
    certificado = os.path.join(PATH_TRAZAS, 'certificado_a2_b.txt')
    assert run(['certify', presentacion, certificado, '--json']) == 0
    assert _json(capsys) == {'status': 'valid'}


def test_certify_fichero_inexistente(tmp_path):
    presentacion = os.path.join(PATH_TRAZAS, 'presentacion_ab.txt')
    assert run(['certify', presentacion, str(tmp_path / 'no_existe.txt')]) == 2


def test_trace_check(capsys):
    assert run(['trace-check', os.path.join(PATH_TRAZAS, 'clase_dos.txt'), '--json']) == 0
    assert _json(capsys)['status'] == 'valid'


def test_trace_check_invalida(tmp_path, capsys):
    ruta = tmp_path / 'traza.txt'
    ruta.write_text('alphabet: a b\nrelators:\n[a, b]\nstart: b a\n'
                    'step: pos=2 rel=0 sign=+1 conj=1 result=b a\nend: b a\n', encoding='utf-8')
    assert run(['trace-check', str(ruta), '--json']) == 1
    salida = _json(capsys)
    assert (salida['status'], salida['step']) == ('invalid', 0)


def test_its_abelian(capsys):
    assert run(['its-abelian', '--m', '2', '--n', '3', '--json']) == 0
    assert _json(capsys)['status'] == 'pass'


def test_its_abelian_no_coprimos(capsys):
    assert run(['its-abelian', '--m', '2', '--n', '4']) == 1
    assert 'Error' in capsys.readouterr().err


def test_its_abelian_pdf(tmp_path, capsys):
    ruta = str(tmp_path / 'ficha.pdf')
    assert run(['its-abelian', '--m', '2', '--n', '3', '--pdf', ruta, '--json']) == 0
    assert _json(capsys)['pdf'] == ruta
    assert os.path.getsize(ruta) > 0


def test_truncation_witness(capsys):
    assert run(['truncation-witness', '--m', '2', '--n', '3', '--bound', '5', '--json']) == 0
    assert _json(capsys)['order'] == 6


def test_truncation_witness_agotado():
    assert run(['truncation-witness', '--m', '2', '--n', '3', '--bound', '2']) == 1


def test_verify_paper_seleccion(capsys):
    assert run(['verify-paper', '--only', 'W-derived-length,a2-b-certificate', '--json']) == 0
    salida = _json(capsys)
    assert [c['name'] for c in salida['checks']] == ['W-derived-length', 'a2-b-certificate']
    assert all(c['status'] == 'pass' for c in salida['checks'])


def test_verify_paper_pdf(tmp_path, capsys):
    ruta = str(tmp_path / 'tabla.pdf')
    assert run(['verify-paper', '--only', 'nq2-quotient', '--pdf', ruta]) == 0
    salida = capsys.readouterr().out
    assert 'pass' in salida and ruta in salida
    assert os.path.getsize(ruta) > 0


def test_verify_paper_nombre_desconocido():
    assert run(['verify-paper', '--only', 'no-existe']) == 2


@pytest.mark.parametrize('texto, estrategia', [('auto', Automatico(paralelismo=3)), ('structural', Estructural()),
                                               ('exhaustive:50', Exhaustivo(50, 3))])
def test_estrategia_de_texto(texto, estrategia):
    assert estrategia_de_texto(texto, 3) == estrategia


def test_paralelismo_por_defecto(monkeypatch):
    monkeypatch.setenv(VARIABLE_PARALELISMO, '4')
    assert paralelismo_por_defecto() == 4
    monkeypatch.setenv(VARIABLE_PARALELISMO, 'muchos')
    assert paralelismo_por_defecto() == 1
    monkeypatch.delenv(VARIABLE_PARALELISMO)
    assert paralelismo_por_defecto() == 1


@pytest.mark.slow
def test_verify_paper_completo():
    assert run(['verify-paper']) == 0


@pytest.mark.slow
def test_search_1458(capsys):
    assert run(['search-1458', '--json']) == 0
    salida = _json(capsys)
    assert (salida['order'], salida['derived_length']) == (1458, 3)
    assert salida['derived_length_2'] <= 2 and salida['derived_length_3'] <= 2
