"""
Script principal con la línea de órdenes de la biblioteca de grupos.

Órdenes:
- construct <grupo>: orden, series derivada y central inferior, exponente
- power <grupo> --m M: subgrupo potencia G^{*m}
- law-check <grupo> --law L [--strategy S]: satisfacción de una ley
- detect <grupo> --law L --m M --n N: informe de detectabilidad en subgrupos potencia
- certify <presentación> <certificado>: comprobación de un certificado de productos de conjugados
- trace-check <traza>: comprobación de una traza de derivación
- its-abelian --m M --n N [--pdf]: tubería que prueba que la presentación de seis relatores es Z × Z
- search-1458 [--w-sections]: búsqueda del grupo de orden 1458
- truncation-witness --m M --n N --bound B: testigo de que cinco relatores no bastan
- verify-paper [--only NOMBRES] [--pdf [RUTA]]: verificación completa

Todas las órdenes admiten --json, --parallel K, --verbose y --debug.

Códigos de salida: 0 si todo es correcto, 1 si una comprobación falla o hay un error de dominio y 2 para
errores de uso, de gramática o de fichero.

Ejemplo de uso:
    $ python main.py detect "hol(7)" --law "[[x^2,y^2]^3,y^3]" --m 2 --n 3 --json
"""

import argparse
import json
import logging
import os
import sys
from typing import List, Optional, Sequence

from config import FORMATO_LOG, NIVEL_LOG, PARALELISMO_POR_DEFECTO, VARIABLE_PARALELISMO
from construcciones.accion_invalida_error import AccionInvalidaError
from construcciones.busqueda_1458 import buscar_contraejemplo_1458
from construcciones.especificacion import construir_grupo
from construcciones.no_encontrado_error import NoEncontradoError
from deteccion.busqueda_agotada_error import BusquedaAgotadaError
from deteccion.comprobaciones import testigo_truncamiento
from deteccion.informe_deteccion import informe_deteccion
from deteccion.no_nilpotente_error import NoNilpotenteError
from deteccion.precondicion_violada_error import PrecondicionVioladaError
from deteccion.verificacion import verificar
from grupos_finitos.no_normal_error import NoNormalError
from grupos_finitos.series import (clase_nilpotencia, exponente, longitud_derivada, serie_central_inferior,
                                   serie_derivada, subgrupo_potencia)
from grupos_libres.abeliano import tuberia_abeliana
from grupos_libres.alfabeto_no_soportado_error import AlfabetoNoSoportadoError
from grupos_libres.certificado import comprobar_certificado
from grupos_libres.ficheros import leer_certificado, leer_presentacion, leer_traza
from grupos_libres.formato_fichero_error import FormatoFicheroError
from grupos_libres.no_central_error import NoCentralError
from grupos_libres.no_coprimos_error import NoCoprimosError
from grupos_libres.traza import comprobar_traza
from informes.generador_informes import generar_ficha_tuberia, generar_verificacion
from leyes.analizador import analizar_ley
from leyes.aridad_incorrecta_error import AridadIncorrectaError
from leyes.evaluacion import Automatico, Estrategia, Estructural, Exhaustivo, satisface
from leyes.sintaxis_invalida_error import SintaxisInvalidaError

logger = logging.getLogger(__name__)

ERRORES_DOMINIO = (NoCoprimosError, NoNilpotenteError, PrecondicionVioladaError, BusquedaAgotadaError,
                   NoEncontradoError, AccionInvalidaError, NoNormalError, AlfabetoNoSoportadoError,
                   NoCentralError, AridadIncorrectaError)


def paralelismo_por_defecto() -> int:
    """
    Lee el número de procesos de la variable de entorno; si falta o no es un entero positivo se usa el valor
    por defecto.
    """
    valor = os.environ.get(VARIABLE_PARALELISMO, '')
    try:
        paralelismo = int(valor)
    except ValueError:
        return PARALELISMO_POR_DEFECTO
    return paralelismo if paralelismo > 0 else PARALELISMO_POR_DEFECTO


def estrategia_de_texto(texto: str, paralelismo: int = 1) -> Estrategia:
    """
    Convierte `auto`, `exhaustive:PRESUPUESTO` o `structural` en una estrategia de satisfacción.

    Excepciones:
    ------------
    ValueError
        Si el texto no es ninguna de las formas admitidas.
    """
    match texto.split(':', 1):
        case ['auto']:
            return Automatico(paralelismo=paralelismo)
        case ['structural']:
            return Estructural()
        case ['exhaustive', presupuesto] if presupuesto.isdigit() and int(presupuesto) > 0:
            return Exhaustivo(int(presupuesto), paralelismo)
    raise ValueError(f'Estrategia no válida: {texto}')


def _entero_positivo(texto: str) -> int:
    try:
        valor = int(texto)
    except ValueError:
        raise argparse.ArgumentTypeError(f'se esperaba un entero y se ha recibido {texto!r}')
    if valor < 1:
        raise argparse.ArgumentTypeError(f'se esperaba un entero positivo y se ha recibido {texto!r}')
    return valor


def _crear_parser() -> argparse.ArgumentParser:
    comun = argparse.ArgumentParser(add_help=False)
    comun.add_argument('--json', action='store_true', help='salida en JSON')
    comun.add_argument('--parallel', type=_entero_positivo, default=None, help='número de procesos')
    comun.add_argument('--verbose', action='store_true', help='registro a nivel INFO')
    comun.add_argument('--debug', action='store_true', help='registro a nivel DEBUG')

    parser = argparse.ArgumentParser(prog='grupos', description='Detectabilidad de leyes en subgrupos potencia')
    ordenes = parser.add_subparsers(dest='orden', required=True)

    p = ordenes.add_parser('construct', parents=[comun], help='construye un grupo y resume sus series')
    p.add_argument('grupo')

    p = ordenes.add_parser('power', parents=[comun], help='subgrupo potencia G^{*m}')
    p.add_argument('grupo')
    p.add_argument('--m', type=_entero_positivo, required=True)

    p = ordenes.add_parser('law-check', parents=[comun], help='comprueba si un grupo satisface una ley')
    p.add_argument('grupo')
    p.add_argument('--law', required=True)
    p.add_argument('--strategy', default='auto')

    p = ordenes.add_parser('detect', parents=[comun], help='informe de detectabilidad')
    p.add_argument('grupo')
    p.add_argument('--law', required=True)
    p.add_argument('--m', type=_entero_positivo, required=True)
    p.add_argument('--n', type=_entero_positivo, required=True)
    p.add_argument('--strategy', default='auto')

    p = ordenes.add_parser('certify', parents=[comun], help='comprueba un certificado')
    p.add_argument('presentacion')
    p.add_argument('certificado')

    p = ordenes.add_parser('trace-check', parents=[comun], help='comprueba una traza de derivación')
    p.add_argument('traza')

    p = ordenes.add_parser('its-abelian', parents=[comun], help='tubería abeliana para (m, n)')
    p.add_argument('--m', type=_entero_positivo, required=True)
    p.add_argument('--n', type=_entero_positivo, required=True)
    p.add_argument('--pdf', nargs='?', const='', default=None, help='genera la ficha en PDF')

    p = ordenes.add_parser('search-1458', parents=[comun], help='búsqueda del grupo de orden 1458')
    p.add_argument('--w-sections', action='store_true', help='sólo acciones inducidas por W')

    p = ordenes.add_parser('truncation-witness', parents=[comun], help='testigo de truncamiento')
    p.add_argument('--m', type=_entero_positivo, required=True)
    p.add_argument('--n', type=_entero_positivo, required=True)
    p.add_argument('--bound', type=_entero_positivo, required=True)

    p = ordenes.add_parser('verify-paper', parents=[comun], help='verificación completa')
    p.add_argument('--only', default=None, help='nombres separados por comas')
    p.add_argument('--pdf', nargs='?', const='', default=None, help='genera la tabla en PDF')
    return parser


def _resumen_grupo(G) -> dict:
    derivada = serie_derivada(G)
    central = serie_central_inferior(G)
    return {
        'group': G.descriptor,
        'order': G.orden,
        'exponent': exponente(G),
        'derived_series': [H.orden for H in derivada],
        'derived_length': longitud_derivada(G),
        'lower_central_series': [H.orden for H in central],
        'nilpotency_class': clase_nilpotencia(G),
    }


def _texto_resumen(resumen: dict) -> str:
    return '\n'.join(f'{clave}: {valor}' for clave, valor in resumen.items())


def _construct(args) -> tuple:
    return _resumen_grupo(construir_grupo(args.grupo)), 0


def _power(args) -> tuple:
    G = construir_grupo(args.grupo)
    resumen = _resumen_grupo(subgrupo_potencia(G, args.m))
    resumen['group'] = f'{G.descriptor}^(*{args.m})'
    resumen['index'] = G.orden // resumen['order']
    return resumen, 0


def _law_check(args) -> tuple:
    G = construir_grupo(args.grupo)
    ley = analizar_ley(args.law)
    resultado = satisface(G, ley, estrategia_de_texto(args.strategy, args.parallel))
    return {'group': G.descriptor, 'law': ley.texto, **resultado.to_dict()}, 0


def _detect(args) -> tuple:
    informe = informe_deteccion(construir_grupo(args.grupo), analizar_ley(args.law), args.m, args.n,
                                estrategia_de_texto(args.strategy, args.parallel))
    return informe.to_dict(), 0


def _certify(args) -> tuple:
    presentacion = leer_presentacion(args.presentacion)
    objetivo, certificado = leer_certificado(args.certificado, presentacion)
    resultado = comprobar_certificado(presentacion, objetivo, certificado)
    return resultado.to_dict(), 0 if resultado.valido else 1


def _trace_check(args) -> tuple:
    presentacion, traza = leer_traza(args.traza)
    resultado = comprobar_traza(presentacion, traza)
    return resultado.to_dict(), 0 if resultado.valido else 1


def _its_abelian(args) -> tuple:
    informe = tuberia_abeliana(args.m, args.n)
    salida = informe.to_dict()
    if args.pdf is not None:
        salida['pdf'] = generar_ficha_tuberia(informe, args.pdf or None)
    return salida, 0 if informe.superada else 1


def _search_1458(args) -> tuple:
    G = buscar_contraejemplo_1458(args.parallel, solo_secciones_de_w=args.w_sections)
    return {'group': G.descriptor, 'order': G.orden, 'derived_length': longitud_derivada(G),
            'derived_length_2': longitud_derivada(subgrupo_potencia(G, 2)),
            'derived_length_3': longitud_derivada(subgrupo_potencia(G, 3))}, 0


def _truncation_witness(args) -> tuple:
    return testigo_truncamiento(args.m, args.n, args.bound).to_dict(), 0


def _verificacion_completa(args) -> tuple:
    seleccion = None if args.only is None else [s.strip() for s in args.only.split(',') if s.strip()]
    filas = verificar(seleccion, args.parallel)
    salida = {'checks': [f.to_dict() for f in filas]}
    if args.pdf is not None:
        salida['pdf'] = generar_verificacion(filas, args.pdf or None)
    return salida, 0 if all(f.superada for f in filas) else 1


def _texto_verificacion(salida: dict) -> str:
    lineas = [f'{c["status"]:4}  {c["name"]:28} {c["millis"]:10.1f} ms' for c in salida['checks']]
    if 'pdf' in salida:
        lineas.append(f'pdf: {salida["pdf"]}')
    return '\n'.join(lineas)


ORDENES = {
    'construct': _construct,
    'power': _power,
    'law-check': _law_check,
    'detect': _detect,
    'certify': _certify,
    'trace-check': _trace_check,
    'its-abelian': _its_abelian,
    'search-1458': _search_1458,
    'truncation-witness': _truncation_witness,
    'verify-paper': _verificacion_completa,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Ejecuta la línea de órdenes.

    Parámetros:
    -----------
    argv : Optional[Sequence[str]]
        Argumentos sin el nombre del programa; por defecto los del proceso.

    Retorna:
    --------
    int
        0 si todo es correcto, 1 si una comprobación falla o hay un error de dominio, 2 si hay un error de uso.
    """
    parser = _crear_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    nivel = logging.DEBUG if args.debug else logging.INFO if args.verbose else getattr(logging, NIVEL_LOG)
    logging.basicConfig(level=nivel, format=FORMATO_LOG, force=True)
    if args.parallel is None:
        args.parallel = paralelismo_por_defecto()

    try:
        salida, codigo = ORDENES[args.orden](args)
    except SintaxisInvalidaError as e:
        print(f'Error de sintaxis: {e}', file=sys.stderr)
        return 2
    except FormatoFicheroError as e:
        print(f'Error de formato: {e}', file=sys.stderr)
        return 2
    except ERRORES_DOMINIO as e:
        print(f'Error: {e}', file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f'Error de uso: {e}', file=sys.stderr)
        return 2

    if args.json:
        print(json.dumps(salida, indent=2, ensure_ascii=False))
    elif args.orden == 'verify-paper':
        print(_texto_verificacion(salida))
    else:
        print(_texto_resumen(salida))
    return codigo


if __name__ == '__main__':
    sys.exit(run())
