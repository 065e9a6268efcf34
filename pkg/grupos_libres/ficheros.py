"""
Módulo para leer y escribir presentaciones, certificados y trazas en ficheros de texto.

Formatos (una entrada por línea; las líneas vacías y las que empiezan por '#' se ignoran):

    alphabet: a b x y z
    relators:
    [a, x]
    ...
    start: <palabra>
    step: pos=<int> rel=<int> sign=<+1|-1> conj=<palabra> result=<palabra>
    end: <palabra>

Un fichero de presentación contiene sólo `alphabet:` y `relators:`. Un fichero de certificado contiene
`target: <palabra>` seguido de líneas `step: rel=<int> sign=<±1> conj=<palabra>`. Las palabras usan la
gramática de palabras, con `1` como palabra vacía.

Funciones:
    - leer_presentacion(ruta) -> Presentacion
    - escribir_presentacion(ruta, presentacion) -> None
    - leer_traza(ruta) -> Tuple[Presentacion, Traza]
    - escribir_traza(ruta, presentacion, traza) -> None
    - leer_certificado(ruta, presentacion) -> Tuple[PalabraLibre, Certificado]
    - escribir_certificado(ruta, objetivo, certificado) -> None

Excepciones:
    - FormatoFicheroError: Error personalizado para ficheros mal formados.
"""

import re
from typing import List, Optional, Tuple

from grupos_libres.certificado import Certificado, PasoCertificado
from grupos_libres.formato_fichero_error import FormatoFicheroError
from grupos_libres.palabra_libre import PalabraLibre, texto
from grupos_libres.presentacion import Presentacion
from grupos_libres.traza import PasoTraza, Traza
from leyes.sintaxis_invalida_error import SintaxisInvalidaError

_PASO_TRAZA = re.compile(r'pos=(-?\d+)\s+rel=(-?\d+)\s+sign=([+-]?\d+)\s+conj=(.+?)\s+result=(.+)')
_PASO_CERTIFICADO = re.compile(r'rel=(-?\d+)\s+sign=([+-]?\d+)\s+conj=(.+)')

Lineas = List[Tuple[int, str]]


def _leer_lineas(ruta: str) -> Lineas:
    try:
        with open(ruta, encoding='utf-8') as f:
            contenido = f.read().splitlines()
    except OSError as error:
        raise FormatoFicheroError(ruta, 0, f'no se puede leer ({error.strerror})') from error
    return [(i, l.strip()) for i, l in enumerate(contenido, start=1) if l.strip() and not l.strip().startswith('#')]


def _clave(linea: str) -> Tuple[Optional[str], str]:
    clave, separador, resto = linea.partition(':')
    if not separador or not re.fullmatch(r'[a-z]+', clave.strip()):
        return None, linea
    return clave.strip(), resto.strip()


def _palabra(ruta: str, numero: int, presentacion: Presentacion, texto_palabra: str) -> PalabraLibre:
    try:
        return presentacion.palabra(texto_palabra)
    except SintaxisInvalidaError as error:
        raise FormatoFicheroError(ruta, numero, str(error)) from error


def _entero(ruta: str, numero: int, texto_entero: str) -> int:
    try:
        return int(texto_entero)
    except ValueError as error:
        raise FormatoFicheroError(ruta, numero, f'se esperaba un entero y se ha leído {texto_entero}') from error


def _presentacion(ruta: str, lineas: Lineas) -> Tuple[Presentacion, Lineas]:
    if not lineas or _clave(lineas[0][1])[0] != 'alphabet':
        raise FormatoFicheroError(ruta, lineas[0][0] if lineas else 0, "se esperaba 'alphabet:'")
    alfabeto = _clave(lineas[0][1])[1].split()
    if len(lineas) < 2 or lineas[1][1] != 'relators:':
        raise FormatoFicheroError(ruta, lineas[1][0] if len(lineas) > 1 else lineas[0][0], "se esperaba 'relators:'")
    i = 2
    relatores = []
    while i < len(lineas) and _clave(lineas[i][1])[0] is None:
        relatores.append(lineas[i])
        i += 1
    try:
        presentacion = Presentacion(alfabeto, [])
    except ValueError as error:
        raise FormatoFicheroError(ruta, lineas[0][0], str(error)) from error
    palabras = []
    for numero, linea in relatores:
        w = _palabra(ruta, numero, presentacion, linea)
        if w.is_identity:
            raise FormatoFicheroError(ruta, numero, f'el relator {linea} se reduce a la palabra vacía')
        palabras.append(w)
    return Presentacion(alfabeto, palabras), lineas[i:]


def leer_presentacion(ruta: str) -> Presentacion:
    """
    Lee un fichero de presentación.

    Parámetros:
    -----------
    ruta : str
        Ruta del fichero.

    Retorna:
    --------
    Presentacion
        La presentación leída.

    Excepciones:
    ------------
    FormatoFicheroError
        Si el fichero no existe o no respeta el formato.
    """
    presentacion, resto = _presentacion(ruta, _leer_lineas(ruta))
    if resto:
        raise FormatoFicheroError(ruta, resto[0][0], f'línea inesperada: {resto[0][1]}')
    return presentacion


def _texto_presentacion(presentacion: Presentacion) -> str:
    return f'alphabet: {" ".join(presentacion.alfabeto)}\nrelators:\n' + \
        ''.join(f'{texto(r)}\n' for r in presentacion.relatores)


def escribir_presentacion(ruta: str, presentacion: Presentacion) -> None:
    with open(ruta, 'w', encoding='utf-8') as f:
        f.write(_texto_presentacion(presentacion))


def leer_traza(ruta: str) -> Tuple[Presentacion, Traza]:
    """
    Lee un fichero de traza con su presentación.

    Parámetros:
    -----------
    ruta : str
        Ruta del fichero.

    Retorna:
    --------
    Tuple[Presentacion, Traza]
        La presentación declarada en el fichero y la traza.

    Excepciones:
    ------------
    FormatoFicheroError
        Si el fichero no existe, no respeta el formato o contiene palabras mal escritas.
    """
    presentacion, resto = _presentacion(ruta, _leer_lineas(ruta))
    inicio: Optional[PalabraLibre] = None
    fin: Optional[PalabraLibre] = None
    pasos = []
    for numero, linea in resto:
        clave, valor = _clave(linea)
        match clave:
            case 'start' if inicio is None and not pasos:
                inicio = _palabra(ruta, numero, presentacion, valor)
            case 'step' if inicio is not None and fin is None:
                coincidencia = _PASO_TRAZA.fullmatch(valor)
                if coincidencia is None:
                    raise FormatoFicheroError(ruta, numero, f'paso mal formado: {valor}')
                pos, rel, signo, conj, resultado = coincidencia.groups()
                pasos.append(PasoTraza(_entero(ruta, numero, pos), _entero(ruta, numero, rel),
                                       _entero(ruta, numero, signo), _palabra(ruta, numero, presentacion, conj),
                                       _palabra(ruta, numero, presentacion, resultado)))
            case 'end' if inicio is not None and fin is None:
                fin = _palabra(ruta, numero, presentacion, valor)
            case _:
                raise FormatoFicheroError(ruta, numero, f'línea inesperada: {linea}')
    if inicio is None or fin is None:
        raise FormatoFicheroError(ruta, 0, "faltan las líneas 'start:' o 'end:'")
    return presentacion, Traza(inicio, tuple(pasos), fin)


def escribir_traza(ruta: str, presentacion: Presentacion, traza: Traza) -> None:
    with open(ruta, 'w', encoding='utf-8') as f:
        f.write(_texto_presentacion(presentacion))
        f.write(f'start: {texto(traza.inicio)}\n')
        for p in traza.pasos:
            f.write(f'step: pos={p.posicion} rel={p.relator} sign={p.signo:+d} conj={texto(p.conjugador)} '
                    f'result={texto(p.resultado)}\n')
        f.write(f'end: {texto(traza.fin)}\n')


def leer_certificado(ruta: str, presentacion: Presentacion) -> Tuple[PalabraLibre, Certificado]:
    """
    Lee un fichero de certificado; las palabras se leen en el alfabeto de la presentación.

    Parámetros:
    -----------
    ruta : str
        Ruta del fichero.
    presentacion : Presentacion
        Presentación a la que se refiere el certificado.

    Retorna:
    --------
    Tuple[PalabraLibre, Certificado]
        El objetivo y el certificado.

    Excepciones:
    ------------
    FormatoFicheroError
        Si el fichero no existe o no respeta el formato.
    """
    lineas = _leer_lineas(ruta)
    if not lineas or _clave(lineas[0][1])[0] != 'target':
        raise FormatoFicheroError(ruta, lineas[0][0] if lineas else 0, "se esperaba 'target:'")
    objetivo = _palabra(ruta, lineas[0][0], presentacion, _clave(lineas[0][1])[1])
    pasos = []
    for numero, linea in lineas[1:]:
        clave, valor = _clave(linea)
        coincidencia = _PASO_CERTIFICADO.fullmatch(valor) if clave == 'step' else None
        if coincidencia is None:
            raise FormatoFicheroError(ruta, numero, f'línea inesperada: {linea}')
        rel, signo, conj = coincidencia.groups()
        pasos.append(PasoCertificado(_entero(ruta, numero, rel), _entero(ruta, numero, signo),
                                     _palabra(ruta, numero, presentacion, conj)))
    return objetivo, Certificado(tuple(pasos))


def escribir_certificado(ruta: str, objetivo: PalabraLibre, certificado: Certificado) -> None:
    with open(ruta, 'w', encoding='utf-8') as f:
        f.write(f'target: {texto(objetivo)}\n')
        for p in certificado.pasos:
            f.write(f'step: rel={p.relator} sign={p.signo:+d} conj={texto(p.conjugador)}\n')
