"""
Módulo con las trazas de derivación.

Una traza parte de una palabra y, en cada paso, inserta un conjugado de un relator, (r^signo)^conjugador, en
una posición de la palabra actual (0 = al principio, longitud = al final) y reduce libremente. Cada paso
declara el resultado, que debe coincidir con el calculado. Una traza válida prueba que inicio y fin son
iguales en el grupo presentado, es decir, que la relación inicio · fin⁻¹ es trivial.

Clases:
    - PasoTraza
    - Traza

Funciones:
    - aplicar_paso(presentacion, actual, paso) -> PalabraLibre
    - comprobar_traza(presentacion, traza) -> ResultadoComprobacion
"""

from dataclasses import dataclass
from typing import Tuple

from grupos_libres.certificado import ResultadoComprobacion, factor_conjugado
from grupos_libres.palabra_libre import PalabraLibre, texto
from grupos_libres.presentacion import Presentacion


@dataclass(frozen=True)
class PasoTraza:
    posicion: int
    relator: int
    signo: int
    conjugador: PalabraLibre
    resultado: PalabraLibre


@dataclass(frozen=True)
class Traza:
    """
    Traza de derivación: palabra inicial, pasos y palabra final.
    """
    inicio: PalabraLibre
    pasos: Tuple[PasoTraza, ...]
    fin: PalabraLibre

    @property
    def relacion(self) -> PalabraLibre:
        return self.inicio * self.fin ** -1

    def __len__(self) -> int:
        return len(self.pasos)

    def to_dict(self) -> dict:
        return {
            'start': texto(self.inicio),
            'steps': [{'pos': p.posicion, 'rel': p.relator, 'sign': p.signo, 'conj': texto(p.conjugador),
                       'result': texto(p.resultado)} for p in self.pasos],
            'end': texto(self.fin),
        }


def aplicar_paso(presentacion: Presentacion, actual: PalabraLibre, paso: PasoTraza) -> PalabraLibre:
    """
    Inserta (r^signo)^conjugador en la posición del paso y reduce.

    Parámetros:
    -----------
    presentacion : Presentacion
        Presentación cuyos relatores se insertan.
    actual : PalabraLibre
        Palabra actual, reducida.
    paso : PasoTraza
        Paso a aplicar; el resultado declarado no se consulta.

    Retorna:
    --------
    PalabraLibre
        prefijo · (r^signo)^conjugador · sufijo, libremente reducida.

    Excepciones:
    ------------
    IndexError
        Si la posición o el índice de relator están fuera de rango.
    ValueError
        Si el signo no es ±1.
    """
    if not 0 <= paso.posicion <= len(actual):
        raise IndexError(f'La posición {paso.posicion} está fuera de la palabra {texto(actual)} '
                         f'de longitud {len(actual)}')
    insercion = factor_conjugado(presentacion, paso.relator, paso.signo, paso.conjugador)
    return actual.subword(0, paso.posicion) * insercion * actual.subword(paso.posicion, len(actual))


def comprobar_traza(presentacion: Presentacion, traza: Traza) -> ResultadoComprobacion:
    """
    Comprueba una traza paso a paso.

    Parámetros:
    -----------
    presentacion : Presentacion
        Presentación de la traza.
    traza : Traza
        Traza a comprobar.

    Retorna:
    --------
    ResultadoComprobacion
        Válido, o inválido con el índice (desde 0) del primer paso incorrecto, o con índice igual al número
        de pasos si la última palabra no coincide con el fin declarado.
    """
    actual = traza.inicio
    for i, paso in enumerate(traza.pasos):
        try:
            siguiente = aplicar_paso(presentacion, actual, paso)
        except (IndexError, ValueError) as error:
            return ResultadoComprobacion.incorrecto(i, str(error))
        if siguiente != paso.resultado:
            return ResultadoComprobacion.incorrecto(
                i, f'Se obtiene {texto(siguiente)} y se declara {texto(paso.resultado)}')
        actual = siguiente
    if actual != traza.fin:
        return ResultadoComprobacion.incorrecto(len(traza.pasos),
                                                f'La palabra final es {texto(actual)} y se declara {texto(traza.fin)}')
    return ResultadoComprobacion.correcto()
