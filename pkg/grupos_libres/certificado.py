"""
Módulo con los certificados de pertenencia a la clausura normal de los relatores.

Un certificado expresa una palabra objetivo como producto de conjugados de relatores,
(r_{i₁}^{ε₁})^{c₁} · … · (r_{iₖ}^{εₖ})^{cₖ}, con u^c = c⁻¹uc. Un certificado válido prueba que el objetivo es
trivial en el grupo presentado.

Clases:
    - ResultadoComprobacion
    - PasoCertificado
    - Certificado

Funciones:
    - comprobar_certificado(presentacion, objetivo, certificado) -> ResultadoComprobacion
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from grupos_libres.palabra_libre import PalabraLibre, conjugar, texto
from grupos_libres.presentacion import Presentacion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ResultadoComprobacion:
    """
    Resultado de comprobar un certificado o una traza.

    Atributos:
    ----------
    valido : bool
        True si todos los pasos son correctos.
    paso : Optional[int]
        Índice (desde 0) del primer paso incorrecto; igual al número de pasos si lo que falla es la
        comparación final. None si es válido.
    motivo : str
        Descripción del fallo.
    """
    valido: bool
    paso: Optional[int] = None
    motivo: str = ''

    @classmethod
    def correcto(cls) -> 'ResultadoComprobacion':
        return cls(True)

    @classmethod
    def incorrecto(cls, paso: int, motivo: str) -> 'ResultadoComprobacion':
        logger.info('Comprobación fallida en el paso %d: %s', paso, motivo)
        return cls(False, paso, motivo)

    def to_dict(self) -> dict:
        if self.valido:
            return {'status': 'valid'}
        return {'status': 'invalid', 'step': self.paso, 'reason': self.motivo}


@dataclass(frozen=True)
class PasoCertificado:
    relator: int
    signo: int
    conjugador: PalabraLibre


@dataclass(frozen=True)
class Certificado:
    pasos: Tuple[PasoCertificado, ...]

    def __len__(self) -> int:
        return len(self.pasos)

    def to_dict(self) -> dict:
        return {'steps': [{'rel': p.relator, 'sign': p.signo, 'conj': texto(p.conjugador)} for p in self.pasos]}


def factor_conjugado(presentacion: Presentacion, relator: int, signo: int, conjugador: PalabraLibre) -> PalabraLibre:
    """
    Calcula (r^signo)^conjugador para el relator de índice dado.

    Excepciones:
    ------------
    IndexError
        Si el índice está fuera de rango.
    ValueError
        Si el signo no es ±1.
    """
    if not 0 <= relator < len(presentacion):
        raise IndexError(f'El relator {relator} no existe; la presentación tiene {len(presentacion)}')
    if signo not in (1, -1):
        raise ValueError(f'El signo debe ser +1 o -1 y es {signo}')
    return conjugar(presentacion.relator(relator) ** signo, conjugador)


def comprobar_certificado(presentacion: Presentacion, objetivo: PalabraLibre,
                          certificado: Certificado) -> ResultadoComprobacion:
    """
    Comprueba que el producto de los pasos del certificado se reduce libremente al objetivo.

    Parámetros:
    -----------
    presentacion : Presentacion
        Presentación cuyos relatores se usan.
    objetivo : PalabraLibre
        Palabra cuya trivialidad se certifica.
    certificado : Certificado
        Pasos (relator, signo, conjugador).

    Retorna:
    --------
    ResultadoComprobacion
        Válido, o inválido con el primer paso incoherente (índice de relator fuera de rango o signo
        distinto de ±1), o con índice igual al número de pasos si el producto no coincide con el objetivo.
    """
    producto = presentacion.grupo.identity
    for i, paso in enumerate(certificado.pasos):
        try:
            producto = producto * factor_conjugado(presentacion, paso.relator, paso.signo, paso.conjugador)
        except (IndexError, ValueError) as error:
            return ResultadoComprobacion.incorrecto(i, str(error))
    if producto != objetivo:
        return ResultadoComprobacion.incorrecto(len(certificado.pasos),
                                                f'El producto es {texto(producto)} y el objetivo {texto(objetivo)}')
    return ResultadoComprobacion.correcto()
