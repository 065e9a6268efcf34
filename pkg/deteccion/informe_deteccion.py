"""
Módulo con los informes de detectabilidad de leyes en subgrupos potencia.

Una ley es detectable en subgrupos potencia si G la satisface cuando y sólo cuando la satisfacen G^{*m} y
G^{*n} para m y n coprimos. El informe reúne los tres veredictos y los órdenes de los subgrupos.

Clases:
    - InformeDeteccion

Funciones:
    - informe_deteccion(G, ley, m, n, estrategia) -> InformeDeteccion
"""

import logging
import math
from dataclasses import dataclass

from grupos_finitos.grupo import Grupo
from grupos_finitos.series import subgrupo_potencia
from leyes.evaluacion import Automatico, Estrategia, ResultadoSatisfaccion, satisface
from leyes.ley import Ley

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InformeDeteccion:
    """
    Clase que representa el informe de una ley en G y en sus subgrupos potencia.

    Atributos:
    ----------
    descriptor : str
        Descriptor del grupo G.
    ley : str
        Texto de la ley.
    m, n : int
        Exponentes de los subgrupos potencia.
    en_m, en_n, en_g : ResultadoSatisfaccion
        Veredictos en G^{*m}, G^{*n} y G.
    orden_g, orden_m, orden_n : int
        Órdenes de G, G^{*m} y G^{*n}.
    """
    descriptor: str
    ley: str
    m: int
    n: int
    en_m: ResultadoSatisfaccion
    en_n: ResultadoSatisfaccion
    en_g: ResultadoSatisfaccion
    orden_g: int
    orden_m: int
    orden_n: int

    @property
    def coherente(self) -> bool:
        # Los subgrupos heredan las leyes de G
        return not self.en_g.cumple or (self.en_m.cumple and self.en_n.cumple)

    @property
    def veredictos(self):
        return self.en_m.veredicto, self.en_n.veredicto, self.en_g.veredicto

    def to_dict(self) -> dict:
        return {
            'group': self.descriptor,
            'law': self.ley,
            'm': self.m,
            'n': self.n,
            'in_m': self.en_m.veredicto.value,
            'in_n': self.en_n.veredicto.value,
            'in_G': self.en_g.veredicto.value,
            'order_G': self.orden_g,
            'order_m': self.orden_m,
            'order_n': self.orden_n,
            'details': {'in_m': self.en_m.to_dict(), 'in_n': self.en_n.to_dict(), 'in_G': self.en_g.to_dict()},
        }


def informe_deteccion(G: Grupo, ley: Ley, m: int, n: int, estrategia: Estrategia = Automatico()) -> InformeDeteccion:
    """
    Calcula G^{*m}, G^{*n} y los veredictos de la ley en los tres grupos.

    Parámetros:
    -----------
    G : Grupo
        Grupo finito.
    ley : Ley
        Ley a comprobar.
    m, n : int
        Exponentes, en principio coprimos; si no lo son se avisa y se calcula igualmente.
    estrategia : Estrategia
        Estrategia de satisfacción (por defecto `Automatico`).

    Retorna:
    --------
    InformeDeteccion
        El informe con los tres veredictos.
    """
    if math.gcd(m, n) != 1:
        logger.warning('Los exponentes %d y %d no son coprimos; el informe no decide la detectabilidad', m, n)
    potencia_m = subgrupo_potencia(G, m)
    potencia_n = subgrupo_potencia(G, n)
    informe = InformeDeteccion(G.descriptor, ley.texto, m, n,
                               satisface(potencia_m, ley, estrategia),
                               satisface(potencia_n, ley, estrategia),
                               satisface(G, ley, estrategia),
                               G.orden, potencia_m.orden, potencia_n.orden)
    logger.info('Detección de %s en %s con (%d, %d): %s', ley.texto, G.descriptor, m, n,
                [v.value for v in informe.veredictos])
    return informe
