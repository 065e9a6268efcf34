"""
Módulo con el cociente nilpotente de clase 2 del grupo libre de rango 2.

Los elementos se escriben en coordenadas de Mal'cev a^α b^β c^γ, con c = [a, b] central y la regla de
recolección ba = ab·c⁻¹. El producto es

    (α, β, γ)(α', β', γ') = (α + α', β + β', γ + γ' − βα')

y el inverso (α, β, γ)⁻¹ = (−α, −β, −γ − αβ).

Clases:
    - TripleMalcev

Funciones:
    - nq2_eval(w) -> TripleMalcev
    - nq2_orden_c(relatores) -> int

Excepciones:
    - AlfabetoNoSoportadoError: Error personalizado para palabras con letras fuera de {a, b}.
    - NoCentralError: Error personalizado para relatores de imagen no central.
"""

import math
from dataclasses import dataclass
from typing import Iterable

from grupos_libres.alfabeto_no_soportado_error import AlfabetoNoSoportadoError
from grupos_libres.no_central_error import NoCentralError
from grupos_libres.palabra_libre import PalabraLibre, texto


@dataclass(frozen=True)
class TripleMalcev:
    alfa: int = 0
    beta: int = 0
    gamma: int = 0

    def __mul__(self, otra: 'TripleMalcev') -> 'TripleMalcev':
        return TripleMalcev(self.alfa + otra.alfa, self.beta + otra.beta,
                            self.gamma + otra.gamma - self.beta * otra.alfa)

    def inverso(self) -> 'TripleMalcev':
        return TripleMalcev(-self.alfa, -self.beta, -self.gamma - self.alfa * self.beta)

    def es_central(self) -> bool:
        return self.alfa == 0 and self.beta == 0

    def como_tupla(self):
        return self.alfa, self.beta, self.gamma

    def __str__(self) -> str:
        return f'({self.alfa}, {self.beta}, {self.gamma})'


IDENTIDAD = TripleMalcev()


def nq2_eval(w: PalabraLibre) -> TripleMalcev:
    """
    Imagen homomorfa de una palabra sobre {a, b} en el grupo nilpotente libre de clase 2.

    Parámetros:
    -----------
    w : PalabraLibre
        Palabra cuyas letras están en {a, b}.

    Retorna:
    --------
    TripleMalcev
        Coordenadas (α, β, γ) de la imagen.

    Excepciones:
    ------------
    AlfabetoNoSoportadoError
        Si la palabra usa otras letras.
    """
    ajenas = {str(s) for s, _ in w.array_form} - {'a', 'b'}
    if ajenas:
        raise AlfabetoNoSoportadoError(ajenas)
    resultado = IDENTIDAD
    for simbolo, exponente in w.array_form:
        # a^e = (e, 0, 0) y b^e = (0, e, 0)
        potencia = TripleMalcev(exponente, 0, 0) if str(simbolo) == 'a' else TripleMalcev(0, exponente, 0)
        resultado = resultado * potencia
    return resultado


def nq2_orden_c(relatores: Iterable[PalabraLibre]) -> int:
    """
    Orden de c = [a, b] en el cociente de clase 2 del grupo presentado por los relatores.

    Cada relator debe tener suma de exponentes nula en a y en b, de modo que su imagen es c^γ; el orden de c
    es entonces el mcd de los |γ|.

    Parámetros:
    -----------
    relatores : Iterable[PalabraLibre]
        Relatores sobre {a, b}.

    Retorna:
    --------
    int
        El mcd g ≥ 0; g = 0 indica que c tiene orden infinito y g = 1 que el cociente de clase 2 es Z × Z.

    Excepciones:
    ------------
    NoCentralError
        Si algún relator tiene suma de exponentes no nula.
    AlfabetoNoSoportadoError
        Si algún relator usa otras letras.
    """
    g = 0
    for r in relatores:
        imagen = nq2_eval(r)
        if not imagen.es_central():
            raise NoCentralError(texto(r), imagen.alfa, imagen.beta)
        g = math.gcd(g, imagen.gamma)
    return g
