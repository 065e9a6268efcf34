"""
Módulo para la generación de documentos PDF con los resultados de la verificación.

Funciones:
    - generar_verificacion(filas, ruta) -> str: Genera la tabla de la verificación completa en formato PDF.
    - generar_ficha_tuberia(informe, ruta) -> str: Genera la ficha de la tubería abeliana de un par (m, n).
"""

import json
import os
from datetime import datetime
from typing import Optional, Sequence

from reportlab.lib.pagesizes import A4, landscape
from reportlab.lib.units import cm
from reportlab.pdfgen.canvas import Canvas
from reportlab.platypus import SimpleDocTemplate, Table

from config import PATH_INFORMES
from deteccion.verificacion import FilaVerificacion
from grupos_libres.abeliano import InformeTuberia


def _recortar(valor, longitud: int = 40) -> str:
    texto = valor if isinstance(valor, str) else json.dumps(valor)
    return texto if len(texto) < longitud else texto[:longitud] + '...'


def generar_verificacion(filas: Sequence[FilaVerificacion], ruta: Optional[str] = None) -> str:
    """
    Genera la tabla de la verificación completa en formato PDF.

    Parámetros:
    -----------
    filas : Sequence[FilaVerificacion]
        Filas de la verificación, en el orden en que se listan.
    ruta : Optional[str]
        Ruta del fichero; si no se indica se usa un nombre con fecha en PATH_INFORMES.

    Retorna:
    --------
    str
        Ruta del archivo PDF generado.
    """
    filename = ruta or os.path.join(PATH_INFORMES, f'verificacion_{datetime.now().strftime("%y%m%d_%H%M%S")}.pdf')
    doc = SimpleDocTemplate(filename, pagesize=landscape(A4))

    data = [('Comprobación', 'Estado', 'Esperado', 'Obtenido', 'ms')]
    for f in filas:
        data.append((f.nombre, f.estado, _recortar(f.esperado), _recortar(f.obtenido), f'{f.milisegundos:.0f}'))
    table = Table(data, colWidths=[150, 50, 250, 250, 50], rowHeights=20)
    doc.build([table])
    return filename


def generar_ficha_tuberia(informe: InformeTuberia, ruta: Optional[str] = None) -> str:
    """
    Genera la ficha de la tubería abeliana de un par (m, n) en formato PDF.

    Parámetros:
    -----------
    informe : InformeTuberia
        Informe con las tres etapas.
    ruta : Optional[str]
        Ruta del fichero; por defecto tuberia_M_N.pdf en PATH_INFORMES.

    Retorna:
    --------
    str
        Ruta del archivo PDF generado.
    """
    filename = ruta or os.path.join(PATH_INFORMES, f'tuberia_{informe.m}_{informe.n}.pdf')
    canvas = Canvas(filename, pagesize=(15 * cm, 10 * cm))
    canvas.setFont('Helvetica-Bold', 12)
    canvas.drawCentredString(7.5 * cm, 9 * cm, f'Tubería abeliana para (m, n) = ({informe.m}, {informe.n})')
    y = 7.5
    for etapa in informe.etapas:
        canvas.setFont('Helvetica-Bold', 10)
        canvas.drawString(1 * cm, y * cm, f'{etapa.nombre}: ')
        canvas.setFont('Helvetica', 10)
        canvas.drawString(5 * cm, y * cm, 'superada' if etapa.superada else 'fallida')
        canvas.setFont('Helvetica', 8)
        canvas.drawString(1.5 * cm, (y - 0.6) * cm, _recortar(etapa.detalle, 80))
        y -= 1.8
    canvas.setFont('Helvetica-Bold', 10)
    canvas.drawString(1 * cm, 1.5 * cm, 'Resultado: ')
    canvas.setFont('Helvetica', 10)
    canvas.drawString(5 * cm, 1.5 * cm, 'presenta Z × Z' if informe.superada else 'sin demostrar')
    canvas.save()
    return filename
