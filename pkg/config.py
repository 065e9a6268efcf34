"""
Script de configuración de rutas, presupuestos y paralelismo

"""

import math
import os
import tempfile

# Rutas de ficheros de datos (usar preferentemente rutas absolutas)
PATH_TRAZAS = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'grupos_libres', 'trazas')
PATH_INFORMES = tempfile.gettempdir()

# Presupuestos y cotas de cálculo
PRESUPUESTO_EXHAUSTIVO = 10 ** 7
COTA_ASOCIATIVIDAD = 200

# Paralelismo
VARIABLE_PARALELISMO = 'GRUPOS_PARALELISMO'
PARALELISMO_POR_DEFECTO = 1

# Registro
NIVEL_LOG = 'WARNING'
FORMATO_LOG = '%(asctime)s %(levelname)s %(name)s: %(message)s'

# Pares (m, n) coprimos de la verificación completa
PARES_VERIFICACION = [(m, n) for n in range(3, 13) for m in range(2, n)
                      if math.gcd(m, n) == 1]
