import os
import sys

# Los paquetes se importan desde la raíz del proyecto, como en main.py
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
