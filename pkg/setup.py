"""Build script for the optional compiled simplex kernel.

The package is fully functional without the extension: the pure-Python
kernel is selected automatically when the compiled module (or gmpy2) is
unavailable at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/facekit/ratcore/_kernel/_simplex_cy.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
