"""Build script: compiles the optional _fastops extension when Cython and
a C compiler are available, and falls back to the pure-Python kernels
otherwise (tamesphere.ops selects the backend at import time)."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tamesphere/_fastops.pyx"],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
