"""Build script: compiles the GF(p)[i] elimination kernel when Cython
and a C compiler are available.  Without them the package still installs
and falls back to the pure-Python kernel at import time."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("multirank._modrank_c", ["src/multirank/_modrank_c.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
