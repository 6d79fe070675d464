"""Build hook for the optional compiled arithmetic kernel.

Without Cython or a C compiler the package still installs; the pure-Python
kernel is then selected at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("conchoidal._kernel._ckernel", ["src/conchoidal/_kernel/_ckernel.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
        quiet=True,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
