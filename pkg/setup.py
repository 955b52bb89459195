"""Build script: compiles the optional bracket-scan extension when Cython is present.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time).  Set LIEMETAB_NO_EXT=1
to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LIEMETAB_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("liemetab._scan_c", ["src/liemetab/_scan_c.pyx"])],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
