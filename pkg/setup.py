"""Build script.

The package is pure Python by default.  If Cython and a C compiler are
available, a compiled twin of the polynomial term-arithmetic hot loops
(``orbita.poly_kernel._terms``) is built; at import time the package picks
the compiled module when present and silently falls back to the pure-Python
twin otherwise.  A failed extension build must never fail the install.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ORBITA_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/orbita/poly_kernel/_terms.pyx"],
            language_level=3,
        )
    except Exception:
        ext_modules = []


class _OptionalBuildExt:
    """Marker so a compiler failure degrades to a pure-Python install."""


try:
    from setuptools.command.build_ext import build_ext as _build_ext

    class build_ext(_build_ext):  # noqa: N801 - setuptools naming convention
        def run(self):
            try:
                super().run()
            except Exception:
                pass

        def build_extension(self, ext):
            try:
                super().build_extension(ext)
            except Exception:
                pass

    cmdclass = {"build_ext": build_ext}
except Exception:
    cmdclass = {}

setup(ext_modules=ext_modules, cmdclass=cmdclass)
