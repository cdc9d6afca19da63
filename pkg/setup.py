"""Build script.

The package is pure Python except for one optional Cython extension,
``sectpade._kernel._speedups``, holding the hot truncated-series kernels.
If Cython or a C compiler is unavailable (or SECTPADE_PURE=1 is set) the
build proceeds without it and the package falls back to the pure-Python
kernels at import time.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.errors import CCompilerError, ExecError, PlatformError


class optional_build_ext(build_ext):
    """build_ext that degrades to a pure build instead of failing."""

    def run(self):
        try:
            build_ext.run(self)
        except (PlatformError, FileNotFoundError) as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except (CCompilerError, ExecError, PlatformError, ValueError) as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print("*" * 72)
        print("WARNING: compiled kernel build failed; using pure-Python kernels.")
        print(f"         ({exc})")
        print("*" * 72)


ext_modules = []
cmdclass = {}
if os.environ.get("SECTPADE_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("Cython not found; building without the compiled kernel.")
    else:
        ext_modules = cythonize(
            ["src/sectpade/_kernel/_speedups.pyx"], language_level="3"
        )
        cmdclass["build_ext"] = optional_build_ext

setup(ext_modules=ext_modules, cmdclass=cmdclass)
