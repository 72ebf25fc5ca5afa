# Builds the optional C extension with the hot counting kernels.
# The package works without it (pure-Python kernels are selected at import),
# so any failure here downgrades to a warning instead of aborting the install.
#
# Build in place with:  python setup.py build_ext --inplace

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(f"WARNING: building the pathhom._fastcount extension failed ({exc}); "
              "falling back to the pure-Python kernels", file=sys.stderr)


ext_modules = []
cmdclass = {}
if os.environ.get("PATHHOM_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/pathhom/_fastcount.pyx"],
            language_level=3,
        )
        cmdclass = {"build_ext": optional_build_ext}
    except ImportError:
        print("WARNING: Cython not available; installing pathhom without the "
              "compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass=cmdclass)
