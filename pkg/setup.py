"""Build script: compiles the optional census kernel when a toolchain exists."""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, fall back to pure Python otherwise."""

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
        print(
            "warning: census kernel extension not built (%s); "
            "the pure Python fallback will be used" % exc,
            file=sys.stderr,
        )


ext_modules = []
if not os.environ.get("SUBCOUNT_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("subcount._censuskernel", ["src/subcount/_censuskernel.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; skipping census kernel", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
