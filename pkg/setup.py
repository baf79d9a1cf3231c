"""Build script for the optional compiled sweep kernel.

The package is fully functional without it: ``lambdakit`` falls back to
the pure-Python kernel whenever the extension is missing.  Set
``LAMBDAKIT_PURE=1`` to skip building the extension on purpose.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the speedup extension if possible, warn and continue if not."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, broken toolchain, ...
            _warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            _warn(exc)


def _warn(exc):
    print(
        f"WARNING: compiled kernel not built ({exc}); "
        "lambdakit will use the pure-Python kernel"
    )


def extensions():
    if os.environ.get("LAMBDAKIT_PURE") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        _warn("Cython not available")
        return []
    return cythonize(
        [Extension("lambdakit._speedups", ["src/lambdakit/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
