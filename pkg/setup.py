"""Build script.

Compiles the optional kernel extension when Cython and a C toolchain are
available; otherwise the package installs with the pure-Python kernel
backend only.
"""
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Treat extension build failures as a downgrade, not an error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            warnings.warn(f"skipping compiled kernels ({exc}); "
                          "the pure-Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"failed to compile {ext.name} ({exc}); "
                          "the pure-Python backend will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        warnings.warn("Cython not available; installing with the "
                      "pure-Python kernel backend only")
        return []
    ext = Extension("chronobound._kernels_cy",
                    ["src/chronobound/_kernels_cy.pyx"])
    return cythonize(ext, language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
