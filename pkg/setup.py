"""Build script for the optional compiled kernels.

The Cython extension is best-effort: if Cython or a C compiler is missing the
package installs without it and ``sincindef.kernels`` falls back to the numpy
implementation.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("SINCINDEF_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "sincindef._kernels",
                    ["src/sincindef/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
