"""Build the optional compiled kernels; the package works without them."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("ASMKIT_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("asmkit._core", ["src/asmkit/_core.pyx"], extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:  # no Cython: pure-Python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
