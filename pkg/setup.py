"""Builds the optional compiled gesture kernels.

The package works without the extension: gav.gesture falls back to the
pure-Python kernels at import time if gav.gesture._kernels is missing.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gav/gesture/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
