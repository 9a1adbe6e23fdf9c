"""Build script: compiles the optional matcher kernels.

The compiled extension is a pure speed-up; if Cython or a C compiler is
missing the install falls back to the Python kernels transparently.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "piextract._kernels._native",
                ["src/piextract/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
