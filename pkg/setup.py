"""Build script: compiles the optional fast-series extension.

If Cython (or a C compiler) is unavailable the package still works through
the pure-Python backend selected at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "polyberg._series_cy",
                ["src/polyberg/_series_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
