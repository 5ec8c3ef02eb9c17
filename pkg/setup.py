from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/latround/_kernel/_speedups.pyx"],
        language_level="3",
    )
except ImportError:
    # The package works without the compiled kernel; the pure Python
    # twin is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
