from setuptools import Extension, setup
from Cython.Build import cythonize

ext_modules = [
    Extension("csfkit._speedups", ["src/csfkit/_speedups.pyx"]),
]

setup(ext_modules=cythonize(ext_modules, language_level="3"))
