import os

from setuptools import setup

# The compiled census kernel is optional: the package falls back to the
# pure-Python kernel (mapquot._census_py) when the extension is missing.
ext_modules = []
if os.path.exists("src/mapquot/_census_c.pyx"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("mapquot._census_c", ["src/mapquot/_census_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
