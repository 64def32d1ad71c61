import os

from setuptools import Extension, setup

# The compiled kernel is an optimization only; tracehom.intlinalg falls back
# to the pure-Python kernel when the extension is missing.  Set
# TRACEHOM_PURE_PYTHON=1 to skip building it.
ext_modules = []
if os.environ.get("TRACEHOM_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("tracehom._snf_core", ["src/tracehom/_snf_core.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
