import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is optional: without Cython (or with GAPWORDS_NO_EXT
# set) the package installs pure-Python and selects the fallback at import.
if cythonize is None or os.environ.get("GAPWORDS_NO_EXT"):
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("gapwords._kernel", ["src/gapwords/_kernel.pyx"])],
    )

setup(ext_modules=ext_modules)
