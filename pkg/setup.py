import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TATEDUAL_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("tatedual._kernels", ["src/tatedual/_kernels.pyx"])],
            language_level=3,
        )

setup(ext_modules=ext_modules)
