from setuptools import setup, Extension
from Cython.Build import cythonize
import numpy as np

extensions = [
    Extension(
        "rotabaxter._ckernels",
        ["src/rotabaxter/_ckernels.pyx"],
        include_dirs=[np.get_include()],
        optional=True,
    )
]

setup(ext_modules=cythonize(extensions, language_level=3))
