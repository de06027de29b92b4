import os

from setuptools import Extension, setup

try:
    import numpy  # noqa: F401
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    openmp = [] if os.environ.get("CUTKIT_NO_OPENMP") else ["-fopenmp"]
    ext_modules = cythonize(
        [
            Extension(
                "cutkit._kernels",
                ["src/cutkit/_kernels.pyx"],
                extra_compile_args=["-O3"] + openmp,
                extra_link_args=openmp,
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
