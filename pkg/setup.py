import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LRCDEC_PURE"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "lrcdec.kernels._speedups",
                    ["src/lrcdec/kernels/_speedups.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "language_level": 3,
            },
        )
    except ImportError:
        # No Cython toolchain: install pure-Python only, the numpy
        # fallback backend is picked up at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
