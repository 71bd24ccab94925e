"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension (a pure-numpy
fallback is selected at import time), so a missing compiler or Cython
only costs speed, not correctness.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hybridintel._kernels._core",
                ["src/hybridintel/_kernels/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                # no -ffast-math, no FP contraction: the compiled kernels
                # must match the pure-python backend bit for bit
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
