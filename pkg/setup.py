import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# DRONETCO_NO_EXTENSION=1 skips the compiled kernels; the package then runs
# on the pure-Python fallback selected at import time.
if cythonize is None or os.environ.get("DRONETCO_NO_EXTENSION"):
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "dronetco._kernels",
                ["src/dronetco/_kernels.pyx"],
                # no -ffast-math, no FP contraction: the compiled kernels
                # must stay bit-identical to the pure-Python fallback
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
