"""Build script: compiles the optional Cython kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the compiled kernels only make the
hot integer loops fast.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("numsgps.kernels._fast", ["src/numsgps/kernels/_fast.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - depends on build environment
    print(f"numsgps: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
