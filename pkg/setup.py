"""Build script: compiles the optional integer-kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so the
extension is marked optional and a failed compile never aborts the install.
Set POLARLP_NO_EXTENSION=1 to skip building it entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("POLARLP_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "polarlp._kernels_c",
                    ["src/polarlp/_kernels_c.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
