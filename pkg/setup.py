"""Build script: compiles the optional C++ automaton kernel when Cython is available.

Set SEQCOVER_NO_EXT=1 to skip the extension and install the pure-Python
package only (the library selects the fallback kernel at import time).
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SEQCOVER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "seqcover._automaton_c",
                    ["src/seqcover/_automaton_c.pyx"],
                    language="c++",
                    extra_compile_args=["-O3", "-std=c++17"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
