"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so any build failure here degrades gracefully.
"""

from setuptools import setup

extensions = []
try:
    import numpy
    from Cython.Build import cythonize

    extensions = cythonize(
        ["src/tembed/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in extensions:
        ext.include_dirs.append(numpy.get_include())
except ImportError:
    pass

setup(ext_modules=extensions)
