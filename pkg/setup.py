"""Build hook for the optional compiled kernel.

The package is pure Python; if Cython (or a C compiler) is missing the
extension is skipped and the interpreter fallback in
``mindec._kernel._pykernel`` is used instead.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("mindec._kernel._ckernel", ["src/mindec/_kernel/_ckernel.pyx"])],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
