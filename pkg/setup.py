"""Build script: compiles the optional extension module with the hot kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing compiler or missing
Cython only costs speed, never a failed install.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [Extension("affweights._core", ["src/affweights/_core.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
