"""Build script: compiles the optional Cython stepping kernels.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time), so a missing compiler or Cython
only costs speed, never correctness.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Swallow compiler failures; the pure-Python kernels take over."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: extension build skipped ({exc}); "
                  "using pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: building {ext.name} failed ({exc}); "
                  "using pure-Python kernels")


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "qwsearch._kernels",
                ["src/qwsearch/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
