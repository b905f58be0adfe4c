"""Build the optional Cython kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/hierzagreb/_ckernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # Cython missing or the .pyx failed to translate
    print(f"hierzagreb: skipping compiled kernels ({exc})")

# a failed C compile falls back to the pure-Python kernels
for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
