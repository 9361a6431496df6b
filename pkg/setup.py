from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled kernel; magiclab.magic
    # falls back to the pure-Python search loop at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("magiclab._oracle", ["src/magiclab/_oracle.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
