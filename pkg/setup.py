from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython at build time: the package still works, row reduction falls
    # back to the pure-Python kernel selected at import.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("postlie._rowreduce", ["src/postlie/_rowreduce.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
