from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "posetramsey._kernel",
                ["src/posetramsey/_kernel.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: the package runs on the pure-Python kernel
    ext_modules = []

setup(ext_modules=ext_modules)
