from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    extensions = []
else:
    extensions = cythonize(
        [Extension("quasibgg._kernels._ckernels", ["src/quasibgg/_kernels/_ckernels.pyx"])],
        compiler_directives={"language_level": "3", "embedsignature": True},
    )

setup(ext_modules=extensions)
