from setuptools import Extension, setup
from Cython.Build import cythonize

# -ffp-contract=off keeps the compiled kernels bit-identical to the pure
# Python fallback: no fused multiply-adds, plain IEEE double arithmetic in
# source order. Do not add -ffast-math.
extensions = [
    Extension(
        "spikegrid._kernels",
        ["src/spikegrid/_kernels.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
