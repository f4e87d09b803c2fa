# Copyright (c) 2026 the pdct authors
# SPDX-License-Identifier: Apache-2.0
from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "pdct._core",
    sorted(
        [
            "bindings/module.cpp",
            "src/codec.cpp",
            "src/imageio.cpp",
            "src/kernels.cpp",
            "src/opbench.cpp",
            "src/zonal.cpp",
        ]
    ),
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
