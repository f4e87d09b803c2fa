# Copyright (c) 2026 the pdct authors
# SPDX-License-Identifier: Apache-2.0
"""Pruned multiplierless approximate DCT toolkit."""

from pdct._core import (  # noqa: F401
    complexity_csv,
    compress_image,
    energy_compaction,
    forward_1d,
    forward_2d,
    inverse_2d,
    load_pgm,
    measure,
    psnr,
    save_pgm,
    savings_csv,
    scaling,
    synth_image,
    transform_matrix,
    transform_names,
)

__version__ = "0.1.0"
