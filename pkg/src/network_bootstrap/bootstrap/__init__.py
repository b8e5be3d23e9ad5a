"""Block and dependent wild bootstrap schemes."""

from .block import BBReplicate, BlockSet, bb_center, bb_resample, bb_run, bb_variance, make_blocks
from .dwb import (
    DWBWeights,
    dwb_draw_weights,
    dwb_pseudo_sample,
    dwb_run,
    dwb_variance,
    gaussian_t1_sample,
)
from .streams import run_chunked, substream

__all__ = [
    "BlockSet",
    "BBReplicate",
    "make_blocks",
    "bb_resample",
    "bb_center",
    "bb_variance",
    "bb_run",
    "DWBWeights",
    "dwb_draw_weights",
    "dwb_pseudo_sample",
    "dwb_variance",
    "dwb_run",
    "gaussian_t1_sample",
    "substream",
    "run_chunked",
]
