"""Camera- and expression-controlled portrait animation at toy scale."""

from ._core import (
    PortraitError,
    animate,
    decode,
    encode,
    generate_sequence,
    identity_hist_dist,
    load_config,
    plucker_ray_map,
    psnr,
    read_sequence,
    relative_pose,
    spearman,
    ssim,
    trajectory,
)

__all__ = [
    "PortraitError",
    "animate",
    "decode",
    "encode",
    "generate_sequence",
    "identity_hist_dist",
    "load_config",
    "plucker_ray_map",
    "psnr",
    "read_sequence",
    "relative_pose",
    "spearman",
    "ssim",
    "trajectory",
]
