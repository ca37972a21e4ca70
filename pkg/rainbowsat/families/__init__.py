from .builders import build, closed_form_edges, rainbow_color, s_block_sizes
from .partitions import default_partition, iter_partitions

__all__ = [
    "build",
    "closed_form_edges",
    "default_partition",
    "iter_partitions",
    "rainbow_color",
    "s_block_sizes",
]
