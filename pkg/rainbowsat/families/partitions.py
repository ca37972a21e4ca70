"""Four-block partitions used by the Omega and Xi constructions.

A block of size ``k`` is the graph W_k, which only works for k = 3 or k >= 6.
"""

from collections.abc import Iterator, Sequence

from ..exceptions import ParameterError

BLOCKS = 4
MIN_TOTAL = 15


def is_valid_part(size: int) -> bool:
    return size == 3 or size >= 6


def check_partition(parts: Sequence[int], total: int) -> None:
    """Raise ParameterError unless ``parts`` is four valid block sizes summing to ``total``."""
    if len(parts) != BLOCKS:
        raise ParameterError(f"partition needs {BLOCKS} parts, got {len(parts)}", "partition has 4 parts")
    for size in parts:
        if not is_valid_part(size):
            raise ParameterError(f"part {size} is not allowed", "each part n_i is 3 or at least 6")
    if sum(parts) != total:
        raise ParameterError(f"parts {tuple(parts)} sum to {sum(parts)}, not {total}", f"parts sum to {total}")


def iter_partitions(total: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield the valid non-increasing 4-partitions of ``total``, lexicographically largest first."""

    def extend(prefix: tuple[int, ...], remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        slots = BLOCKS - len(prefix)
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        for size in range(min(cap, remaining - 3 * (slots - 1)), 2, -1):
            if is_valid_part(size):
                yield from extend(prefix + (size,), remaining - size, size)

    for parts in extend((), total, total):
        yield parts  # type: ignore[misc]


def default_partition(total: int) -> tuple[int, int, int, int]:
    """Return the lexicographically largest valid non-increasing 4-partition of ``total``.

    Raises:
        ParameterError: If ``total`` is below 15 or has no valid partition.

    Example:
        >>> default_partition(24)
        (15, 3, 3, 3)
    """
    if total < MIN_TOTAL:
        raise ParameterError(f"no default partition for {total}", f"n >= {MIN_TOTAL}")
    for parts in iter_partitions(total):
        return parts
    raise ParameterError(f"{total} has no valid 4-partition", "parts are 3 or at least 6")
