"""Vectorized whole-space tables used by code analytics and verification.

All tables index vectors by their lexicographic rank: coordinate tuples
are read as base-m digits, most significant first, matching the order of
`SpaceContext.vectors`.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BudgetError
from .space import DEFAULT_VECTOR_BUDGET, SpaceContext


def check_vector_budget(ctx: SpaceContext, budget: int = DEFAULT_VECTOR_BUDGET) -> None:
    if ctx.size > budget:
        raise BudgetError(f"space has {ctx.size} vectors, budget {budget}")


def digit_table(ctx: SpaceContext, budget: int = DEFAULT_VECTOR_BUDGET) -> np.ndarray:
    """(size, n) array: row v holds the coordinates of the vector with rank v.

    Cached per context and returned read-only.
    """
    check_vector_budget(ctx, budget)
    return _digit_table(ctx)


@lru_cache(maxsize=32)
def _digit_table(ctx: SpaceContext) -> np.ndarray:
    ranks = np.arange(ctx.size, dtype=np.int64)
    cols = []
    for pos in range(ctx.n):
        shift = ctx.m ** (ctx.n - 1 - pos)
        cols.append(ranks // shift % ctx.m)
    table = np.stack(cols, axis=1).astype(np.int32)
    table.flags.writeable = False
    return table


@lru_cache(maxsize=128)
def rank_powers(ctx: SpaceContext) -> np.ndarray:
    powers = np.array([ctx.m ** (ctx.n - 1 - pos) for pos in range(ctx.n)], dtype=np.int64)
    powers.flags.writeable = False
    return powers


def support_mask_table(ctx: SpaceContext, digits: np.ndarray) -> np.ndarray:
    """(size,) array of 0-based block-support bitmasks."""
    masks = np.zeros(len(digits), dtype=np.int64)
    for i in range(1, ctx.s + 1):
        nonzero = digits[:, ctx.block_slice(i)].any(axis=1)
        masks |= nonzero.astype(np.int64) << (i - 1)
    return masks


def block_max_table(ctx: SpaceContext, digits: np.ndarray) -> np.ndarray:
    """(size, s) array of block-max scalar weights."""
    scalar = np.asarray(ctx.weight_fn.table, dtype=np.int64)[digits]
    out = np.empty((len(digits), ctx.s), dtype=np.int64)
    for i in range(1, ctx.s + 1):
        out[:, i - 1] = scalar[:, ctx.block_slice(i)].max(axis=1)
    return out


def weight_table(ctx: SpaceContext, budget: int = DEFAULT_VECTOR_BUDGET) -> np.ndarray:
    """(size,) array: entry v is the weight of the vector with rank v.

    Cached per context and returned read-only.
    """
    check_vector_budget(ctx, budget)
    return _weight_table(ctx)


@lru_cache(maxsize=32)
def _weight_table(ctx: SpaceContext) -> np.ndarray:
    digits = _digit_table(ctx)
    supports = support_mask_table(ctx, digits)
    block_max = block_max_table(ctx, digits)

    nmasks = 1 << ctx.s
    maximal = np.zeros(nmasks, dtype=np.int64)
    below_count = np.zeros(nmasks, dtype=np.int64)
    for mask in range(nmasks):
        ideal = ctx.poset.ideal_mask(mask)
        mx = ctx.poset.maximal_mask(ideal)
        maximal[mask] = mx
        below_count[mask] = ideal.bit_count() - mx.bit_count()

    mx_of = maximal[supports]
    weights = ctx.max_weight * below_count[supports]
    for i in range(ctx.s):
        weights += block_max[:, i] * (mx_of >> i & 1)
    weights.flags.writeable = False
    return weights


def difference_rank_table(
    ctx: SpaceContext, center_coords: tuple[int, ...], digits: np.ndarray
) -> np.ndarray:
    """(size,) array: rank of (v - center) for every vector rank v."""
    c = np.asarray(center_coords, dtype=np.int32)
    diff = (digits - c) % ctx.m
    return diff.astype(np.int64) @ rank_powers(ctx)


def distance_table(
    ctx: SpaceContext,
    center_coords: tuple[int, ...],
    weights: np.ndarray,
    digits: np.ndarray,
) -> np.ndarray:
    """(size,) array of distances from `center_coords` to every vector."""
    return weights[difference_rank_table(ctx, center_coords, digits)]


def two_smallest_code_distances(
    ctx: SpaceContext,
    codeword_coords: list[tuple[int, ...]],
    weights: np.ndarray,
    digits: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Per-vector smallest and second-smallest distance to the codewords."""
    size = len(weights)
    limit = np.iinfo(np.int64).max
    d1 = np.full(size, limit, dtype=np.int64)
    d2 = np.full(size, limit, dtype=np.int64)
    for coords in codeword_coords:
        d = distance_table(ctx, coords, weights, digits)
        closer = d < d1
        d2 = np.where(closer, d1, np.minimum(d2, d))
        d1 = np.where(closer, d, d1)
    return d1, d2
