"""
GF(2) linear algebra on bit-packed numpy rows.
"""

import numpy as np


def pack_rows(matrix: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix row-wise, 8 columns per byte, most significant bit first."""
    return np.packbits(np.asarray(matrix, dtype=bool), axis=1)


def gf2_rank(matrix: np.ndarray) -> int:
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    n_rows, n_cols = matrix.shape
    rows = pack_rows(matrix)
    rank = 0
    for col in range(n_cols):
        byte, mask = col >> 3, np.uint8(0x80 >> (col & 7))
        below = np.nonzero(rows[rank:, byte] & mask)[0]
        if below.size == 0:
            continue
        pivot = rank + below[0]
        if pivot != rank:
            rows[[rank, pivot]] = rows[[pivot, rank]]
        hits = rank + 1 + np.nonzero(rows[rank + 1:, byte] & mask)[0]
        if hits.size:
            rows[hits] ^= rows[rank]
        rank += 1
        if rank == n_rows:
            break
    return rank


def gf2_product_is_zero(left: np.ndarray, right: np.ndarray) -> bool:
    """True when left @ right vanishes mod 2."""
    if left.size == 0 or right.size == 0:
        return True
    product = np.asarray(left, dtype=np.int64) @ np.asarray(right, dtype=np.int64)
    return not np.any(product & 1)
