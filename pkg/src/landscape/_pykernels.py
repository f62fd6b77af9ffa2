"""numpy implementations of the inner loops, used when the extension is absent."""

import numpy as np


def fwht_rows(a: np.ndarray) -> np.ndarray:
    """In-place unnormalized Walsh-Hadamard butterfly on every row."""
    rows, size = a.shape
    h = 1
    while h < size:
        v = a.reshape(rows, size // (2 * h), 2, h)
        lo = v[:, :, 0, :].copy()
        hi = v[:, :, 1, :]
        v[:, :, 0, :] += hi
        v[:, :, 1, :] = lo - hi
        h *= 2
    return a


def gwht_batch(values: np.ndarray, k: int) -> np.ndarray:
    batch, size = values.shape
    h = 1 << (k - 1)
    e = values & ((1 << k) - 1)
    out = np.zeros((batch, h, size), dtype=np.int64)
    b_idx, x_idx = np.indices((batch, size))
    out[b_idx, e % h, x_idx] = np.where(e < h, 1, -1)
    fwht_rows(out.reshape(batch * h, size))
    return out


def second_derivative_counts(values: np.ndarray, k: int, x: int) -> np.ndarray:
    size = values.shape[0]
    idx = np.arange(size)
    xa = (x ^ idx)[:, None]
    xb = (x ^ idx)[None, :]
    e = values[xa ^ idx[None, :]] - values[xb] - values[xa] + values[x]
    return np.bincount((e & ((1 << k) - 1)).ravel(), minlength=1 << k)


def all_second_derivative_counts(values: np.ndarray, k: int) -> np.ndarray:
    return np.stack([second_derivative_counts(values, k, x) for x in range(values.shape[0])])


def crosscorrelation_counts(f: np.ndarray, g: np.ndarray, k: int) -> np.ndarray:
    size = f.shape[0]
    q = 1 << k
    idx = np.arange(size)
    e = (f[idx[:, None] ^ idx[None, :]] - g[None, :]) & (q - 1)
    flat = (idx[:, None] * q + e).ravel()
    return np.bincount(flat, minlength=size * q).reshape(size, q)
