"""Truth-table representations of Boolean and generalized Boolean functions.

Point x in F_2^n is the integer sum x_i 2^(i-1), x_1 being the least
significant bit. A generalized Boolean function on n variables with level
exponent k maps each point to a residue in Z_{2^k}.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np


class DimensionError(ValueError):
    pass


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.ascontiguousarray(arr, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def _log2_exact(size: int) -> int:
    if size < 2 or size & (size - 1):
        raise DimensionError(f"truth-table length {size} is not 2^n with n >= 1")
    return size.bit_length() - 1


class GenBoolFn:
    """f: F_2^n -> Z_{2^k} as a dense truth table."""

    __slots__ = ("n", "k", "values")

    def __init__(self, n: int, k: int, values):
        if k < 1:
            raise ValueError("k must be >= 1")
        if n < 1:
            raise DimensionError("n must be >= 1")
        arr = np.asarray(values, dtype=np.int64).reshape(-1)
        if arr.size != 1 << n:
            raise DimensionError(f"expected {1 << n} values for n={n}, got {arr.size}")
        if arr.size and (arr.min() < 0 or arr.max() >= 1 << k):
            raise ValueError(f"values must lie in [0, {1 << k})")
        self.n = n
        self.k = k
        self.values = _frozen(arr)

    @classmethod
    def from_values(cls, values: Sequence[int], k: int) -> "GenBoolFn":
        return cls(_log2_exact(len(values)), k, values)

    @property
    def q(self) -> int:
        return 1 << self.k

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, x: int) -> int:
        return int(self.values[x])

    def __eq__(self, other):
        if not isinstance(other, GenBoolFn):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.n, self.k, self.values.tobytes()))

    def __repr__(self):
        return f"GenBoolFn(n={self.n}, k={self.k}, values={self.values.tolist()})"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "k": self.k, "values": self.values.tolist()}

    def to_boolfn(self) -> "BoolFn":
        if self.k != 1:
            raise ValueError("only k=1 functions are Boolean")
        return BoolFn(self.n, self.values)


class BoolFn:
    """f: F_2^n -> F_2."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table):
        if n < 1:
            raise DimensionError("n must be >= 1")
        arr = np.asarray(table, dtype=np.int64).reshape(-1)
        if arr.size != 1 << n:
            raise DimensionError(f"expected {1 << n} bits for n={n}, got {arr.size}")
        if arr.size and (arr.min() < 0 or arr.max() > 1):
            raise ValueError("Boolean table entries must be 0 or 1")
        self.n = n
        self.table = _frozen(arr)

    @classmethod
    def from_table(cls, table: Sequence[int]) -> "BoolFn":
        return cls(_log2_exact(len(table)), table)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        if not isinstance(other, BoolFn):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def __repr__(self):
        return f"BoolFn(n={self.n}, table={self.table.tolist()})"

    def __xor__(self, other: "BoolFn") -> "BoolFn":
        if self.n != other.n:
            raise DimensionError("XOR of functions on different n")
        return BoolFn(self.n, self.table ^ other.table)

    def complement(self) -> "BoolFn":
        return BoolFn(self.n, 1 - self.table)

    def to_gen(self) -> GenBoolFn:
        return GenBoolFn(self.n, 1, self.table)


def as_gen(f) -> GenBoolFn:
    return f.to_gen() if isinstance(f, BoolFn) else f


# -- points ---------------------------------------------------------------

def dot(u: int, x: int) -> int:
    return (u & x).bit_count() & 1


def parity(arr) -> np.ndarray:
    return (np.bitwise_count(np.asarray(arr, dtype=np.int64)) & 1).astype(np.int64)


def parity_matrix(n: int) -> np.ndarray:
    """(u.x mod 2) for all u, x, shape (2^n, 2^n)."""
    idx = np.arange(1 << n, dtype=np.int64)
    return parity(idx[:, None] & idx[None, :])


def coordinate(n: int, i: int) -> BoolFn:
    """The coordinate function x_i, 1-based."""
    idx = np.arange(1 << n)
    return BoolFn(n, (idx >> (i - 1)) & 1)


def linear(n: int, u: int) -> BoolFn:
    return BoolFn(n, parity(np.arange(1 << n) & u))


# -- bit planes -----------------------------------------------------------

def to_bitplanes(f: GenBoolFn) -> list[BoolFn]:
    return [BoolFn(f.n, (f.values >> i) & 1) for i in range(f.k)]


def from_bitplanes(planes: Sequence[BoolFn]) -> GenBoolFn:
    if not planes:
        raise DimensionError("need at least one plane")
    n = planes[0].n
    if any(p.n != n for p in planes):
        raise DimensionError("bit planes have inconsistent dimensions")
    acc = np.zeros(1 << n, dtype=np.int64)
    for i, p in enumerate(planes):
        acc += p.table << i
    return GenBoolFn(n, len(planes), acc)


# -- derivatives ----------------------------------------------------------

def derivative(f: GenBoolFn, a: int) -> GenBoolFn:
    idx = np.arange(f.size)
    return GenBoolFn(f.n, f.k, (f.values - f.values[idx ^ a]) % f.q)


def second_derivative(f: GenBoolFn, a: int, b: int) -> GenBoolFn:
    """D_b D_a f."""
    idx = np.arange(f.size)
    v = f.values
    return GenBoolFn(f.n, f.k, (v[idx ^ a ^ b] - v[idx ^ b] - v[idx ^ a] + v) % f.q)


# -- components -----------------------------------------------------------

def iota(c: Sequence[int]) -> int:
    return sum((bit & 1) << j for j, bit in enumerate(c))


def iota_inv(j: int, k: int) -> tuple[int, ...]:
    width = k - 1
    if not 0 <= j < 1 << width:
        raise ValueError(f"{j} outside Z_{1 << width}")
    return tuple((j >> i) & 1 for i in range(width))


def component(f: GenBoolFn, c) -> BoolFn:
    """f_c = (XOR_{i<k-1} c_i a_i) XOR a_{k-1}; c is a bit tuple or its iota image."""
    if f.k < 2:
        raise ValueError("component functions need k >= 2")
    cbits = iota_inv(c, f.k) if isinstance(c, (int, np.integer)) else tuple(c)
    if len(cbits) != f.k - 1:
        raise ValueError(f"component index needs {f.k - 1} bits")
    acc = (f.values >> (f.k - 1)) & 1
    for i, bit in enumerate(cbits):
        if bit:
            acc = acc ^ ((f.values >> i) & 1)
    return BoolFn(f.n, acc)


def components(f: GenBoolFn) -> list[BoolFn]:
    """All 2^(k-1) components, indexed by iota(c)."""
    return [component(f, j) for j in range(1 << (f.k - 1))]


# -- serialization --------------------------------------------------------

def to_hex(f) -> str:
    f = as_gen(f)
    if f.k != 1:
        raise ValueError("hex encoding is only defined for k=1")
    if f.n < 2:
        raise ValueError("hex encoding needs n >= 2")
    word = 0
    for x, bit in enumerate(f.values.tolist()):
        word |= bit << x
    return format(word, f"0{f.size // 4}x")


def from_hex(text: str) -> GenBoolFn:
    text = text.strip().lower()
    if text.startswith("0x"):
        text = text[2:]
    if not text or any(ch not in "0123456789abcdef" for ch in text):
        raise ValueError(f"not a hex truth table: {text!r}")
    n = _log2_exact(4 * len(text))
    word = int(text, 16)
    return GenBoolFn(n, 1, [(word >> x) & 1 for x in range(1 << n)])


def to_json(f) -> str:
    return json.dumps(as_gen(f).to_json_obj())


def from_json_obj(obj) -> GenBoolFn:
    if isinstance(obj, str):
        return from_hex(obj)
    if not isinstance(obj, dict):
        raise ValueError("function object must be a JSON object or hex string")
    missing = {"n", "k", "values"} - obj.keys()
    if missing:
        raise ValueError(f"function object missing keys: {sorted(missing)}")
    n, k, values = obj["n"], obj["k"], obj["values"]
    if not (isinstance(n, int) and isinstance(k, int) and isinstance(values, list)):
        raise ValueError("n and k must be integers, values a list")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise ValueError("values must be integers")
    return GenBoolFn(n, k, values)


def from_json(text: str) -> GenBoolFn:
    return from_json_obj(json.loads(text))


def all_points(n: int) -> Iterable[int]:
    return range(1 << n)
