"""Dominance-count solvers: a brute-force oracle and a bucketed bitset algorithm.

For matrices ``a`` (p x q) and ``b`` (q x t), the dominance count matrix is
``C[i, j] = |{k : a[i, k] <= b[k, j]}|``. The square case (p = q = t = r) is
wrapped in :class:`DominanceInstance`; a "dominating pair" is an entry of
value r, i.e. a row of ``a`` that is dominated entrywise by a column of
``b``.

Matrix text format: a header line ``mat <r>`` followed by r lines of r
integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class MatrixFormatError(ValueError):
    """Malformed matrix file."""


@dataclass(frozen=True, eq=False)
class DominanceInstance:
    """A pair of equal-dimension square integer matrices."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=np.int64)
        b = np.asarray(self.b, dtype=np.int64)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError("matrices must be square and non-empty")
        if a.shape != b.shape:
            raise ValueError("matrices must have equal dimensions")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        a.setflags(write=False)
        b.setflags(write=False)

    @property
    def r(self) -> int:
        return self.a.shape[0]


def dominance_product_bruteforce(inst: DominanceInstance) -> np.ndarray:
    """Definitional O(r^3) count of k with a[i, k] <= b[k, j]."""
    return (inst.a[:, :, None] <= inst.b[None, :, :]).sum(axis=1, dtype=np.int64)


def dominance_counts(a: np.ndarray, b: np.ndarray, bucket_size: int = 1) -> np.ndarray:
    """Bucketed dominance counts for rectangular a (p x q) and b (q x t).

    For every index k, the q-th "slice" {a[., k]} u {b[k, .]} is sorted with
    a-entries placed before b-entries on ties, so a[i, k] <= b[k, j] holds
    exactly when a's element precedes b's in the sorted order. The sorted
    slice is cut into buckets of ``bucket_size`` consecutive positions:

    * pairs falling in the same bucket are counted by direct position
      comparison (O((p + t) * bucket_size) work per slice, the brute term);
    * pairs in different buckets depend only on the bucket indices and are
      accumulated as a boolean matrix product over (slice, bucket) columns,
      realized with word-packed bitset rows and popcount (the multiply
      term).

    Growing ``bucket_size`` trades bitset width for brute-force work; a
    single bucket (bucket_size >= p + t) degenerates to plain brute force.
    """
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise ValueError("need a (p x q) and b (q x t)")
    s = int(bucket_size)
    if s < 1:
        raise ValueError("bucket_size must be >= 1")
    p, q = a.shape
    t = b.shape[1]
    n_slots = p + t
    n_buckets = -(-n_slots // s)
    counts = np.zeros((p, t), dtype=np.int64)
    a_rows = a.tolist()
    b_rows = b.tolist()
    row_bits = [0] * p  # bit (k, bkt) set iff a[i, k] lands in bucket bkt
    col_bits = [0] * t  # bits (k, 0..bkt-1) set iff b[k, j] lands in bucket bkt
    for k in range(q):
        entries = [(a_rows[i][k], 0, i) for i in range(p)]
        entries += [(b_rows[k][j], 1, j) for j in range(t)]
        entries.sort(key=lambda e: (e[0], e[1]))
        base = k * n_buckets
        for pos, (_, kind, idx) in enumerate(entries):
            bkt = pos // s
            if kind == 0:
                row_bits[idx] |= 1 << (base + bkt)
            elif bkt:
                col_bits[idx] |= ((1 << bkt) - 1) << base
        for start in range(0, n_slots, s):
            pending: list[int] = []
            for _, kind, idx in entries[start : start + s]:
                if kind == 0:
                    pending.append(idx)
                elif pending:
                    counts[pending, idx] += 1
    for i in range(p):
        bits = row_bits[i]
        if bits:
            counts[i] += [(bits & col_bits[j]).bit_count() for j in range(t)]
    return counts


def dominance_product_blocked(inst: DominanceInstance, bucket_size: int = 1) -> np.ndarray:
    """Bucketed dominance product; agrees entrywise with the brute force."""
    return dominance_counts(inst.a, inst.b, bucket_size)


def has_dominating_pair(inst: DominanceInstance) -> bool:
    """Whether some (i, j) satisfies a[i, k] <= b[k, j] for every k."""
    return bool(dominance_product_blocked(inst).max() == inst.r)


def make_entries_distinct(inst: DominanceInstance) -> DominanceInstance:
    """Replace all 2r^2 entries by their 1-based positions in a global sort.

    Ties are broken with a-entries before b-entries, which keeps every
    comparison a[i, k] <= b[k, j] (and hence the dominance product)
    unchanged while making all entries distinct.
    """
    r = inst.r
    entries: list[tuple[int, int, int, int]] = []
    for (i, j), val in np.ndenumerate(inst.a):
        entries.append((int(val), 0, i, j))
    for (i, j), val in np.ndenumerate(inst.b):
        entries.append((int(val), 1, i, j))
    entries.sort(key=lambda e: (e[0], e[1]))
    new_a = np.empty((r, r), dtype=np.int64)
    new_b = np.empty((r, r), dtype=np.int64)
    for pos, (_, kind, i, j) in enumerate(entries, start=1):
        if kind == 0:
            new_a[i, j] = pos
        else:
            new_b[i, j] = pos
    return DominanceInstance(new_a, new_b)


def parse_matrix(text: str) -> np.ndarray:
    """Read one matrix in the ``mat <r>`` text format."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "mat":
        raise MatrixFormatError("expected 'mat <r>' header")
    try:
        r = int(header[1])
    except ValueError:
        raise MatrixFormatError("expected 'mat <r>' header") from None
    if r < 1:
        raise MatrixFormatError("matrix dimension must be >= 1")
    if len(lines) != r + 1:
        raise MatrixFormatError(f"expected {r} rows, found {len(lines) - 1}")
    out = np.empty((r, r), dtype=np.int64)
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != r:
            raise MatrixFormatError(f"row {i} has {len(parts)} entries, expected {r}")
        try:
            out[i] = [int(x) for x in parts]
        except ValueError:
            raise MatrixFormatError(f"row {i} has a non-integer entry") from None
    return out


def format_matrix(mat: np.ndarray) -> str:
    mat = np.asarray(mat)
    r = mat.shape[0]
    lines = [f"mat {r}"]
    lines += [" ".join(str(int(x)) for x in row) for row in mat]
    return "\n".join(lines) + "\n"
