"""Linear codes from generator matrices, with exhaustive enumeration.

A code is fixed by a full-row-rank generator matrix over GF(q).  Codewords
are enumerated in the canonical order of their coefficient vectors (read as
base-q integers, first coefficient most significant), so every stream,
distribution, and report derived from enumeration is deterministic.

Exhaustive operations refuse to run past a word budget (default 10**7
codewords) instead of silently taking forever.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import BudgetExceeded, RankDeficient, TrivialDual
from .field import GF, build_field
from .matrix import GFMatrix, nullspace, rref

DEFAULT_BUDGET = 10**7

_CHUNK = 1 << 14


@dataclass(frozen=True)
class Codeword:
    """One codeword: coefficient vector and value vector, as tuples."""

    coeffs: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(1 for v in self.values if v)

    @property
    def support(self) -> tuple[int, ...]:
        """0-based indices of the nonzero coordinates."""
        return tuple(i for i, v in enumerate(self.values) if v)

    def is_zero(self) -> bool:
        return not any(self.values)


class LinearCode:
    """An [n, k] linear code over GF(q), presented by a generator matrix."""

    def __init__(self, gen: GFMatrix):
        _, rk = rref(gen)
        if rk < gen.rows:
            raise RankDeficient(
                f"generator has rank {rk} < {gen.rows} rows"
            )
        self.gen = gen
        self.field: GF = gen.field
        self.n: int = gen.cols
        self.k: int = gen.rows
        zero_cols = np.nonzero(~gen.data.any(axis=0))[0]
        self.zero_columns: tuple[int, ...] = tuple(int(j) for j in zero_cols)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.q**self.k

    def words_exceed(self, budget: int) -> bool:
        return self.size > budget

    def codeword(self, coeffs) -> Codeword:
        u = np.asarray(coeffs, dtype=np.int64).reshape(1, self.k)
        v = self.field.matmul(u, self.gen.data)[0]
        return Codeword(tuple(int(c) for c in u[0]), tuple(int(x) for x in v))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.q})"


def from_generator(gen: GFMatrix) -> LinearCode:
    """Wrap a generator matrix; raises RankDeficient unless rows independent.

    Zero columns are legal (they are recorded in ``code.zero_columns`` so
    callers that cannot tolerate them, like secret sharing, can refuse).
    """
    return LinearCode(gen)


def _check_budget(code: LinearCode, budget: int) -> None:
    if code.size > budget:
        raise BudgetExceeded(code.size, budget)


def coeff_blocks(code: LinearCode, budget: int = DEFAULT_BUDGET,
                 chunk: int = _CHUNK) -> Iterator[np.ndarray]:
    """All q^k coefficient vectors in canonical order, in (chunk, k) blocks."""
    _check_budget(code, budget)
    q, k, total = code.q, code.k, code.size
    place = q ** np.arange(k - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // place[None, :]) % q


def enumerate_codewords(code: LinearCode,
                        budget: int = DEFAULT_BUDGET) -> Iterator[Codeword]:
    """Yield all q^k codewords in canonical coefficient order."""
    for block in coeff_blocks(code, budget):
        values = code.field.matmul(block, code.gen.data)
        for u, v in zip(block, values):
            yield Codeword(tuple(int(c) for c in u), tuple(int(x) for x in v))


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword count per Hamming weight (the zero word included at 0)."""

    q: int
    n: int
    k: int
    counts: dict[int, int]

    def min_nonzero(self) -> int:
        return min(w for w in self.counts if w > 0)

    def max_weight(self) -> int:
        return max(w for w in self.counts if w > 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def to_json(self) -> str:
        return json.dumps({
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "counts": {str(w): self.counts[w] for w in sorted(self.counts)},
        })

    def to_csv(self) -> str:
        lines = ["weight,count"]
        lines += [f"{w},{self.counts[w]}" for w in sorted(self.counts)]
        return "\n".join(lines) + "\n"


def weight_distribution(code: LinearCode,
                        budget: int = DEFAULT_BUDGET) -> WeightDistribution:
    """Exhaustive weight distribution of the code."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in coeff_blocks(code, budget):
        values = code.field.matmul(block, code.gen.data)
        weights = np.count_nonzero(values, axis=1)
        counts += np.bincount(weights, minlength=code.n + 1)
    return WeightDistribution(
        q=code.q, n=code.n, k=code.k,
        counts={int(w): int(c) for w, c in enumerate(counts) if c},
    )


def min_max_weight(code: LinearCode,
                   budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """(w_min, w_max) over nonzero codewords; w_min is the distance d."""
    dist = weight_distribution(code, budget)
    return dist.min_nonzero(), dist.max_weight()


def dual_code(code: LinearCode) -> LinearCode:
    """The [n, n-k] dual; raises TrivialDual when n == k."""
    if code.n == code.k:
        raise TrivialDual(f"[{code.n},{code.k}] code has zero-dimensional dual")
    return LinearCode(nullspace(code.gen))


def random_code(n: int, k: int, q: int, seed: int,
                max_tries: int = 1000) -> LinearCode:
    """A reproducible random [n, k]_q code with no zero columns.

    Entries are drawn from random.Random(seed); draws are repeated until
    the matrix has full row rank and every column is nonzero, so the same
    (n, k, q, seed) always yields the same code.
    """
    f = build_field(q)
    rng = random.Random(seed)
    for _ in range(max_tries):
        data = np.array([[rng.randrange(q) for _ in range(n)]
                         for _ in range(k)])
        if np.count_nonzero(data, axis=0).min() == 0:
            continue
        gen = GFMatrix(f, data)
        _, rank = rref(gen)
        if rank == k:
            return LinearCode(gen)
    raise RankDeficient(
        f"no full-rank zero-column-free [{n},{k}]_{q} matrix "
        f"in {max_tries} draws from seed {seed}"
    )
