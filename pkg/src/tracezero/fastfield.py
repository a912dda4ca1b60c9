"""Vectorised whole-field enumeration tables.

A FieldTable walks the multiplicative group of one tower field in generator
order and exposes the walk as numpy arrays: entry k is gamma**k.  Linear
data (traces, multiplication by a fixed constant) is then evaluated as
F_p-linear functionals on the flat digit vectors, and inverses come for
free because (gamma**k)**-1 = gamma**(N-k).

Every matrix and functional is built from gf's definitional arithmetic
(traces are literal sums of Frobenius conjugates); numpy only accelerates
the bookkeeping.  No closed-form formula under test enters any table.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import InvariantError
from .gf import TowerSpec
from .numtheory import prime_factors

_BLOCK = 1 << 12
_CHUNK = 1 << 18


def multiplicative_generator(tower: TowerSpec):
    """First element in canonical order that generates the unit group."""
    N = tower.order - 1
    one = tower.one
    if N == 1:
        return one
    prims = prime_factors(N)
    for a in tower.elements():
        if tower.is_zero(a):
            continue
        if all(tower.pow_(a, N // ell) != one for ell in prims):
            return a
    raise InvariantError("unit group has no generator; field data corrupt")


def _mat_pow(m: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.eye(m.shape[0], dtype=np.int64)
    base = m % p
    while e:
        if e & 1:
            out = (out @ base) % p
        base = (base @ base) % p
        e >>= 1
    return out


class FieldTable:
    """Enumeration tables for F_{q^n}, indexed by exponent of a generator."""

    def __init__(self, tower: TowerSpec):
        self.tower = tower
        self.p = tower.base.p
        self.d = tower.flat_degree
        self.N = tower.order - 1
        self._pow_p = self.p ** np.arange(self.d, dtype=np.int64)
        self.exp_enc = self._walk()
        self._check_bijection()
        self._trace_codes = None

    # -- construction --------------------------------------------------------

    def _mul_matrix(self, g) -> np.ndarray:
        """Matrix of x -> g*x acting on flat digit vectors, mod p."""
        tower, d = self.tower, self.d
        cols = [
            tower.flat_digits(tower.mul(g, tower.basis_element(j))) for j in range(d)
        ]
        return np.array(cols, dtype=np.int64).T

    def _walk(self) -> np.ndarray:
        tower, p, d, N = self.tower, self.p, self.d, self.N
        g = multiplicative_generator(tower)
        M = self._mul_matrix(g)
        B = min(_BLOCK, N)
        block = np.zeros((B, d), dtype=np.int64)
        block[0] = tower.flat_digits(tower.one)
        for k in range(1, B):
            block[k] = (M @ block[k - 1]) % p
        enc = np.empty(N, dtype=np.int64)
        step = _mat_pow(M, B, p).T.astype(np.float64)
        done = 0
        cur = block
        while True:
            take = min(B, N - done)
            enc[done : done + take] = cur[:take] @ self._pow_p
            done += take
            if done == N:
                return enc
            # float64 BLAS keeps this exact: entries stay below d * p**2 << 2**53
            cur = np.rint(cur.astype(np.float64) @ step).astype(np.int64) % p

    def _check_bijection(self):
        counts = np.bincount(self.exp_enc, minlength=self.tower.order)
        if counts[0] != 0 or not (counts[1:] == 1).all():
            raise InvariantError("generator walk did not cover the unit group")

    # -- generic access -------------------------------------------------------

    def decode_digits(self, encs: np.ndarray) -> np.ndarray:
        out = np.empty((encs.size, self.d), dtype=np.int64)
        t = encs.copy()
        for j in range(self.d):
            out[:, j] = t % self.p
            t //= self.p
        return out

    def functionals_exp(self, rows) -> np.ndarray:
        """Evaluate F_p-linear functionals on gamma**k for every k.

        rows is a (k, d) array-like of digit-space functionals; the result
        is an (N, k) int16 array of values mod p, indexed by exponent.
        """
        L = np.asarray(rows, dtype=np.int64).T  # (d, k)
        out = np.empty((self.N, L.shape[1]), dtype=np.int16)
        for s in range(0, self.N, _CHUNK):
            chunk = self.decode_digits(self.exp_enc[s : s + _CHUNK])
            out[s : s + chunk.shape[0]] = (chunk @ L) % self.p
        return out

    @staticmethod
    def reversed_exp(arr: np.ndarray) -> np.ndarray:
        """Reindex k -> (N - k) mod N, i.e. the values on inverses."""
        return np.concatenate([arr[:1], arr[:0:-1]])

    # -- traces ---------------------------------------------------------------

    def trace_rows(self) -> np.ndarray:
        """Digit-space functionals giving the base-field digits of the trace."""
        tower = self.tower
        base = tower.base
        rows = np.empty((base.r, self.d), dtype=np.int64)
        for j in range(self.d):
            t = base.digits(tower.trace_to_base(tower.basis_element(j)))
            rows[:, j] = t
        return rows

    def trace_codes_exp(self) -> np.ndarray:
        """Positional code of Tr(gamma**k) in the base field, per k."""
        if self._trace_codes is None:
            vals = self.functionals_exp(self.trace_rows()).astype(np.int64)
            weights = self.p ** np.arange(self.tower.base.r, dtype=np.int64)
            self._trace_codes = vals @ weights
        return self._trace_codes

    def trace_zero_exp(self) -> np.ndarray:
        return self.trace_codes_exp() == 0

    # -- subfields --------------------------------------------------------------

    def subfield_mask(self, e: int) -> np.ndarray:
        """Mask of exponents k with gamma**k in the subfield F_{q^e}."""
        if self.tower.n % e:
            raise ValueError(f"{e} does not divide the tower degree")
        sub_order = self.tower.q**e - 1
        step = self.N // sub_order
        mask = np.zeros(self.N, dtype=bool)
        mask[::step] = True
        return mask


@lru_cache(maxsize=6)
def table_for(tower: TowerSpec) -> FieldTable:
    """Shared per-tower table cache; entries are immutable once built."""
    return FieldTable(tower)
