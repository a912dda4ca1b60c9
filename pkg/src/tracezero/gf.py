"""Exact arithmetic in F_p, F_q = F_{p^r}, and the two-level tower F_{q^n}.

Fields are pinned down by explicit moduli so that every run, on every
platform, reproduces the same element order and the same intermediate
artifacts.  Representation:

  * elements of F_p are plain ints in [0, p);
  * elements of F_{p^r} (r >= 2) are length-r tuples of ints, constant
    coefficient first;
  * elements of the tower F_{q^n} are length-n tuples of base elements,
    again constant coefficient first.

The canonical element order compares coefficient vectors low-to-high as
integers, i.e. by the positional code sum(c_t * p**t); the canonical
modulus of each extension is the first monic irreducible in that order
(so x**3 + x + 1 for degree 3 over F_2).  All operations are pure
functions of immutable values, so everything in this module is freely
shareable across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import (
    BudgetExceededError,
    InvariantError,
    NonMonicError,
    NonPrimeError,
)
from .numtheory import is_prime, prime_factors


@dataclass(frozen=True)
class FieldSpec:
    """F_p when r == 1, else F_p[x]/(modulus) with modulus monic of degree r.

    For r == 1 the modulus is the placeholder x (coefficients (0, 1)) and
    elements are residues; for r >= 2 elements are coefficient tuples.
    """

    p: int
    r: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrimeError(f"{self.p} is not prime")
        if self.r < 1:
            raise ValueError("extension degree must be positive")
        if len(self.modulus) != self.r + 1:
            raise ValueError("modulus degree does not match r")
        if any(not isinstance(c, int) or not 0 <= c < self.p for c in self.modulus):
            raise ValueError("modulus coefficients must be reduced residues")
        if self.r == 1:
            if self.modulus != (0, 1):
                raise ValueError("degree-1 fields use the placeholder modulus x")
        else:
            if self.modulus[-1] != 1:
                raise NonMonicError("field modulus must be monic")
            if not is_irreducible(self.modulus, FieldSpec(self.p, 1, (0, 1))):
                raise ValueError("field modulus must be irreducible")

    # -- structure ---------------------------------------------------------

    @cached_property
    def order(self) -> int:
        return self.p**self.r

    @cached_property
    def zero(self):
        return 0 if self.r == 1 else (0,) * self.r

    @cached_property
    def one(self):
        return 1 if self.r == 1 else (1,) + (0,) * (self.r - 1)

    def embed(self, c: int):
        """The image of the integer c under Z -> F_p -> this field."""
        c %= self.p
        return c if self.r == 1 else (c,) + (0,) * (self.r - 1)

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- element arithmetic ------------------------------------------------

    def add(self, a, b):
        if self.r == 1:
            return (a + b) % self.p
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        if self.r == 1:
            return (a - b) % self.p
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        if self.r == 1:
            return -a % self.p
        return tuple(-x % self.p for x in a)

    @cached_property
    def _tails(self) -> tuple[tuple[int, ...], ...]:
        # _tails[k] = x**(r+k) reduced mod the modulus, k = 0 .. r-2
        p, r, m = self.p, self.r, self.modulus
        first = tuple(-m[j] % p for j in range(r))
        tails = [first]
        for _ in range(r - 2):
            prev = tails[-1]
            lead = prev[-1]
            nxt = [0] + list(prev[:-1])
            if lead:
                for j in range(r):
                    nxt[j] = (nxt[j] + lead * first[j]) % p
            tails.append(tuple(c % p for c in nxt))
        return tuple(tails)

    def mul(self, a, b):
        p = self.p
        if self.r == 1:
            return a * b % p
        r = self.r
        prod = [0] * (2 * r - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for k in range(2 * r - 2, r - 1, -1):
            v = prod[k] % p
            if v:
                tail = self._tails[k - r]
                for j in range(r):
                    if tail[j]:
                        prod[j] += v * tail[j]
        return tuple(c % p for c in prod[:r])

    def pow_(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponents are not supported; invert first")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        return self.pow_(a, self.order - 2)

    # -- enumeration and encoding -------------------------------------------

    def elements(self) -> Iterator:
        """All elements in canonical order (increasing positional code)."""
        if self.r == 1:
            yield from range(self.p)
        else:
            for tup in itertools.product(range(self.p), repeat=self.r):
                yield tup[::-1]

    @cached_property
    def element_list(self) -> tuple:
        return tuple(self.elements())

    def digits(self, a) -> tuple[int, ...]:
        """Coefficient vector of a over F_p, length r."""
        return (a,) if self.r == 1 else a

    def code(self, a) -> int:
        """Positional integer code sum(c_t * p**t); inverse of from_code."""
        if self.r == 1:
            return a
        v = 0
        for t in reversed(a):
            v = v * self.p + t
        return v

    def from_code(self, v: int):
        if not 0 <= v < self.order:
            raise ValueError(f"element code {v} out of range for order {self.order}")
        if self.r == 1:
            return v
        digs = []
        for _ in range(self.r):
            digs.append(v % self.p)
            v //= self.p
        return tuple(digs)

    def trace_to_prime(self, a) -> int:
        """Trace to F_p: the sum of the p-power Frobenius conjugates."""
        if self.r == 1:
            return a
        acc = a
        t = a
        for _ in range(self.r - 1):
            t = self.pow_(t, self.p)
            acc = self.add(acc, t)
        if any(acc[1:]):
            raise InvariantError("trace left the prime field")
        return acc[0]


@dataclass(frozen=True)
class TowerSpec:
    """The extension F_{q^n} = F_q[x]/(ext_modulus) over base = F_q.

    Elements are length-n tuples of base-field elements, constant
    coefficient first.  Keeping the tower two-level (rather than flattening
    to one degree r*n extension of F_p) makes the trace to the middle field
    a plain sum of q-power Frobenius orbits.
    """

    base: FieldSpec
    n: int
    ext_modulus: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("tower degree must be positive")
        if len(self.ext_modulus) != self.n + 1:
            raise ValueError("ext_modulus degree does not match n")
        if self.n == 1:
            if self.ext_modulus != (self.base.zero, self.base.one):
                raise ValueError("degree-1 towers use the placeholder modulus x")
        else:
            if self.ext_modulus[-1] != self.base.one:
                raise NonMonicError("tower modulus must be monic")
            if not is_irreducible(self.ext_modulus, self.base):
                raise ValueError("tower modulus must be irreducible over the base")

    # -- structure ---------------------------------------------------------

    @cached_property
    def order(self) -> int:
        return self.base.order**self.n

    @cached_property
    def q(self) -> int:
        return self.base.order

    @cached_property
    def zero(self):
        return (self.base.zero,) * self.n

    @cached_property
    def one(self):
        return (self.base.one,) + (self.base.zero,) * (self.n - 1)

    def embed_base(self, b):
        return (b,) + (self.base.zero,) * (self.n - 1)

    def embed_scalar(self, c: int):
        return self.embed_base(self.base.embed(c))

    def is_zero(self, a) -> bool:
        return a == self.zero

    # -- element arithmetic ------------------------------------------------

    def add(self, a, b):
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        base = self.base
        return tuple(base.sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        base = self.base
        return tuple(base.neg(x) for x in a)

    @cached_property
    def _tails(self) -> tuple[tuple, ...]:
        base, n, m = self.base, self.n, self.ext_modulus
        first = tuple(base.neg(m[j]) for j in range(n))
        tails = [first]
        for _ in range(n - 2):
            prev = tails[-1]
            lead = prev[-1]
            nxt = [base.zero] + list(prev[:-1])
            if not base.is_zero(lead):
                for j in range(n):
                    nxt[j] = base.add(nxt[j], base.mul(lead, first[j]))
            tails.append(tuple(nxt))
        return tuple(tails)

    def mul(self, a, b):
        base = self.base
        n = self.n
        if n == 1:
            return (base.mul(a[0], b[0]),)
        prod = [base.zero] * (2 * n - 1)
        for i, ai in enumerate(a):
            if not base.is_zero(ai):
                for j, bj in enumerate(b):
                    prod[i + j] = base.add(prod[i + j], base.mul(ai, bj))
        for k in range(2 * n - 2, n - 1, -1):
            v = prod[k]
            if not base.is_zero(v):
                tail = self._tails[k - n]
                for j in range(n):
                    if not base.is_zero(tail[j]):
                        prod[j] = base.add(prod[j], base.mul(v, tail[j]))
        return tuple(prod[:n])

    def pow_(self, a, e: int):
        if e < 0:
            raise ValueError("negative exponents are not supported; invert first")
        result = self.one
        base_ = a
        while e:
            if e & 1:
                result = self.mul(result, base_)
            base_ = self.mul(base_, base_)
            e >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow_(a, self.order - 2)

    # -- Frobenius, traces ---------------------------------------------------

    def frobenius(self, a):
        """The q-power map a -> a**q."""
        return self.pow_(a, self.q)

    def trace_to_base(self, a):
        """Sum of the q-power Frobenius conjugates; lands in the base field."""
        acc = a
        t = a
        for _ in range(self.n - 1):
            t = self.frobenius(t)
            acc = self.add(acc, t)
        base = self.base
        if any(not base.is_zero(c) for c in acc[1:]):
            raise InvariantError("trace left the base field")
        return acc[0]

    def rtrace(self, a):
        """Trace of the inverse, with the convention rtrace(0) = 0.

        The zero case is a defined value, not an error: it is what makes
        the zero-locus of the reciprocal trace have exactly q**(n-1)
        elements, matching the trace fibers.
        """
        if self.is_zero(a):
            return self.base.zero
        return self.trace_to_base(self.inv(a))

    def absolute_trace(self, a) -> int:
        """Trace all the way down to F_p, by composing the two tower traces."""
        return self.base.trace_to_prime(self.trace_to_base(a))

    # -- enumeration and encoding -------------------------------------------

    def elements(self) -> Iterator:
        """All elements in canonical order (increasing positional code)."""
        for tup in itertools.product(self.base.element_list, repeat=self.n):
            yield tup[::-1]

    @cached_property
    def flat_degree(self) -> int:
        """Dimension over F_p."""
        return self.n * self.base.r

    def flat_digits(self, a) -> tuple[int, ...]:
        """Concatenated F_p coefficient vector, length flat_degree."""
        out = []
        for c in a:
            out.extend(self.base.digits(c))
        return tuple(out)

    def from_flat_digits(self, digs: Sequence[int]):
        r = self.base.r
        if r == 1:
            return tuple(digs)
        return tuple(tuple(digs[i * r : (i + 1) * r]) for i in range(self.n))

    def basis_element(self, j: int):
        """The tower element whose flat digit vector is the j-th unit vector."""
        digs = [0] * self.flat_degree
        digs[j] = 1
        return self.from_flat_digits(digs)

    def code(self, a) -> int:
        """Positional integer code over the base-field codes."""
        v = 0
        q = self.q
        for c in reversed(a):
            v = v * q + self.base.code(c)
        return v

    def from_code(self, v: int):
        if not 0 <= v < self.order:
            raise ValueError(f"element code {v} out of range for order {self.order}")
        q = self.q
        out = []
        for _ in range(self.n):
            out.append(self.base.from_code(v % q))
            v //= q
        return tuple(out)


def enumerate_elements(tower: TowerSpec, max_elements: int | None = None) -> Iterator:
    """All q**n tower elements, canonical order, guarded by an element cap."""
    if max_elements is not None and tower.order > max_elements:
        raise BudgetExceededError(
            f"enumerating {tower.order} elements exceeds the cap of {max_elements}"
        )
    return tower.elements()


# ---------------------------------------------------------------------------
# Polynomials over a field
#
# A polynomial is a tuple of field elements, constant coefficient first,
# with no trailing zeros above the degree; () is the zero polynomial.


def poly_trim(field, f) -> tuple:
    f = tuple(f)
    k = len(f)
    while k and field.is_zero(f[k - 1]):
        k -= 1
    return f[:k]


def poly_deg(f) -> int:
    return len(f) - 1


def poly_add(field, f, g) -> tuple:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return poly_trim(field, out)


def poly_sub(field, f, g) -> tuple:
    out = list(f) + [field.zero] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = field.sub(out[i], c)
    return poly_trim(field, out)


def poly_mul(field, f, g) -> tuple:
    if not f or not g:
        return ()
    out = [field.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not field.is_zero(a):
            for j, b in enumerate(g):
                out[i + j] = field.add(out[i + j], field.mul(a, b))
    return poly_trim(field, out)


def poly_divmod(field, f, g) -> tuple[tuple, tuple]:
    g = poly_trim(field, g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(poly_trim(field, f))
    dg = len(g) - 1
    if len(f) - 1 < dg:
        return (), tuple(f)
    lead_inv = field.inv(g[-1])
    quot = [field.zero] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if field.is_zero(c):
            continue
        c = field.mul(c, lead_inv)
        quot[k - dg] = c
        for j in range(dg + 1):
            f[k - dg + j] = field.sub(f[k - dg + j], field.mul(c, g[j]))
    return poly_trim(field, quot), poly_trim(field, f)


def poly_mod(field, f, g) -> tuple:
    return poly_divmod(field, f, g)[1]


def poly_gcd(field, f, g) -> tuple:
    """Monic gcd."""
    a, b = poly_trim(field, f), poly_trim(field, g)
    while b:
        a, b = b, poly_mod(field, a, b)
    if a:
        lead_inv = field.inv(a[-1])
        a = tuple(field.mul(c, lead_inv) for c in a)
    return a


def poly_pow_mod(field, f, e: int, modulus) -> tuple:
    result = (field.one,)
    base = poly_mod(field, f, modulus)
    while e:
        if e & 1:
            result = poly_mod(field, poly_mul(field, result, base), modulus)
        base = poly_mod(field, poly_mul(field, base, base), modulus)
        e >>= 1
    return result


def is_irreducible(f, field: FieldSpec) -> bool:
    """Irreducibility over the field, for monic f of degree d >= 1.

    Contract: f is irreducible iff x**(q**d) == x (mod f) and, for every
    prime l dividing d, gcd(x**(q**(d/l)) - x mod f, f) = 1.
    """
    f = tuple(f)
    d = len(f) - 1
    if d < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    if f[-1] != field.one:
        raise NonMonicError("irreducibility test requires a monic polynomial")
    if d == 1:
        return True
    q = field.order
    x = (field.zero, field.one)
    targets = {d // ell for ell in prime_factors(d)}
    h = x
    for k in range(1, d + 1):
        h = poly_pow_mod(field, h, q, f)
        if k in targets:
            g = poly_gcd(field, poly_sub(field, h, x), f)
            if len(g) != 1:
                return False
    return not poly_sub(field, h, x)


def poly_trace(field, f):
    """For monic f = prod(x - roots), the sum of the roots."""
    f = tuple(f)
    if f[-1] != field.one:
        raise NonMonicError("trace is defined for monic polynomials")
    d = len(f) - 1
    if d < 1:
        raise ValueError("degree must be at least 1")
    return field.neg(f[d - 1])


def poly_rtrace(field, f):
    """For monic f with nonzero constant term, the sum of inverse roots."""
    f = tuple(f)
    if f[-1] != field.one:
        raise NonMonicError("reciprocal trace is defined for monic polynomials")
    d = len(f) - 1
    if d < 1:
        raise ValueError("degree must be at least 1")
    if field.is_zero(f[0]):
        raise ZeroDivisionError("reciprocal trace needs a nonzero constant term")
    # With f = x^d - c_{d-1} x^{d-1} + ... + (-1)^{d-1} c_1 x + (-1)^d c_0,
    # the value is c_1 / c_0.
    c0 = f[0] if d % 2 == 0 else field.neg(f[0])
    if d == 1:
        c1 = field.one
    else:
        c1 = f[1] if d % 2 == 1 else field.neg(f[1])
    return field.mul(c1, field.inv(c0))


# ---------------------------------------------------------------------------
# Canonical field and tower construction


@lru_cache(maxsize=None)
def make_field(p: int, r: int) -> FieldSpec:
    """F_{p^r} with the lexicographically smallest monic irreducible modulus.

    Coefficient tuples are compared constant term first.  The counts this
    package produces are isomorphism invariants, so the particular modulus
    never matters for results; pinning it keeps element enumeration order
    and intermediate artifacts reproducible.
    """
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if r < 1:
        raise ValueError("extension degree must be positive")
    if r == 1:
        return FieldSpec(p, 1, (0, 1))
    prime_field = make_field(p, 1)
    for tup in itertools.product(range(p), repeat=r):
        tail = tup[::-1]
        if tail[0] == 0:
            continue  # zero constant term means the root 0
        f = tail + (1,)
        if is_irreducible(f, prime_field):
            return FieldSpec(p, r, f)
    raise InvariantError(f"no irreducible of degree {r} over F_{p}")


def _tower_modulus_scan(base: FieldSpec, n: int) -> Iterator[tuple]:
    for tup in itertools.product(base.element_list, repeat=n):
        tail = tup[::-1]
        if base.is_zero(tail[0]):
            continue
        f = tail + (base.one,)
        if is_irreducible(f, base):
            yield f


@lru_cache(maxsize=None)
def make_tower(base: FieldSpec, n: int) -> TowerSpec:
    """F_{q^n} over the base, with the lex-smallest irreducible modulus."""
    if n < 1:
        raise ValueError("tower degree must be positive")
    if n == 1:
        return TowerSpec(base, 1, (base.zero, base.one))
    return TowerSpec(base, n, next(_tower_modulus_scan(base, n)))


@lru_cache(maxsize=None)
def make_tower_alt(base: FieldSpec, n: int) -> TowerSpec:
    """Same field, next modulus in the canonical scan.

    Used to confirm that enumerated counts do not depend on the modulus
    choice; only defined for n >= 2 (degree 1 has a single placeholder).
    """
    if n < 2:
        raise ValueError("no alternative modulus below degree 2")
    scan = _tower_modulus_scan(base, n)
    next(scan)
    try:
        return TowerSpec(base, n, next(scan))
    except StopIteration:
        raise ValueError(
            f"degree {n} over F_{base.order} has a single irreducible"
        ) from None
