"""The closed-form counting engine.

f_count(n) is the number of elements of F_{q^n} whose trace and reciprocal
trace to F_q both vanish, evaluated through the curve family's
L-polynomials:

    p = 2:  (q**n + (q-1) * sum_alpha (S_alpha + 1)) / q**2
    p odd:  (q**n + (q-1)**2 + sum_{alpha,beta} S_{alpha,beta}) / q**2

with S = #C(F_{q^n}) - (q**n + 1) taken from the L-polynomial recurrence,
so the cost of one more n is a handful of big-integer multiplications.

i_count(n) is the number of monic irreducible polynomials of degree n over
F_q whose x**(n-1) and x coefficients vanish:

    i_count(n) = (1/n) * sum_{d | n, p !| d} mobius(d)
                 * (f_count(n/d) - [p | n] * q**(n/(p*d)))

All divisions are asserted exact; NonIntegralError here always means a bug
upstream, never an unlucky input.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import gf
from .curves import count_points, curve_family
from .errors import InvariantError, NonIntegralError
from .lpoly import LPolynomial
from .numtheory import divisors, mobius, prime_power_parts

DEFAULT_MAX_ELEMENTS = 1 << 24


def gauss_count(q: int, n: int) -> int:
    """Monic irreducibles of degree n over F_q, all coefficients free."""
    if n < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    if total % n:
        raise NonIntegralError(f"irreducible count for q={q}, n={n} not integral")
    return total // n


def carlitz_count(q: int, n: int) -> int:
    """Monic irreducibles of degree n over F_q with one prescribed trace.

    The classical formula (1/(q*n)) * sum over p-coprime divisors; it is
    exercised here only against nonzero prescribed traces.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    p, _ = prime_power_parts(q)
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n) if d % p)
    if total % (q * n):
        raise NonIntegralError(f"trace-count for q={q}, n={n} not integral")
    return total // (q * n)


@dataclass(frozen=True)
class CountRow:
    n: int
    f_count: int
    i_count: int
    sources: tuple[str, ...]


@dataclass(frozen=True)
class CountReport:
    p: int
    r: int
    q: int
    rows: tuple[CountRow, ...]

    def __post_init__(self):
        for row in self.rows:
            if row.f_count < 0 or row.i_count < 0:
                raise InvariantError(f"negative count in row n={row.n}")
            if row.n >= 2 and row.i_count > gauss_count(self.q, row.n):
                raise InvariantError(
                    f"constrained count exceeds the unconstrained one at n={row.n}"
                )

    def to_dict(self) -> dict:
        """JSON-ready form; big integers become decimal strings."""
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "rows": [
                {
                    "n": row.n,
                    "f_count": str(row.f_count),
                    "i_count": str(row.i_count),
                    "sources": list(row.sources),
                }
                for row in self.rows
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CountReport":
        rows = tuple(
            CountRow(r["n"], int(r["f_count"]), int(r["i_count"]), tuple(r["sources"]))
            for r in d["rows"]
        )
        return cls(d["p"], d["r"], d["q"], rows)


class CountEngine:
    """Curve counts and L-polynomials for one base field, queried per n.

    Construction enumerates F_{q^m} for m = 1..genus to seed each curve's
    L-polynomial, then (by default) re-counts at genus+1 and genus+2 and
    checks the predictions.  That over-determination check is the
    strongest self-test the engine has: a wrong genus, a wrong smooth
    completion, or a wrong Newton step fails it immediately.
    """

    def __init__(
        self,
        field: gf.FieldSpec,
        max_elements: int | None = DEFAULT_MAX_ELEMENTS,
        selfcheck_depth: int = 2,
    ):
        self.field = field
        self.q = field.order
        self.p = field.p
        self.genus = 1 if field.p == 2 else field.p - 1
        self.curves = curve_family(field)
        self.lpolys: list[LPolynomial] = []
        for curve in self.curves:
            counts = [
                count_points(curve, m, max_elements) for m in range(1, self.genus + 1)
            ]
            self.lpolys.append(LPolynomial.from_counts(self.q, self.genus, counts))
        self.verified_depth = 0
        for extra in range(1, selfcheck_depth + 1):
            m = self.genus + extra
            if max_elements is not None and self.q**m > max_elements:
                break
            for curve, lp in zip(self.curves, self.lpolys):
                direct = count_points(curve, m, max_elements)
                if lp.predict_count(m) != direct:
                    raise InvariantError(
                        f"L-polynomial prediction disagrees with direct count "
                        f"at m={m} for curve {curve.describe()}"
                    )
            self.verified_depth = extra

    # -- the closed forms ----------------------------------------------------

    def curve_defect(self, index: int, n: int) -> int:
        """S(F_{q^n}) = #C(F_{q^n}) - (q**n + 1) for curve number index."""
        return self.lpolys[index].predict_count(n) - (self.q**n + 1)

    def f_count(self, n: int) -> int:
        """Elements of F_{q^n} with vanishing trace and reciprocal trace."""
        if n < 1:
            raise ValueError("n must be positive")
        q = self.q
        defects = [self.curve_defect(i, n) for i in range(len(self.curves))]
        if self.p == 2:
            num = q**n + (q - 1) * sum(s + 1 for s in defects)
        else:
            num = q**n + (q - 1) ** 2 + sum(defects)
        if num % (q * q):
            raise NonIntegralError(f"f_count numerator not divisible by q^2 at n={n}")
        out = num // (q * q)
        if out < 0:
            raise InvariantError(f"negative element count at n={n}")
        return out

    def i_count(self, n: int) -> int:
        """Monic irreducibles of degree n with zero x**(n-1) and x coefficients.

        n = 1 returns 1 by convention (the polynomial x).
        """
        if n < 1:
            raise ValueError("n must be positive")
        if n == 1:
            return 1
        p, q = self.p, self.q
        p_divides_n = n % p == 0
        total = 0
        for d in divisors(n):
            if d % p == 0:
                continue
            mu = mobius(d)
            if mu == 0:
                continue
            term = self.f_count(n // d)
            if p_divides_n:
                term -= q ** (n // (p * d))
            total += mu * term
        if total % n:
            raise NonIntegralError(f"i_count total not divisible by n={n}")
        out = total // n
        if out < 0:
            raise InvariantError(f"negative irreducible count at n={n}")
        return out

    def table(
        self, n_min: int, n_max: int, cross_check_budget: int | None = None
    ) -> CountReport:
        """Rows (n, f_count, i_count) for n_min..n_max.

        With cross_check_budget set, each row within budget is re-derived
        by brute-force enumeration and must agree exactly; such rows carry
        both source tags.
        """
        if n_min > n_max or n_min < 1:
            raise ValueError("need 1 <= n_min <= n_max")
        rows = []
        for n in range(n_min, n_max + 1):
            fc = self.f_count(n)
            ic = self.i_count(n)
            sources = ("formula",)
            if cross_check_budget is not None and self.q**n <= cross_check_budget:
                from .oracle import OracleBudget, enum_f_count, enum_i_count

                budget = OracleBudget(max_elements=cross_check_budget)
                fo = enum_f_count(self.q, n, budget)
                io = enum_i_count(self.q, n, budget)
                if (fo, io) != (fc, ic):
                    raise InvariantError(
                        f"formula/enumeration mismatch at n={n}: "
                        f"({fc}, {ic}) vs ({fo}, {io})"
                    )
                sources = ("formula", "oracle")
            rows.append(CountRow(n, fc, ic, sources))
        return CountReport(self.field.p, self.field.r, self.q, tuple(rows))


def engine_for(q: int, **kwargs) -> CountEngine:
    """Convenience constructor from a prime power."""
    p, r = prime_power_parts(q)
    return CountEngine(gf.make_field(p, r), **kwargs)
