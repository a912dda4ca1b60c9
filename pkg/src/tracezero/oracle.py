"""Brute-force recomputation of every counted quantity, plus the lemma suite.

Everything in this module works from the definitions: traces are sums of
Frobenius conjugates, inverses are group inverses, irreducibility is
tested on explicit polynomials or read off Frobenius orbit sizes.  None of
it touches the curve L-polynomials or the Moebius closed forms, so
agreement with the counting module is a genuine two-route check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dataclass_field

import numpy as np

from . import gf
from .curves import CurveSpec, beta_representatives, big_curve_count, count_points, count_points_naive
from .errors import BudgetExceededError, InvariantError
from .fastfield import table_for
from .numtheory import divisors, prime_factors, prime_power_parts


@dataclass(frozen=True)
class OracleBudget:
    """Caps enforced before any enumeration starts."""

    max_elements: int = 1 << 24
    max_pairs: int = 1 << 26

    def __post_init__(self):
        if self.max_elements < 1 or self.max_pairs < 1:
            raise ValueError("budget caps must be positive")


DEFAULT_BUDGET = OracleBudget()


def _tower(q: int, n: int, tower: gf.TowerSpec | None = None) -> gf.TowerSpec:
    if tower is not None:
        if tower.q != q or tower.n != n:
            raise ValueError("explicit tower does not match (q, n)")
        return tower
    p, r = prime_power_parts(q)
    return gf.make_tower(gf.make_field(p, r), n)


def _check_elements(q: int, n: int, budget: OracleBudget):
    if q**n > budget.max_elements:
        raise BudgetExceededError(
            f"{q}**{n} = {q**n} elements exceed the cap {budget.max_elements}"
        )


# ---------------------------------------------------------------------------
# element counts


def enum_f_count(
    q: int,
    n: int,
    budget: OracleBudget | None = None,
    tower: gf.TowerSpec | None = None,
) -> int:
    """#{a in F_{q^n} : Tr(a) = 0 and rTr(a) = 0} by full enumeration.

    Walks the unit group in generator order; a and a**-1 sit at mirrored
    exponents, so the reciprocal-trace condition is the trace condition
    read backwards.  The zero element counts via the rtrace(0) = 0
    convention.
    """
    budget = budget or DEFAULT_BUDGET
    _check_elements(q, n, budget)
    tab = table_for(_tower(q, n, tower))
    tz = tab.trace_zero_exp()
    return 1 + int((tz & tab.reversed_exp(tz)).sum())


def enum_f_count_small(tower: gf.TowerSpec, max_elements: int = 1 << 12) -> int:
    """Same count by the literal per-element definition; tiny fields only.

    Exists to validate the table-based path against first principles.
    """
    if tower.order > max_elements:
        raise BudgetExceededError("small-oracle cap exceeded")
    base = tower.base
    hits = 0
    for a in tower.elements():
        if base.is_zero(tower.trace_to_base(a)) and base.is_zero(tower.rtrace(a)):
            hits += 1
    return hits


# ---------------------------------------------------------------------------
# irreducible counts


def _irreducible_no_small_factor(field: gf.FieldSpec, f: tuple) -> bool:
    """Irreducibility via the distinct-degree scan with early exit.

    f of degree d is reducible iff it has an irreducible factor of degree
    at most d // 2, and gcd(x**(q**k) - x, f) catches every factor whose
    degree divides k.  Checking k = 1..d//2 in order exits early on the
    small factors that almost all reducible candidates have.
    """
    d = len(f) - 1
    if d == 1:
        return True
    q = field.order
    x = (field.zero, field.one)
    h = x
    for _ in range(d // 2):
        h = gf.poly_pow_mod(field, h, q, f)
        if len(gf.poly_gcd(field, gf.poly_sub(field, h, x), f)) != 1:
            return False
    return True


def enum_i_count(
    q: int,
    n: int,
    budget: OracleBudget | None = None,
    method: str = "auto",
) -> int:
    """Monic irreducibles of degree n over F_q with zero x**(n-1) and x terms.

    Two independent brute-force routes:

    * "scan": enumerate every monic candidate with the prescribed zero
      coefficients and test each for irreducibility (q**(n-2) candidates).
    * "orbit": enumerate the field F_{q^n}; each irreducible of degree n
      is the minimal polynomial of exactly n elements of degree n, and the
      two coefficient conditions are exactly trace zero and reciprocal
      trace zero of the root.  Cost q**n but fully vectorised.

    "auto" prefers the orbit route and falls back to the scan when only
    the candidate space fits the element cap.  n = 1 returns 1 by
    convention (the polynomial x).
    """
    budget = budget or DEFAULT_BUDGET
    if n < 1:
        raise ValueError("degree must be positive")
    if n == 1:
        return 1
    if method == "auto":
        method = "orbit" if q**n <= budget.max_elements else "scan"
    if method == "orbit":
        return _enum_i_orbit(q, n, budget)
    if method == "scan":
        return _enum_i_scan(q, n, budget)
    raise ValueError(f"unknown method {method!r}")


def _enum_i_orbit(q: int, n: int, budget: OracleBudget) -> int:
    _check_elements(q, n, budget)
    tab = table_for(_tower(q, n))
    tz = tab.trace_zero_exp()
    keep = tz & tab.reversed_exp(tz)
    for ell in prime_factors(n):
        keep &= ~tab.subfield_mask(n // ell)
    hits = int(keep.sum())
    if hits % n:
        raise InvariantError("degree-n element count not divisible by n")
    return hits // n


def _enum_i_scan(q: int, n: int, budget: OracleBudget) -> int:
    if q ** (n - 1) > budget.max_elements:
        raise BudgetExceededError(
            f"candidate scan for q={q}, n={n} exceeds the element cap"
        )
    p, r = prime_power_parts(q)
    field = gf.make_field(p, r)
    free = [0] + list(range(2, n - 1))  # constant term plus degrees 2..n-2
    count = 0
    for combo in itertools.product(field.element_list, repeat=len(free)):
        if field.is_zero(combo[0]):
            continue  # zero constant term means the root 0
        coeffs = [field.zero] * (n + 1)
        for pos, c in zip(free, combo):
            coeffs[pos] = c
        coeffs[n] = field.one
        if _irreducible_no_small_factor(field, tuple(coeffs)):
            count += 1
    return count


def enum_irreducible_total(q: int, n: int, budget: OracleBudget | None = None) -> int:
    """All monic irreducibles of degree n over F_q, via Frobenius orbits."""
    budget = budget or DEFAULT_BUDGET
    if n == 1:
        return q
    _check_elements(q, n, budget)
    tab = table_for(_tower(q, n))
    keep = np.ones(tab.N, dtype=bool)
    for ell in prime_factors(n):
        keep &= ~tab.subfield_mask(n // ell)
    hits = int(keep.sum())
    if hits % n:
        raise InvariantError("degree-n element count not divisible by n")
    return hits // n


# ---------------------------------------------------------------------------
# zero-locus counts


def z_count(
    q: int,
    n: int,
    mode: str = "combination",
    c=None,
    budget: OracleBudget | None = None,
    tower: gf.TowerSpec | None = None,
) -> int:
    """Zero counts of the trace pair over F_{q^n}.

    mode "trace":        #{a : Tr(a) = 0}
    mode "rtrace":       #{a : rTr(a) = 0}
    mode "combination":  #{a : c * Tr(a) - rTr(a) = 0}   (c a base element)

    Conventions as in gf: rTr(0) = 0, so a = 0 always qualifies.
    """
    budget = budget or DEFAULT_BUDGET
    _check_elements(q, n, budget)
    tw = _tower(q, n, tower)
    tab = table_for(tw)
    codes = tab.trace_codes_exp()
    if mode == "trace":
        return 1 + int((codes == 0).sum())
    rcodes = tab.reversed_exp(codes)
    if mode == "rtrace":
        return 1 + int((rcodes == 0).sum())
    if mode != "combination":
        raise ValueError(f"unknown mode {mode!r}")
    if c is None:
        raise ValueError("combination mode needs the multiplier c")
    base = tw.base
    mul_row = np.empty(q, dtype=np.int64)
    for v in range(q):
        mul_row[v] = base.code(base.mul(c, base.from_code(v)))
    return 1 + int((mul_row[codes] == rcodes).sum())


# ---------------------------------------------------------------------------
# the verification suite


@dataclass(frozen=True)
class CheckResult:
    name: str
    q: int
    n: int
    status: str  # "pass", "fail", or "skip"
    detail: str = ""


@dataclass
class VerifyReport:
    q: int
    n_max: int
    checks: list[CheckResult] = dataclass_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, name: str, q: int, n: int, ok: bool, lhs, rhs):
        status = "pass" if ok else "fail"
        detail = "" if ok else f"{lhs} != {rhs}"
        self.checks.append(CheckResult(name, q, n, status, detail))

    def skip(self, name: str, q: int, n: int, why: str):
        self.checks.append(CheckResult(name, q, n, "skip", why))

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n_max": self.n_max,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "q": c.q, "n": c.n, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
        }


def _image_of_artin_schreier_map(tower: gf.TowerSpec) -> np.ndarray:
    """Bitmap over element encodings of {y**q - y : y in F_{q^n}}."""
    d = tower.flat_degree
    p = tower.base.p
    # The map y -> y**q - y is F_p-linear; evaluate it columnwise.
    cols = []
    for j in range(d):
        b = tower.basis_element(j)
        img = tower.sub(tower.frobenius(b), b)
        cols.append(tower.flat_digits(img))
    M = np.array(cols, dtype=np.int64).T
    order = tower.order
    weights = p ** np.arange(d, dtype=np.int64)
    bitmap = np.zeros(order, dtype=bool)
    chunk = 1 << 18
    for s in range(0, order, chunk):
        t = np.arange(s, min(s + chunk, order), dtype=np.int64)
        digits = np.empty((t.size, d), dtype=np.int64)
        for j in range(d):
            digits[:, j] = t % p
            t = t // p
        bitmap[(digits @ M.T % p) @ weights] = True
    return bitmap


def _trace_zero_enc_bitmap(tower: gf.TowerSpec, tab) -> np.ndarray:
    bitmap = np.zeros(tower.order, dtype=bool)
    bitmap[0] = True
    bitmap[tab.exp_enc[tab.trace_zero_exp()]] = True
    return bitmap


def _power_scaling_samples(field: gf.FieldSpec, deg: int, limit: int = 64):
    """A few monic polynomials of the given degree, canonical order."""
    got = 0
    for tup in itertools.product(field.element_list, repeat=deg):
        tail = tup[::-1]
        yield tail + (field.one,)
        got += 1
        if got >= limit:
            return


def verify_all(q: int, n_max: int, budget: OracleBudget | None = None) -> VerifyReport:
    """Run every numeric identity check for 1 <= n <= n_max.

    Produces one pass/fail/skip line per (check, n); failures carry both
    disagreeing values.  Checks beyond the element budget are skipped, not
    failed.
    """
    from .counting import CountEngine  # local import to avoid a cycle

    budget = budget or DEFAULT_BUDGET
    p, r = prime_power_parts(q)
    field = gf.make_field(p, r)
    engine = CountEngine(field, max_elements=budget.max_elements)
    units = [a for a in field.elements() if not field.is_zero(a)]
    report = VerifyReport(q=q, n_max=n_max)

    for n in range(1, n_max + 1):
        if q**n > budget.max_elements:
            report.skip("element_budget", q, n, f"{q}**{n} over the element cap")
            continue
        tower = gf.make_tower(field, n)
        tab = table_for(tower)

        z_tr = z_count(q, n, "trace", budget=budget)
        report.add("trace_fiber_size", q, n, z_tr == q ** (n - 1), z_tr, q ** (n - 1))
        z_rt = z_count(q, n, "rtrace", budget=budget)
        report.add("rtrace_fiber_size", q, n, z_rt == q ** (n - 1), z_rt, q ** (n - 1))

        # {Tr = 0} equals the image of y -> y**q - y.
        lhs = _trace_zero_enc_bitmap(tower, tab)
        rhs = _image_of_artin_schreier_map(tower)
        report.add(
            "trace_zero_image", q, n, bool((lhs == rhs).all()), int(lhs.sum()), int(rhs.sum())
        )

        # Tr(P**d) = d Tr(P) and rTr(P**d) = d rTr(P) for monic P of degree n/d.
        ok = True
        for d in divisors(n):
            if d == 1:
                continue
            for poly in _power_scaling_samples(field, n // d):
                power = (field.one,)
                for _ in range(d):
                    power = gf.poly_mul(field, power, poly)
                want = field.mul(field.embed(d), gf.poly_trace(field, poly))
                if gf.poly_trace(field, power) != want:
                    ok = False
                if not field.is_zero(poly[0]):
                    want_r = field.mul(field.embed(d), gf.poly_rtrace(field, poly))
                    if gf.poly_rtrace(field, power) != want_r:
                        ok = False
        report.add("power_scaling", q, n, ok, "scaling", "held")

        # Pair count from the zero-locus identity.
        f_enum = enum_f_count(q, n, budget)
        zsum = z_tr + sum(
            z_count(q, n, "combination", c=a, budget=budget)
            for a in field.elements()
        )
        ident = zsum - q**n
        report.add(
            "pair_count_identity", q, n, q * f_enum == ident, q * f_enum, ident
        )

        # q-exponent curve count vs the combination zero-locus.
        ok = True
        lhs_rhs = ("", "")
        for a in units:
            big = big_curve_count(field, a, n, budget.max_elements)
            zc = z_count(q, n, "combination", c=a, budget=budget)
            if big != q * zc - q + 2:
                ok = False
                lhs_rhs = (big, q * zc - q + 2)
        report.add("big_curve_solvability", q, n, ok, *lhs_rhs)

        bigs = [big_curve_count(field, a, n, budget.max_elements) for a in units]
        if p == 2:
            report.add(
                "big_curve_alpha_invariance",
                q,
                n,
                len(set(bigs)) == 1,
                min(bigs),
                max(bigs),
            )
            small = sum(
                count_points(c, n, budget.max_elements) - (q**n + 1)
                for c in engine.curves
            )
            report.add(
                "fiber_product_even", q, n, bigs[0] - (q**n + 1) == small,
                bigs[0] - (q**n + 1), small,
            )
        else:
            reps = beta_representatives(field)
            ok = True
            lhs_rhs = ("", "")
            for a, big in zip(units, bigs):
                small = sum(
                    count_points(CurveSpec(field, a, b), n, budget.max_elements)
                    - (q**n + 1)
                    for b in reps
                )
                if big - (q**n + 1) != small:
                    ok = False
                    lhs_rhs = (big - (q**n + 1), small)
            report.add("fiber_product_odd", q, n, ok, *lhs_rhs)

        # The closed forms against enumeration.
        fc = engine.f_count(n)
        report.add("element_count_formula", q, n, fc == f_enum, fc, f_enum)
        i_enum = enum_i_count(q, n, budget)
        ic = engine.i_count(n)
        report.add("poly_count_formula", q, n, ic == i_enum, ic, i_enum)

        decomposed = (q ** (n // p) if n % p == 0 else 0) + sum(
            (n // d) * engine.i_count(n // d) for d in divisors(n) if d % p
        )
        report.add("poly_count_decomposition", q, n, fc == decomposed, fc, decomposed)

        # Naive double-loop curve counts where the pair budget allows.  The
        # double loop is pure Python, so gate on pairs times family size.
        naive_cost = q ** (2 * n) * len(engine.curves)
        if q ** (2 * n) <= budget.max_pairs and naive_cost <= 1 << 19:
            ok = True
            lhs_rhs = ("", "")
            for c in engine.curves:
                a = count_points(c, n, budget.max_elements)
                b = count_points_naive(c, n, budget.max_pairs)
                if a != b:
                    ok = False
                    lhs_rhs = (a, b)
            report.add("naive_curve_agreement", q, n, ok, *lhs_rhs)
        else:
            report.skip("naive_curve_agreement", q, n, "pair budget")

        # Counts must not depend on the modulus choice.
        if n >= 2 and q**n <= 1 << 16:
            try:
                alt = gf.make_tower_alt(field, n)
            except ValueError:
                report.skip("modulus_invariance", q, n, "single irreducible modulus")
            else:
                f_alt = enum_f_count(q, n, budget, tower=alt)
                report.add("modulus_invariance", q, n, f_alt == f_enum, f_alt, f_enum)
        elif n >= 2:
            report.skip("modulus_invariance", q, n, "kept to small fields")

    return report
