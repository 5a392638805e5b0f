"""Verification suites: every reference value and identity, checked exactly.

Each check returns a :class:`CheckResult`; suites are cumulative
(``quick`` < ``paper`` < ``full``).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from .characters import kronecker, m_oracle, mbar_oracle
from .laurent import LaurentPoly
from .multiplicity import build_super_alphabets, inner_product, m_large, m_prime
from .partitions import (Partition, conjugate, enumerate_hook, is_in_hook,
                         is_large, is_typical, join_typical, partitions,
                         split_typical, TypicalSplit)
from .series import (P_oracle_series, Pbarprime_series, Pprime_series,
                     RationalForm, T_series, Tbar_series, find_functional_equation,
                     functional_equation_check, rational_expand)
from .symfunc import Alphabet, hook_schur_eval, schur_eval, truncated_kernel

V = LaurentPoly.var
ONE = LaurentPoly.const(1)


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0
    limit: float | None = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        budget = f" (limit {self.limit:g} s)" if self.limit else ""
        tail = f" -- {self.detail}" if self.detail else ""
        return f"{status}  {self.name}  [{self.seconds:.2f} s{budget}]{tail}"


class _Failures:
    def __init__(self):
        self.items: list[str] = []

    def expect(self, cond: bool, msg: str) -> None:
        if not cond:
            self.items.append(msg)

    def summary(self, ok_detail: str = "") -> tuple[bool, str]:
        if self.items:
            more = f" (+{len(self.items) - 3} more)" if len(self.items) > 3 else ""
            return False, "; ".join(self.items[:3]) + more
        return True, ok_detail


# reference closed forms, in the t_i/u_j naming of series.py

def t1122_form() -> RationalForm:
    t1, t2, u1, u2 = V("t1"), V("t2"), V("u1"), V("u2")
    return RationalForm(LaurentPoly.const(2), [(t1, 2), (t2, 2), (u1, 1), (u2, 1), (u1 * u2, 1)],
                        t_vars=("t1", "t2"), u_vars=("u1", "u2"))


def f_row_form() -> RationalForm:
    """f(x) = P(1,1;0,1) = (1 + x - x^2)/(1 - x^2) with x = u1."""
    x = V("u1")
    return RationalForm(1 + x - x ** 2, [(x ** 2, 1)], u_vars=("u1",))


def g_row_form() -> RationalForm:
    """g(x) = P(2,2;1,0) = (1 - x + x^2 + x^3 - x^4)/((1-x)^2 (1-x^2)^2) with x = t1."""
    x = V("t1")
    return RationalForm(1 - x + x ** 2 + x ** 3 - x ** 4, [(x, 2), (x ** 2, 2)], t_vars=("t1",))


def pprime11_form() -> RationalForm:
    t, u = V("t1"), V("u1")
    return RationalForm((1 + u * t) * (t + u), [(t, 2), (u ** 2, 1)], t_vars=("t1",), u_vars=("u1",))


def pbarprime11_form() -> tuple[LaurentPoly, RationalForm]:
    """1 + 2(t+u)(1+tu)/((1-t)^2 (1-u)), returned as (polynomial part, rational part)."""
    t, u = V("t1"), V("u1")
    return ONE, RationalForm(2 * (t + u) * (1 + t * u), [(t, 2), (u, 1)], t_vars=("t1",), u_vars=("u1",))


def tbar1122_form() -> RationalForm:
    t1, t2, u1, u2 = V("t1"), V("t2"), V("u1"), V("u2")
    return RationalForm(2 * (3 + u1 + u2 - u1 * u2), [(t1, 2), (t2, 2), (u1, 1), (u2, 1), (u1 * u2, 1)],
                        t_vars=("t1", "t2"), u_vars=("u1", "u2"))


def tables21_forms() -> dict[str, RationalForm]:
    t, u = V("t1"), V("u1")

    def poly(var, coefs):
        return sum((c * var ** i for i, c in enumerate(coefs)), LaurentPoly.const(0))

    return {
        "T(2,1;1,0)": RationalForm(poly(t, [372, 801, 835, 515, 213, 35, 1]), [(t, 2), (t ** 2, 1)],
                                   t_vars=("t1",)),
        "T(2,1;0,1)": RationalForm(poly(u, [372, 780, 1083, 1193, 1034, 754, 513, 319, 158, 54, 11, 1]),
                                   [(u, 1)], u_vars=("u1",)),
        "Tbar(2,1;1,0)": RationalForm(poly(t, [2697, 6346, 6641, 4449, 1981, 503, 50, 1]),
                                      [(t, 2), (t ** 2, 1)], t_vars=("t1",)),
        "Tbar(2,1;0,1)": RationalForm(poly(u, [2697, 6249, 8817, 9587, 8706, 6890, 4877, 3107, 1744,
                                               820, 301, 79, 13, 1]), [(u, 1)], u_vars=("u1",)),
    }


# acceptance criteria

def check_rows_columns() -> tuple[bool, str]:
    fails = _Failures()
    for h in ((1, 1), (2, 1), (2, 2)):
        for n in range(1, 11):
            members = [lam for lam in partitions(n) if is_in_hook(lam, h)]
            selfconj = sum(1 for lam in members if conjugate(lam) == lam)
            m_row = m_oracle((n,), h)
            m_col = m_oracle((1,) * n, h)
            fails.expect(m_row == len(members), f"m_({n}) at {h}: {m_row} != {len(members)}")
            fails.expect(m_col == selfconj, f"m_(1^{n}) at {h}: {m_col} != {selfconj}")
    return fails.summary("n <= 10 at (1,1), (2,1), (2,2)")


def g_row_sum_form() -> RationalForm:
    """1 + x/(1-x)^2 + x^4/((1-x)^2 (1-x^2)^2), the unsimplified sum over hooks and
    typical partitions, brought over the common denominator (1-x)^2 (1-x^2)^2."""
    x = V("t1")
    num = 1 - x - x ** 2 + 2 * x ** 3 - x ** 5 + x ** 6
    return RationalForm(num, [(x, 2), (x ** 2, 2)], t_vars=("t1",))


def _first_mismatch(got, want, var: str) -> str:
    for d in range(got.degree_bound + 1):
        a, b = got.coefficient({var: d}), want.coefficient({var: d})
        if a != b:
            return f"{var}^{d}: {a} vs {b}"
    return ""


def check_row_generating_functions() -> tuple[bool, str]:
    """The displayed simplification of g does not equal its own defining sum:
    its x^2 coefficient is 4, while H(2,2;2) has 2 partitions. The row check
    against the sum form is reported alongside so the failure is attributable."""
    fails = _Failures()
    f = P_oracle_series((1, 1), 0, 1, 12)
    fails.expect(f == rational_expand(f_row_form(), 12), f"P(1,1;0,1) = {f}")
    g = P_oracle_series((2, 2), 1, 0, 10)
    sum_ok = g == rational_expand(g_row_sum_form(), 10)
    fails.expect(sum_ok, "P(2,2;1,0) differs from the unsimplified sum form")
    shown = rational_expand(g_row_form(), 10)
    fails.expect(g == shown, "P(2,2;1,0) vs displayed g, first difference at "
                 + _first_mismatch(g, shown, "t1")
                 + (" (matches the unsimplified sum form to degree 10)" if sum_ok else ""))
    return fails.summary("f to degree 12, g to degree 10")


def check_large_vs_oracle() -> tuple[bool, str]:
    fails = _Failures()
    count = 0
    for n in range(11):
        for lam in partitions(n):
            if is_large(lam, (1, 1)):
                count += 1
                a, b = m_large(lam, (1, 1)), m_oracle(lam, (1, 1))
                fails.expect(a == b, f"{tuple(lam)}: ct {a} vs oracle {b}")
    return fails.summary(f"{count} large partitions, |lam| <= 10")


def check_t1122() -> tuple[bool, str]:
    fails = _Failures()
    s = T_series((1, 1), 2, 2, 6)
    fails.expect(s == rational_expand(t1122_form(), 6), "T(1,1;2,2) differs from closed form")
    for D in range(7):
        for da in range(D + 1):
            for alpha in enumerate_hook((2, 0), da):
                for beta in enumerate_hook((2, 0), D - da):
                    lam = join_typical(TypicalSplit(alpha, beta, 2, 2))
                    want = 2 * (alpha.part(1) - alpha.part(2) + 1)
                    got = m_large(lam, (1, 1))
                    fails.expect(got == want, f"m_{tuple(lam)} = {got}, want {want}")
    return fails.summary("D <= 6")


def check_pprime11() -> tuple[bool, str]:
    fails = _Failures()
    s = Pprime_series((1, 1), 1, 1, 8)
    fails.expect(s == rational_expand(pprime11_form(), 8), f"P'(1,1;1,1) = {s}")
    fails.expect(m_prime((), (1, 1)) == 0, "m'_0 != 0")
    fails.expect(m_oracle((), (1, 1)) == 1, "m_0 != 1")
    for a in range(9):
        for b in range(9 - a):
            lam = (a + 1,) + (1,) * b
            want = a + 1 if b % 2 == 0 else a
            got = m_oracle(lam, (1, 1))
            fails.expect(got == want, f"m_{lam} = {got}, want {want}")
    return fails.summary("D = 8; hooks with a+b+1 <= 9")


def check_pbarprime11() -> tuple[bool, str]:
    fails = _Failures()
    s = Pbarprime_series((1, 1), 1, 1, 8)
    poly, rat = pbarprime11_form()
    expected = rational_expand(rat, 8)
    expected.poly = expected.poly + poly
    fails.expect(s == expected, f"P-bar'(1,1;1,1) = {s}")
    for a in range(9):
        for b in range(9 - a):
            lam = (a + 1,) + (1,) * b
            want = 4 * a + 2 if b > 0 else 2 * a + 2
            got = mbar_oracle(lam, (1, 1))
            fails.expect(got == want, f"m-bar_{lam} = {got}, want {want}")
    return fails.summary("D = 8; hooks with a+b+1 <= 9")


SPOT_CHECK_1122 = [((), ()), ((1,), ()), ((), (1,)), ((1,), (1,)), ((1, 1), (2,)), ((2,), (1, 1))]


def check_pbarprime1122() -> tuple[bool, str]:
    """The displayed (1,1;2,2) m-bar series is graded by S_alpha(t) S_beta(u)
    over typical lam; the HS-graded sum is rebuilt from it plus the H(1,1) part."""
    fails = _Failures()
    D = 6
    tbar = Tbar_series((1, 1), 2, 2, D)
    fails.expect(tbar == rational_expand(tbar1122_form(), D), f"T-bar(1,1;2,2) = {tbar}")

    # every lam in H(2,2) is either a hook or contains the 2x2 square, so
    # P-bar'(1,1;2,2) = sum_{hooks} c_lam HS_lam + prod(t_i + u_j) * (displayed form)
    # with c_lam the hook values checked in the (1,1;1,1) criterion
    T, U = Alphabet.of_variables(("t1", "t2")), Alphabet.of_variables(("u1", "u2"))
    rebuilt = LaurentPoly.const(0)
    for n in range(D + 1):
        for lam in enumerate_hook((1, 1), n):
            if not lam:
                c = 1
            else:
                a, b = lam[0] - 1, len(lam) - 1
                c = 4 * a + 2 if b else 2 * a + 2
            rebuilt = rebuilt + c * hook_schur_eval(lam, T, U)
    cross = ONE
    for t in ("t1", "t2"):
        for u in ("u1", "u2"):
            cross = cross * (V(t) + V(u))
    rebuilt = rebuilt + cross * rational_expand(tbar1122_form(), D - 4).poly
    hs_series = Pbarprime_series((1, 1), 2, 2, D)
    fails.expect(hs_series.poly == rebuilt, "HS-graded P-bar'(1,1;2,2) differs from the rebuilt closed form")

    for alpha, beta in SPOT_CHECK_1122:
        alpha, beta = Partition(alpha), Partition(beta)
        lam = join_typical(TypicalSplit(alpha, beta, 2, 2))
        c = 6 if beta.part(1) == beta.part(2) else 8
        want = c * (alpha.part(1) - alpha.part(2) + 1)
        got = mbar_oracle(lam, (1, 1))
        fails.expect(got == want, f"m-bar_{tuple(lam)} = {got}, want {want}")
    return fails.summary(f"to degree {D} (covers 4); {len(SPOT_CHECK_1122)} oracle spot checks")


def check_tables21_oracle() -> tuple[bool, str]:
    fails = _Failures()
    forms = tables21_forms()
    t_exp = rational_expand(forms["T(2,1;1,0)"], 1)
    u_exp = rational_expand(forms["T(2,1;0,1)"], 1)
    want_rect = t_exp.coefficient({})
    want_row = t_exp.coefficient({"t1": 1})
    want_col = u_exp.coefficient({"u1": 1})
    want_bar = rational_expand(forms["Tbar(2,1;1,0)"], 0).coefficient({})
    h = (2, 1)
    rect = (4, 4, 4, 4, 4)
    got_rect = m_oracle(rect, h)
    got_row = m_oracle((5, 4, 4, 4, 4), h)
    got_col = m_oracle((4, 4, 4, 4, 4, 1), h)
    got_bar = mbar_oracle(rect, h)
    fails.expect(got_rect == want_rect == 372, f"m_(4^5) = {got_rect}")
    fails.expect(got_row == want_row == 1545, f"m_(5,4^4) = {got_row}")
    fails.expect(got_col == want_col == 1152, f"m_(4^5,1) = {got_col}")
    fails.expect(got_bar == want_bar == 2697, f"m-bar_(4^5) = {got_bar}")
    fails.expect(got_bar == got_row + got_col, "add-one-box identity")
    return fails.summary(f"372, 1545, 1152, 2697 = {got_row} + {got_col}")


def check_ct_at_scale() -> tuple[bool, str]:
    v = m_large((4, 4, 4, 4, 4), (2, 1))
    return v == 372, f"m_(4^5) via exact division = {v}"


# property suites (criterion 10)

def prop_factorization() -> tuple[bool, str]:
    fails = _Failures()
    count = 0
    for a in range(4):
        for b in range(4):
            X = tuple(f"x{i}" for i in range(1, a + 1))
            Y = tuple(f"y{j}" for j in range(1, b + 1))
            A, B = Alphabet.of_variables(X), Alphabet.of_variables(Y)
            cross = ONE
            for x in X:
                for y in Y:
                    cross = cross * (V(x) + V(y))
            for n in range(a * b, 11):
                for lam in enumerate_hook((a, b), n):
                    if not is_typical(lam, a, b):
                        continue
                    count += 1
                    s = split_typical(lam, a, b)
                    lhs = hook_schur_eval(lam, A, B)
                    rhs = cross * schur_eval(s.alpha, A) * schur_eval(s.beta, B)
                    fails.expect(lhs == rhs, f"{tuple(lam)} in H'({a},{b})")
    return fails.summary(f"{count} typical partitions")


def prop_kronecker_character_sum() -> tuple[bool, str]:
    fails = _Failures()
    x, y, t, u = V("x"), V("y"), V("t"), V("u")
    lhs_A = Alphabet([x * t, y * u])
    lhs_B = Alphabet([x * u, y * t])
    XY = (Alphabet([x]), Alphabet([y]))
    TU = (Alphabet([t]), Alphabet([u]))
    for n in range(6):
        for lam in partitions(n):
            lhs = hook_schur_eval(lam, lhs_A, lhs_B)
            rhs = LaurentPoly.const(0)
            for mu in enumerate_hook((1, 1), n):
                hs_mu = hook_schur_eval(mu, *XY)
                for nu in enumerate_hook((1, 1), n):
                    g = kronecker(lam, mu, nu)
                    if g:
                        rhs = rhs + g * hs_mu * hook_schur_eval(nu, *TU)
            fails.expect(lhs == rhs, f"lam = {tuple(lam)}")
    return fails.summary("|lam| <= 5")


def prop_hook_cauchy() -> tuple[bool, str]:
    a, b, c, d = V("a"), V("b"), V("c"), V("d")
    D = 4
    kernel = truncated_kernel([(a * d, 1, 1), (b * c, 1, 1), (a * c, -1, -1), (b * d, -1, -1)], D, ("a", "b"))
    A, B, C, Dd = (Alphabet([v]) for v in (a, b, c, d))
    lhs = LaurentPoly.const(0)
    for n in range(D + 1):
        for lam in enumerate_hook((1, 1), n):
            lhs = lhs + hook_schur_eval(lam, A, B) * hook_schur_eval(lam, C, Dd)
    return lhs == kernel.poly, "singleton alphabets, D = 4"


def prop_typical_cauchy() -> tuple[bool, str]:
    a, b, c, d = V("a"), V("b"), V("c"), V("d")
    D = 4
    kernel = truncated_kernel([(a * c, -1, -1), (b * d, -1, -1)], D, ("c", "d"))
    rhs = (a + b) * kernel.poly
    A, B, C, Dd = (Alphabet([v]) for v in (a, b, c, d))
    lhs = LaurentPoly.const(0)
    for da in range(D + 1):
        for db in range(D + 1 - da):
            alpha, beta = Partition((da,)), Partition((db,))
            lam = join_typical(TypicalSplit(alpha, beta, 1, 1))
            lhs = lhs + hook_schur_eval(lam, A, B) * schur_eval(alpha, C) * schur_eval(beta, Dd)
    return lhs == rhs, "singleton alphabets, D = 4"


def prop_row_column_kronecker() -> tuple[bool, str]:
    fails = _Failures()
    n = 5
    for mu in partitions(n):
        for nu in partitions(n):
            g_row = kronecker((n,), mu, nu)
            g_col = kronecker((1,) * n, mu, nu)
            fails.expect(g_row == (mu == nu), f"gamma^(5)_{tuple(mu)},{tuple(nu)} = {g_row}")
            fails.expect(g_col == (mu == conjugate(nu)), f"gamma^(1^5)_{tuple(mu)},{tuple(nu)} = {g_col}")
    return fails.summary("n = 5")


def prop_support_bound() -> tuple[bool, str]:
    fails = _Failures()
    for n in range(1, 9):
        hook = enumerate_hook((1, 1), n)
        outside = [lam for lam in partitions(n) if not is_in_hook(lam, (2, 2))]
        for i, mu in enumerate(hook):
            for nu in hook[i:]:
                for lam in outside:
                    g = kronecker(lam, mu, nu)
                    fails.expect(g == 0, f"gamma^{tuple(lam)}_{tuple(mu)},{tuple(nu)} = {g}")
    return fails.summary("mu, nu in H(1,1;n), n <= 8")


def prop_rectangle_stability() -> tuple[bool, str]:
    fails = _Failures()
    count = 0
    for n in range(4, 13):
        for mu in enumerate_hook((2, 2), n):
            if not is_typical(mu, 2, 2):
                continue
            s = split_typical(mu, 2, 2)
            base = m_large(mu, (1, 1))
            for sa in range(0, (12 - n) // 2 + 1):
                for sb in range(0, (12 - n - 2 * sa) // 2 + 1):
                    if sa == sb == 0:
                        continue
                    alpha = Partition((s.alpha.part(1) + sa, s.alpha.part(2) + sa))
                    beta = Partition((s.beta.part(1) + sb, s.beta.part(2) + sb))
                    lam = join_typical(TypicalSplit(alpha, beta, 2, 2))
                    count += 1
                    fails.expect(m_large(lam, (1, 1)) == base, f"{tuple(lam)} vs {tuple(mu)}")
    return fails.summary(f"{count} shifted pairs, |lam| <= 12")


def prop_schur_orthonormal() -> tuple[bool, str]:
    fails = _Failures()
    X, Y = ("x1", "x2"), ("y1", "y2")
    A, B = Alphabet.of_variables(X), Alphabet.of_variables(Y)
    shapes = [lam for n in range(5) for lam in enumerate_hook((2, 0), n)]
    basis = [(mu, nu, schur_eval(mu, A) * schur_eval(nu, B)) for mu in shapes for nu in shapes]
    for i, (mu, nu, f) in enumerate(basis):
        for mu2, nu2, g in basis[i:]:
            ip = inner_product(f, g, X, Y)
            want = 1 if (mu, nu) == (mu2, nu2) else 0
            fails.expect(ip == want, f"<S_{tuple(mu)}S_{tuple(nu)}, S_{tuple(mu2)}S_{tuple(nu2)}> = {ip}")
    return fails.summary(f"{len(basis)} basis products")


def prop_upper_bound() -> tuple[bool, str]:
    fails = _Failures()
    sa = build_super_alphabets((1, 1))
    for n in range(9):
        for lam in partitions(n):
            bound = inner_product(hook_schur_eval(lam, sa.Z0, sa.Z1), ONE, sa.X, sa.Y)
            m = m_oracle(lam, (1, 1))
            fails.expect(m <= bound, f"m_{tuple(lam)} = {m} > {bound}")
    return fails.summary("|lam| <= 8 at (1,1)")


PROPERTIES: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
    ("factorization theorem", prop_factorization),
    ("Kronecker character-sum identity", prop_kronecker_character_sum),
    ("hook Schur Cauchy kernel", prop_hook_cauchy),
    ("typical Cauchy kernel", prop_typical_cauchy),
    ("gamma^(n) and gamma^(1^n) rule", prop_row_column_kronecker),
    ("Kronecker support bound", prop_support_bound),
    ("rectangle stability", prop_rectangle_stability),
    ("Schur orthonormality", prop_schur_orthonormal),
    ("upper bound by <HS, 1>", prop_upper_bound),
]


def check_properties() -> tuple[bool, str]:
    bad = []
    for name, fn in PROPERTIES:
        ok, detail = fn()
        if not ok:
            bad.append(f"{name}: {detail}")
    if bad:
        return False, " | ".join(bad)
    return True, f"{len(PROPERTIES)} property suites"


def check_functional_equation() -> tuple[bool, str]:
    fails = _Failures()
    rep = functional_equation_check(t1122_form(), (1, 1), 2, 2)
    fails.expect(rep.holds and rep.expected_sign == -1, f"T(1,1;2,2): {rep}")
    f_rep = functional_equation_check(f_row_form(), (1, 1), 0, 1)
    g_rep = functional_equation_check(g_row_form(), (2, 2), 1, 0)
    fails.expect(not f_rep.holds, "f satisfies the hook-weighted equation")
    fails.expect(not g_rep.holds, "g satisfies the hook-weighted equation")
    fails.expect(find_functional_equation(f_row_form()) is None, "f satisfies some h(1/x) = +-x^a h(x)")
    fails.expect(find_functional_equation(g_row_form()) is None, "g satisfies some h(1/x) = +-x^a h(x)")
    fails.expect(find_functional_equation(g_row_sum_form()) is None,
                 "corrected g satisfies some h(1/x) = +-x^a h(x)")
    return fails.summary("true with sign -1 on T(1,1;2,2); false on f and g")


# extended (2,1) series

def _tables21_series_check(kind: str, D: int) -> tuple[bool, str]:
    fn = {"T": T_series, "Tbar": Tbar_series}[kind.split("(")[0]]
    a, b = (1, 0) if kind.endswith("1,0)") else (0, 1)
    got = fn((2, 1), a, b, D)
    want = rational_expand(tables21_forms()[kind], D)
    return got == want, f"{kind} to degree {D}"


def check_tables21_series_short() -> tuple[bool, str]:
    fails = _Failures()
    for kind in tables21_forms():
        ok, detail = _tables21_series_check(kind, 1)
        fails.expect(ok, detail)
    return fails.summary("all four tables to degree 1 via constant terms")


def check_tables21_series_extended() -> tuple[bool, str]:
    fails = _Failures()
    for kind in tables21_forms():
        ok, detail = _tables21_series_check(kind, 6)
        fails.expect(ok, detail)
    return fails.summary("all four tables to degree 6 via constant terms")


@dataclass(frozen=True)
class Criterion:
    number: int | None
    name: str
    suite: str
    limit: float
    fn: Callable[[], tuple[bool, str]]

    def run(self) -> CheckResult:
        start = time.perf_counter()
        try:
            ok, detail = self.fn()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        elapsed = time.perf_counter() - start
        if ok and elapsed > self.limit:
            ok, detail = False, f"{detail}; exceeded {self.limit:g} s"
        label = f"[{self.number}] {self.name}" if self.number else self.name
        return CheckResult(label, ok, detail, elapsed, self.limit)


CRITERIA: list[Criterion] = [
    Criterion(1, "row/column multiplicities", "quick", 30, check_rows_columns),
    Criterion(2, "non-functional-equation generating functions f, g", "quick", 60, check_row_generating_functions),
    Criterion(3, "constant term = character sum on large partitions", "quick", 120, check_large_vs_oracle),
    Criterion(4, "T(1,1;2,2) closed form", "quick", 120, check_t1122),
    Criterion(5, "P'(1,1;1,1) closed form", "quick", 120, check_pprime11),
    Criterion(6, "P-bar'(1,1;1,1) closed form", "quick", 120, check_pbarprime11),
    Criterion(7, "m-bar series for (1,1;2,2)", "quick", 180, check_pbarprime1122),
    Criterion(8, "(2,1) table values via characters", "paper", 900, check_tables21_oracle),
    Criterion(9, "m_(4^5) at (2,1) via constant term", "paper", 900, check_ct_at_scale),
    Criterion(10, "property suites", "quick", 300, check_properties),
    Criterion(11, "functional-equation checker", "quick", 1, check_functional_equation),
    Criterion(None, "(2,1) series to degree 1 via constant terms", "paper", 900, check_tables21_series_short),
    Criterion(None, "(2,1) series to degree 6 via constant terms", "full", 1800, check_tables21_series_extended),
]

SUITES = ("quick", "paper", "full")


def criteria_for(suite: str) -> list[Criterion]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    allowed = SUITES[: SUITES.index(suite) + 1]
    return [c for c in CRITERIA if c.suite in allowed]


def run_suite(suite: str, echo: Callable[[str], None] | None = None) -> list[CheckResult]:
    results = []
    for c in criteria_for(suite):
        r = c.run()
        results.append(r)
        if echo:
            echo(r.line())
    return results
