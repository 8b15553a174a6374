"""Named identity suites; each returns a list of ``Check`` results."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .exactpoly import ZERO, Q, exact_div, reverse
from .heckedeg import generic_degree_A, generic_degree_B, generic_degree_D, poincare
from .strata import E_stratum, Ntilde_stratum, enumerate_subgroups
from .typesum import C_tau, E_total, H_tau, N_total, dual_type, enumerate_types
from .weylrep import deg_A, deg_B, deg_D, irr_A, irr_B, irr_D

__all__ = [
    "Check",
    "DEFAULT_XI",
    "suite_hecke",
    "suite_duality",
    "suite_strata",
    "suite_ctau",
    "suite_brute",
    "suite_quasi",
    "suite_frobenius",
]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    anchor: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status}  {self.name}"
        if self.detail:
            out += f"  ({self.detail})"
        if self.anchor:
            out += f"  [{self.anchor}]"
        return out


def _family_labels(family: str, m: int):
    if family == "A":
        return [(lab, generic_degree_A(lab), deg_A(lab)) for lab in irr_A(m)]
    if family == "B":
        return [(lab, generic_degree_B(lab), deg_B(lab)) for lab in irr_B(m)]
    return [(lab, generic_degree_D(lab), deg_D(lab)) for lab in irr_D(m)]


def hecke_identities(family: str, m: int) -> tuple[bool, bool]:
    """``(d(1) == deg for every label, sum d * deg == Poincare polynomial)``."""
    rows = _family_labels(family, m)
    at_one = all(d.eval(1) == deg for _, d, deg in rows)
    den = lcm(*(d.den for _, d, _ in rows))
    total = ZERO
    for _, d, deg in rows:
        total = total + d.num * (deg * (den // d.den))
    return at_one, total == poincare((family, m)) * den


def suite_hecke(max_rank: int = 5) -> list[Check]:
    out = []
    ranges = {"A": range(1, max_rank + 1), "B": range(0, max_rank + 1), "D": range(2, max_rank + 1)}
    for fam, ms in ranges.items():
        for m in ms:
            at_one, summed = hecke_identities(fam, m)
            out.append(Check(f"{fam}{m}: d(1) = deg", at_one, anchor="generic degree specializes to degree"))
            out.append(Check(f"{fam}{m}: sum d*deg = P", summed, anchor="regular module decomposition"))
    return out


def suite_duality(n: int) -> list[Check]:
    out = []
    N = n * (2 * n + 1)
    for t in enumerate_types(n):
        ok = reverse(H_tau(t), N) == H_tau(dual_type(t)) * (-1) ** n
        ok = ok and C_tau(t) == C_tau(dual_type(t))
        out.append(Check(f"n={n} {t}", ok, anchor="H(1/q) q^N = (-1)^n H_dual(q)"))
    return out


def suite_strata(n: int, g: int) -> list[Check]:
    subs = enumerate_subgroups(n)
    total = ZERO
    out = []
    for h in subs:
        nt = Ntilde_stratum(h, g, subs)
        try:
            exact_div(nt, (Q - 1) ** n)
            ok = True
        except ArithmeticError:
            ok = False
        out.append(Check(f"n={n} g={g} {h.descriptor()}: (q-1)^n | N~", ok, anchor="free torus action"))
        if ok:
            total = total + E_stratum(h, g, subs)
    out.append(
        Check(f"n={n} g={g}: sum of strata = E_total", total == E_total(n, g), anchor="additivity over strata")
    )
    return out


DEFAULT_XI = {
    1: [(3, (1,), 7), (3, (1,), 13), (5, (2,), 11)],
    2: [(5, (1, 2), 11), (7, (1, 2), 29)],
    3: [(9, (1, 2, 4), 19), (11, (1, 2, 4), 23)],
}


def suite_ctau(n: int, specs=None) -> list[Check]:
    from .oracle.counting import XiSpec
    from .oracle.ctau import ctau_cyclotomic, ctau_orbit_sum

    specs = specs if specs is not None else DEFAULT_XI.get(n, [])
    out = []
    for m, exps, q in specs:
        spec = XiSpec(m, tuple(exps), q)
        for twist in sorted({1, m - 1}):
            bad = []
            types = enumerate_types(n)
            for t in types:
                c = C_tau(t)
                if ctau_cyclotomic(t, spec, twist) != c or ctau_orbit_sum(t, spec, twist) != c:
                    bad.append(str(t))
            detail = f"{len(types)} types" if not bad else "mismatch: " + "; ".join(bad[:3])
            out.append(
                Check(f"n={n} xi=(m={m}, {exps}, q={q}) embedding {twist}", not bad, detail, "C_tau independent of xi")
            )
    return out


def suite_brute(q: int, m: int, g: int, exponent: int = 1) -> list[Check]:
    from .oracle.counting import brute_force_N1

    count = brute_force_N1(q, m, g, exponent)
    poly = N_total(1, g)(q)
    return [Check(f"SL(2,{q}) m={m} g={g}", count == poly, f"{count} = {poly}" if count == poly else f"{count} != {poly}")]


def suite_quasi(q: int, g: int) -> list[Check]:
    from .oracle.counting import quasi_polynomial_check

    ok, count, formula = quasi_polynomial_check(q, g)
    rel = "=" if ok else "!="
    return [Check(f"SL(2,{q}) xi=diag(i,-i) g={g}", ok, f"{count} {rel} {formula}", "quasi-polynomial count")]


def suite_frobenius(gs=(1, 2)) -> list[Check]:
    from .oracle.counting import commutator_count, frobenius_count
    from .oracle.groups import q8_character_table, quaternion_group, s3, s3_character_table

    out = []
    for G, chartab in ((s3(), s3_character_table), (quaternion_group(), q8_character_table)):
        table = chartab(G)
        for g in gs:
            ok = all(frobenius_count(G, table, z, g) == commutator_count(G, z, g) for z in range(G.order))
            out.append(Check(f"{G.name} g={g}: Frobenius sum = enumeration (all z)", ok, anchor="Frobenius formula"))
    return out
