"""Mod-2 sieve and square-value test for Salem dynamical degrees on Enriques surfaces.

A Salem polynomial passes the mod-2 sieve when its reduction factors into
x + 1, F3, F5, F9 and the split halves of F7, F15, with each half of F7
(and of F15) appearing equally often.  Degree-10 polynomials must in
addition have |s(1)| and |s(-1)| perfect squares.
"""

from __future__ import annotations

import enum
import io
import json
import math
from collections import Counter
from dataclasses import dataclass

from .arith import IntPoly
from .gf2 import (
    F1, F3, F5, F9, F7_1, F7_2, F15_1, F15_2,
    F2Factorization, f2_factor, reduce_mod2,
)
from .salem import SalemPolynomial, truncated_lambda
from .spectra import order_divisibility

__all__ = [
    "Label",
    "GMStatus",
    "Mod2Result",
    "Verdict",
    "SieveReport",
    "DOLGACHEV",
    "mod2_sieve",
    "gm_square_test",
    "classify_one",
    "classify",
    "report",
    "f_basis_string",
]

DOLGACHEV = IntPoly([1, -1, -2, -1, 1])

ALPHABET = (F1, F3, F5, F9, F7_1, F7_2, F15_1, F15_2)
BASIS_INDICES = (1, 3, 5, 7, 9, 15)


class Label(enum.Enum):
    CANDIDATE = "candidate"
    IMPOSSIBLE_MOD2 = "impossible_mod2"
    IMPOSSIBLE_GM = "impossible_gm"
    IMPOSSIBLE_BOTH = "impossible_both"

    @property
    def mark(self) -> str:
        """The label as printed in the appendix table."""
        if self is Label.CANDIDATE:
            return "possible"
        if self is Label.IMPOSSIBLE_MOD2:
            return "impossible"
        return "impossible (*)"


class GMStatus(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class Mod2Result:
    passed: bool
    factorization: F2Factorization
    exponents: tuple[int, ...] | None  # (e1, e3, e5, e7, e9, e15) on pass
    evidence: str  # why it failed; empty on pass


def f_basis_string(exponents) -> str:
    """E.g. (4, 1, 1, 0, 0, 0) -> 'F5*F3*F1^4'."""
    parts = []
    for m, e in sorted(zip(BASIS_INDICES, exponents), reverse=True):
        if e:
            parts.append(f"F{m}" if e == 1 else f"F{m}^{e}")
    return "*".join(parts) if parts else "1"


def mod2_sieve(s: SalemPolynomial | IntPoly) -> Mod2Result:
    p = s.poly if isinstance(s, SalemPolynomial) else s
    if p.degree > 10:
        raise ValueError(f"degree {p.degree} > 10 lies outside the rank-10 setting")
    fact = f2_factor(reduce_mod2(p))
    strangers = [g for g, _ in fact if g not in ALPHABET]
    if strangers:
        return Mod2Result(False, fact, None, "factor " + ", ".join(f"({g})" for g in strangers) + " not allowed")
    mult = fact.multiplicity
    unpaired = []
    for a, b, name in ((F7_1, F7_2, "F7"), (F15_1, F15_2, "F15")):
        if mult(a) != mult(b):
            unpaired.append(f"{name} halves with multiplicities {mult(a)} != {mult(b)}")
    if unpaired:
        return Mod2Result(False, fact, None, "; ".join(unpaired))
    exps = (mult(F1), mult(F3), mult(F5), mult(F7_1), mult(F9), mult(F15_1))
    return Mod2Result(True, fact, exps, "")


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def gm_square_test(s: SalemPolynomial | IntPoly) -> GMStatus:
    """|s(1)| and |s(-1)| squares; only meaningful at degree 10, where s is the
    whole characteristic polynomial on Num(S)."""
    p = s.poly if isinstance(s, SalemPolynomial) else s
    if p.degree != 10:
        return GMStatus.NOT_APPLICABLE
    ok = _is_square(abs(p(1))) and _is_square(abs(p(-1)))
    return GMStatus.PASS if ok else GMStatus.FAIL


@dataclass(frozen=True)
class Verdict:
    subject: SalemPolynomial
    mod2: Mod2Result
    gm_status: GMStatus
    label: Label
    ord_divisor: int | None

    @property
    def mod2_pass(self) -> bool:
        return self.mod2.passed

    @property
    def is_candidate(self) -> bool:
        return self.label is Label.CANDIDATE

    def record(self, index: int) -> dict:
        p = self.subject.poly
        return {
            "index": index,
            "degree": p.degree,
            "lambda": truncated_lambda(self.subject),
            "coefficients": list(p.coeffs),
            "mod2_factorization": str(self.mod2.factorization),
            "f_basis": f_basis_string(self.mod2.exponents) if self.mod2.passed else None,
            "mod2_evidence": self.mod2.evidence or None,
            "s_at_1": p(1),
            "s_at_minus_1": p(-1),
            "square_test": self.gm_status.value,
            "verdict": self.label.mark,
            "ord_divisor": self.ord_divisor,
        }


def classify_one(s: SalemPolynomial) -> Verdict:
    m = mod2_sieve(s)
    gm = gm_square_test(s)
    gm_fail = gm is GMStatus.FAIL
    if m.passed:
        label = Label.IMPOSSIBLE_GM if gm_fail else Label.CANDIDATE
        divisor = order_divisibility(m.factorization)
    else:
        label = Label.IMPOSSIBLE_BOTH if gm_fail else Label.IMPOSSIBLE_MOD2
        divisor = None
    return Verdict(s, m, gm, label, divisor)


@dataclass(frozen=True)
class SieveReport:
    verdicts: tuple[Verdict, ...]

    @property
    def totals(self) -> Counter:
        return Counter(v.label for v in self.verdicts)

    @property
    def survivors(self) -> tuple[Verdict, ...]:
        return tuple(v for v in self.verdicts if v.is_candidate)

    @property
    def impossible(self) -> tuple[Verdict, ...]:
        return tuple(v for v in self.verdicts if not v.is_candidate)

    @property
    def smallest_candidate(self) -> SalemPolynomial | None:
        return self.survivors[0].subject if self.survivors else None

    def candidates_excluding(self, realized: IntPoly = DOLGACHEV) -> tuple[Verdict, ...]:
        """Survivors other than an already realized dynamical degree."""
        return tuple(v for v in self.survivors if v.subject.poly != realized)

    def summary_lines(self) -> list[str]:
        t = self.totals
        lines = [
            f"{len(self.impossible)} impossible / {len(self.survivors)} possible / "
            f"{len(self.candidates_excluding())} candidates excluding the realized bound",
            f"  impossible by mod-2 only: {t[Label.IMPOSSIBLE_MOD2]}",
            f"  impossible by square test only: {t[Label.IMPOSSIBLE_GM]}",
            f"  impossible by both: {t[Label.IMPOSSIBLE_BOTH]}",
        ]
        s = self.smallest_candidate
        if s is not None:
            lines.append(f"smallest candidate: lambda = {truncated_lambda(s)}  {' '.join(map(str, s.coeffs))}")
        else:
            lines.append("smallest candidate: none")
        lines.append("note: the square test is applied to degree-10 entries only")
        return lines


def classify(entries) -> SieveReport:
    """Classify certified Salem polynomials, kept in the given (lambda-ascending) order."""
    return SieveReport(tuple(classify_one(s) for s in entries))


TSV_COLUMNS = (
    "index", "degree", "lambda", "coefficients", "mod2_factorization",
    "f_basis", "mod2_evidence", "square_test", "verdict", "ord_divisor",
)


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return " ".join(map(str, v))
    return str(v)


def report(r: SieveReport, fmt: str = "text") -> str:
    records = [v.record(i) for i, v in enumerate(r.verdicts, 1)]
    if fmt == "json":
        return json.dumps(records, indent=1, ensure_ascii=False) + "\n"
    if fmt == "tsv":
        out = io.StringIO()
        out.write("\t".join(TSV_COLUMNS) + "\n")
        for rec in records:
            out.write("\t".join(_cell(rec[c]) for c in TSV_COLUMNS) + "\n")
        return out.getvalue()
    if fmt == "text":
        out = io.StringIO()
        for rec in records:
            mod2 = rec["f_basis"] or f"{rec['mod2_factorization']}  [{rec['mod2_evidence']}]"
            div = f"  ord(f_N) divisible by {rec['ord_divisor']}" if rec["ord_divisor"] else ""
            out.write(
                f"{rec['index']:>4}  deg {rec['degree']:>2}  {rec['lambda']}  "
                f"{_cell(rec['coefficients'])}\n      mod 2: {mod2}\n"
                f"      |s(1)| = {abs(rec['s_at_1'])}, |s(-1)| = {abs(rec['s_at_minus_1'])}"
                f"  square test: {rec['square_test']}\n      {rec['verdict']}{div}\n"
            )
        out.write("\n" + "\n".join(r.summary_lines()) + "\n")
        return out.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
