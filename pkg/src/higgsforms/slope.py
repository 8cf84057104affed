"""Degree / rank / slope calculus for diagonal subbundles of ``E = sum_p Lambda^(p,0)``.

Degrees are exact rational multiples of ``d = deg Lambda^(1,0)(X)``.  Note the
sign flip: ``d = -deg(X)``.  The verdict engine takes the *sign of deg(X)* as
input and converts internally.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, List, Optional, Tuple

__all__ = [
    "BundleSelector",
    "SlopeReport",
    "Verdict",
    "chern_coeff",
    "slope",
    "slope_diff",
    "slope_diff_direct",
    "is_higgs_invariant",
    "enumerate_invariant",
    "stability_preclusion",
    "trivial_action_test",
    "bigthm_verdict",
    "parse_selector",
]


@dataclass(frozen=True)
class BundleSelector:
    """The subbundle ``sum_s Lambda^(p_s,0)`` named by its degrees."""

    n: int
    degrees: Tuple[int, ...]

    def __post_init__(self):
        degs = tuple(self.degrees)
        if not degs:
            raise ValueError("selector must be nonempty")
        if any(not 0 <= p <= self.n for p in degs):
            raise ValueError(f"degrees must lie in 0..{self.n}: {degs}")
        if any(a >= b for a, b in zip(degs, degs[1:])):
            raise ValueError(f"degrees must be strictly increasing: {degs}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def of(cls, n: int, degrees: Iterable[int]) -> "BundleSelector":
        return cls(n, tuple(sorted(set(degrees))))

    @classmethod
    def filtration(cls, n: int, a: int) -> "BundleSelector":
        """``E^a = sum_{p >= a} Lambda^(p,0)``."""
        return cls(n, tuple(range(a, n + 1)))

    @classmethod
    def even(cls, n: int) -> "BundleSelector":
        return cls(n, tuple(range(0, n + 1, 2)))

    @classmethod
    def odd(cls, n: int) -> "BundleSelector":
        return cls(n, tuple(range(1, n + 1, 2)))

    @property
    def z(self) -> int:
        return len(self.degrees)

    @property
    def rank(self) -> int:
        return sum(comb(self.n, p) for p in self.degrees)

    def issubset(self, other: "BundleSelector") -> bool:
        return self.n == other.n and set(self.degrees) <= set(other.degrees)

    def __and__(self, other: "BundleSelector") -> Optional["BundleSelector"]:
        common = sorted(set(self.degrees) & set(other.degrees))
        return BundleSelector(self.n, tuple(common)) if common else None

    def __iter__(self):
        return iter(self.degrees)


@dataclass(frozen=True)
class SlopeReport:
    degree_coeff: Fraction
    rank: int
    slope_coeff: Fraction

    def to_json(self) -> dict:
        return {"degree_coeff": _q(self.degree_coeff), "rank": self.rank,
                "slope_coeff": _q(self.slope_coeff)}


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def chern_coeff(n: int, p: int) -> int:
    """``c_1(Lambda^(p,0)) / c_1(Lambda^(1,0)) = binom(n-1, p-1)``, read as 0 at ``p = 0``."""
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    return 0 if p == 0 else comb(n - 1, p - 1)


def slope(sel: BundleSelector) -> SlopeReport:
    deg = Fraction(sum(chern_coeff(sel.n, p) for p in sel.degrees))
    rk = sel.rank
    return SlopeReport(deg, rk, deg / rk)


def slope_diff_direct(P: BundleSelector, Q: BundleSelector) -> Fraction:
    """``mu(P) - mu(Q)`` in units of ``d`` by plain subtraction of binomial sums."""
    return slope(P).slope_coeff - slope(Q).slope_coeff


def _pair_term(n: int, r: int, q: int) -> Fraction:
    # binom(n-1,r-1) binom(n,q) - binom(n-1,q-1) binom(n,r), split by which index is 0
    if r >= 1 and q >= 1:
        return Fraction(comb(n - 1, r - 1) * comb(n - 1, q - 1) * n * (r - q), r * q)
    if r == 0:
        return Fraction(-comb(n - 1, q - 1))
    return Fraction(comb(n - 1, r - 1))


def slope_diff(P: BundleSelector, Q: BundleSelector) -> Fraction:
    """``mu(P) - mu(Q)`` for ``Q`` inside ``P``, via the pairwise closed form.

    With ``R = P \\ Q`` the difference is ``sum_{r in R, q in Q} t(r, q) /
    (rk P rk Q)`` where ``t(r, q) = binom(n-1,r-1) binom(n-1,q-1) n (r-q)/(rq)``
    when both indices are positive; the degree-0 cases are written out.
    """
    if not Q.issubset(P):
        raise ValueError(f"{Q.degrees} is not contained in {P.degrees}")
    n = P.n
    R = [p for p in P.degrees if p not in Q.degrees]
    num = sum((_pair_term(n, r, q) for r in R for q in Q.degrees), Fraction(0))
    return num / (P.rank * Q.rank)


def is_higgs_invariant(sel: BundleSelector, k: int) -> bool:
    """Closed under the degree shift ``p -> p + k - 1`` (whenever that stays <= n)."""
    degs = set(sel.degrees)
    return all(p + k - 1 > sel.n or p + k - 1 in degs for p in degs)


def enumerate_invariant(n: int, k: int) -> List[BundleSelector]:
    """All nonempty shift-closed selectors, by a scan over the ``2^(n+1)`` subsets."""
    if n > 12:
        raise ValueError("enumeration is limited to n <= 12")
    out = []
    for mask in range(1, 1 << (n + 1)):
        sel = BundleSelector(n, tuple(p for p in range(n + 1) if (mask >> p) & 1))
        if is_higgs_invariant(sel, k):
            out.append(sel)
    return out


def stability_preclusion(sel: BundleSelector, k: int) -> bool:
    """True when the selector splits nontrivially into even and odd Higgs parts."""
    if not is_higgs_invariant(sel, k):
        raise ValueError("selector is not Higgs-invariant")
    parities = {p % 2 for p in sel.degrees}
    return len(parities) == 2


def trivial_action_test(n: int, k: int, sel: BundleSelector) -> bool:
    """Whether theta vanishes on the subbundle (every degree >= n - k + 2)."""
    return min(sel.degrees) >= n - k + 2


@dataclass(frozen=True)
class Verdict:
    tag: str
    satisfied: Tuple[str, ...]
    facts: dict = field(default_factory=dict)

    @property
    def obstructed(self) -> bool:
        return self.tag != "NoObstructionFound"

    def to_json(self) -> dict:
        return {"verdict": self.tag, "satisfied_cases": list(self.satisfied), "facts": self.facts}


_CASE_TAGS = {"i": "ObstructedCaseI", "ii": "ObstructedCaseII", "iii": "ObstructedCaseIII"}


def bigthm_verdict(n: int, k: int, sign_degX: int, sel: BundleSelector,
                   contains_omega: Optional[bool] = None) -> Verdict:
    """Decide which HHYM obstruction case applies to the subbundle ``sel``.

    ``sign_degX`` is the sign of ``deg(X)``; ``d = deg Lambda^(1,0) = -deg(X)``.
    ``contains_omega`` defaults to ``k in sel`` (omega is a section of the
    subbundle exactly when its degree is selected).  Cases are tested in the
    order i, ii, iii; all satisfied cases are recorded.
    """
    if k % 2 == 0 or k <= 1:
        raise ValueError(f"k must be odd and > 1, got {k}")
    if k > n:
        raise ValueError(f"k must not exceed n = {n}")
    if sign_degX not in (-1, 0, 1):
        raise ValueError("sign_degX must be -1, 0 or +1")
    if sel.n != n:
        raise ValueError("selector dimension mismatch")
    if sel.z < 2:
        raise ValueError("the obstruction needs at least two summands (z >= 2)")
    if not is_higgs_invariant(sel, k):
        raise ValueError(f"selector {sel.degrees} is not Higgs-invariant for k = {k}")
    omega_in = k in sel.degrees
    if contains_omega is None:
        contains_omega = omega_in
    elif contains_omega != omega_in:
        raise ValueError(f"contains_omega={contains_omega} but degree {k} "
                         f"{'is' if omega_in else 'is not'} selected")

    p1 = sel.degrees[0]
    low_degree = p1 <= n - k + 1
    big_k = 2 * k >= n + 2
    satisfied = []
    if sign_degX < 0:
        satisfied.append("i")
    if sign_degX == 0 and low_degree:
        satisfied.append("ii")
    if big_k and low_degree and contains_omega:
        satisfied.append("iii")
    facts = {
        "n": n, "k": k, "sign_degX": sign_degX, "sign_d": -sign_degX,
        "selector": list(sel.degrees), "p1": p1,
        "p1_le_n_minus_k_plus_1": low_degree, "k_ge_n_over_2_plus_1": big_k,
        "contains_omega": contains_omega,
        "theta_acts_trivially": trivial_action_test(n, k, sel),
    }
    tag = _CASE_TAGS[satisfied[0]] if satisfied else "NoObstructionFound"
    return Verdict(tag, tuple(_CASE_TAGS[c] for c in satisfied), facts)


def parse_selector(n: int, text: str) -> BundleSelector:
    """Parse ``"0,2,3"``, ``"even"``, ``"odd"`` or ``"E<a>"`` (e.g. ``"E2"``)."""
    t = text.strip()
    if t == "even":
        return BundleSelector.even(n)
    if t == "odd":
        return BundleSelector.odd(n)
    if t[:1] in ("E", "e") and t[1:].isdigit():
        a = int(t[1:])
        if not 0 <= a <= n:
            raise ValueError(f"filtration index {a} out of range 0..{n}")
        return BundleSelector.filtration(n, a)
    try:
        degs = [int(x) for x in t.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"malformed selector {text!r}") from None
    if len(set(degs)) != len(degs):
        raise ValueError(f"repeated degree in selector {text!r}")
    return BundleSelector.of(n, degs)
