"""Randomized and exhaustive identity suites shared by the CLI and the tests.

Every check is exact; a failing check carries the first counterexample it
met.  All randomness flows from one seeded ``random.Random`` so runs are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional

from .curvature import (PointFrameData, assemble_F, bochner_from_curvature, bochner_value,
                        crv_operator, evaluate, form_to_vector, hhym_bookkeeping, hhym_flat,
                        higgs_frame_data, holomorphic_basis, iLambda_F, iLambda_F_from_curvature)
from .exterior import Form, FrameVector, euler_degree, interior
from .higgs import (HiggsField, T_operator, adjoint_kernel_brute_force, adjoint_kernel_test,
                    commutator, f_table, F_table, kernel_brute_force, kernel_test,
                    simple_T_expansion, T_quadratic_form, weighted_trace)
from .metric import (MetricSpec, adjoint_interior, adjoint_wedge, flat, hodge_star, inner,
                     star_square_sign, volume_form)
from .scalar import ONE, ZERO, Scalar
from .torus import (TorusModel, CharacterSection, TensorWord, gigante_girbau,
                    gigante_girbau_operator, higgs_nakano_check, kahler_adjoint_check,
                    kernel_inclusion_check, lefschetz_check, type_shift_audit)

__all__ = ["CheckResult", "SUITES", "run_suite", "default_k", "rand_scalar", "rand_form",
           "rand_freq"]

MAX_EXHAUSTIVE_N = 6
MAX_NAKANO_N = 3


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    witness: Optional[dict] = None


def default_k(n: int) -> int:
    return n if n % 2 else n - 1


def rand_scalar(rng: random.Random, span: int = 3) -> Scalar:
    return Scalar(Fraction(rng.randint(-span, span), rng.randint(1, 3)),
                  Fraction(rng.randint(-span, span), rng.randint(1, 3)))


def rand_form(rng: random.Random, n: int, p: int, q: int = 0, density: float = 0.5) -> Form:
    """Random nonzero form of pure type ``(p, q)``."""
    terms = {}
    holos = [sum(1 << (i - 1) for i in c) for c in combinations(range(1, n + 1), p)]
    antis = [sum(1 << (i - 1) for i in c) for c in combinations(range(1, n + 1), q)]
    for h in holos:
        for a in antis:
            if rng.random() < density:
                terms[h | (a << n)] = rand_scalar(rng)
    if not any(terms.values()):
        terms[rng.choice(holos) | (rng.choice(antis) << n)] = ONE
    return Form(n, terms)


def rand_freq(rng: random.Random, n: int) -> List[Scalar]:
    return [rand_scalar(rng, 4) for _ in range(n)]


def _words(n: int, holo_only: bool = False):
    top = 1 << n if holo_only else 1 << 2 * n
    return [Form(n, {m: ONE}) for m in range(top)]


def _total_degrees(f: Form) -> set:
    return {p + q for p, q in f.grades()}


def _natural_metric(rng: random.Random, n: int) -> MetricSpec:
    return MetricSpec.natural({p: Fraction(rng.randint(1, 5), rng.randint(1, 3)) for p in range(n + 1)})


# -- suites ------------------------------------------------------------------

def _exterior(n, k, rng, trials, out):
    ok, wit = True, None
    for _ in range(trials):
        p1, p2, p3 = (rng.randint(0, n) for _ in range(3))
        a, b, c = rand_form(rng, n, p1, rng.randint(0, n)), rand_form(rng, n, p2), rand_form(rng, n, 0, p3)
        if (a ^ b) ^ c != a ^ (b ^ c):
            ok, wit = False, {"a": str(a), "b": str(b), "c": str(c)}
            break
    out.append(("wedge associativity", ok, wit))

    ok, wit = True, None
    for _ in range(trials):
        pa, qa, pb, qb = (rng.randint(0, n) for _ in range(4))
        a, b = rand_form(rng, n, pa, qa), rand_form(rng, n, pb, qb)
        sign = -1 if ((pa + qa) * (pb + qb)) % 2 else 1
        if a ^ b != (b ^ a).scale(sign):
            ok, wit = False, {"a": str(a), "b": str(b)}
            break
    out.append(("graded commutativity", ok, wit))

    ok, wit = True, None
    for _ in range(trials):
        pa, qa = rng.randint(0, n), rng.randint(0, n)
        a, b = rand_form(rng, n, pa, qa), rand_form(rng, n, rng.randint(0, n), rng.randint(0, n))
        v = FrameVector(n, {rng.randrange(2 * n): rand_scalar(rng)})
        lhs = interior(v, a ^ b)
        rhs = (interior(v, a) ^ b) + (a ^ interior(v, b)).scale(-1 if (pa + qa) % 2 else 1)
        if lhs != rhs:
            ok, wit = False, {"a": str(a), "b": str(b)}
            break
    out.append(("interior anti-derivation", ok, wit))

    ok, wit = True, None
    for _ in range(trials):
        p = rng.randint(0, n)
        w = rand_form(rng, n, p)
        if euler_degree(w) != w.scale(p):
            ok, wit = False, {"omega": str(w), "k": p}
            break
    out.append(("contraction identity sum dz_j ^ i(Z_j) w = k w", ok, wit))

    ok, wit = True, None
    for _ in range(trials):
        a = rand_form(rng, n, rng.randint(0, n), rng.randint(0, n))
        b = rand_form(rng, n, rng.randint(0, n), rng.randint(0, n))
        if a.conj().conj() != a or (a ^ b).conj() != (a.conj() ^ b.conj()):
            ok, wit = False, {"a": str(a), "b": str(b)}
            break
    out.append(("conjugation is a real algebra involution", ok, wit))


def _metric(n, k, rng, trials, out):
    for label, mk in (("standard", lambda: None), ("natural", lambda: _natural_metric(rng, n))):
        ok, wit = True, None
        for _ in range(trials):
            h = mk()
            p = rng.randint(0, n)
            w = rand_form(rng, n, p)
            f = rand_form(rng, n, rng.randint(0, n))
            g = rand_form(rng, n, rng.randint(0, n))
            if inner(h, w ^ f, g) != inner(h, f, adjoint_wedge(w, g, h)):
                ok, wit = False, {"w": str(w), "f": str(f), "g": str(g)}
                break
            v = FrameVector.holomorphic([rand_scalar(rng) for _ in range(n)])
            if inner(h, interior(v, f), g) != inner(h, f, adjoint_interior(v, g, h)):
                ok, wit = False, {"v": repr(v), "f": str(f), "g": str(g)}
                break
        out.append((f"adjoints of wedge and interior ({label} metric)", ok, wit))

    ok, wit = True, None
    for _ in range(trials):
        v = FrameVector(n, {rng.randrange(2 * n): rand_scalar(rng)})
        f = rand_form(rng, n, rng.randint(0, n), rng.randint(0, n))
        if adjoint_interior(v, f) != (flat(v) ^ f):
            ok, wit = False, {"v": repr(v), "f": str(f)}
            break
    out.append(("i(Z)* = eps(Z flat)", ok, wit))

    vol = volume_form(n)
    words = _words(n) if n <= 3 else [rand_form(rng, n, rng.randint(0, n), rng.randint(0, n), 0.3)
                                     for _ in range(trials)]
    ok, wit = True, None
    for a in words:
        for b in (words if n <= 3 else [a]):
            if _total_degrees(a) != _total_degrees(b):
                continue
            if (a ^ hodge_star(b.conj())) != vol.scale(inner(None, a, b)):
                ok, wit = False, {"a": str(a), "b": str(b)}
                break
        if not ok:
            break
    out.append(("a ^ *conj(b) = <a,b> vol", ok, wit))
    ok = all(star_square_sign(n, w) == (-1) ** w for w in range(2 * n + 1))
    out.append(("** = (-1)^deg", ok, None))


def _higgs(n, k, rng, trials, out):
    ok, wit = True, None
    for _ in range(trials):
        degs = [d for d in range(1, n + 1, 2)]
        omega = Form(n)
        for d in rng.sample(degs, rng.randint(1, len(degs))):
            omega = omega + rand_form(rng, n, d)
        H = HiggsField(omega)
        s = rand_form(rng, n, rng.randint(0, n))
        i, j = rng.randint(1, n), rng.randint(1, n)
        if commutator(H, i, j, s):
            ok, wit = False, {"omega": str(omega), "s": str(s), "Z": (i, j)}
            break
    out.append(("Higgs condition [theta(Z_i), theta(Z_j)] = 0", ok, wit))

    if n % 2 and n > 1:
        H = HiggsField.top(n)
        f = f_table(n)
        bad = next((m for m in range(1 << n)
                    if T_operator(H, Form(n, {m: ONE})) != Form(n, {m: ONE}).scale(f[m.bit_count()])), None)
        out.append(("f-table eigenvalues", bad is None, None if bad is None else {"word": bad}))
        out.append(("f-table weighted trace is zero", weighted_trace(f, n) == 0, None))

    H = HiggsField(Form.dz(n, *range(1, k + 1)))
    if k >= 3:
        out.append(("span table weighted trace is zero", weighted_trace(F_table(k), k) == 0, None))
        bad = next((m for m in range(1 << n)
                    if simple_T_expansion(H, Form(n, {m: ONE})) != T_operator(H, Form(n, {m: ONE}))), None)
        out.append((f"simple-form expansion of T (k={k})", bad is None,
                    None if bad is None else {"word": bad}))
    ok, wit = True, None
    for _ in range(trials):
        h = _natural_metric(rng, n)
        s = rand_form(rng, n, rng.randint(0, n))
        if inner(h, T_operator(H, s, h), s) != T_quadratic_form(H, s, h):
            ok, wit = False, {"s": str(s)}
            break
    out.append(("<T s, s> equals the sum of norms", ok, wit))

    words = _words(n, holo_only=True)
    if n > 4:
        words = [rand_form(rng, n, rng.randint(0, n)) for _ in range(trials)]
    bad = next((w for w in words if kernel_test(H, w) != kernel_brute_force(H, w)
                or adjoint_kernel_test(H, w) != adjoint_kernel_brute_force(H, w)), None)
    out.append(("kernel characterization of theta and its adjoint", bad is None,
                None if bad is None else {"s": str(bad)}))


def _random_frame_data(rng, n, r):
    def mat(p, q):
        return [[rand_form(rng, n, p, q, 0.4) if rng.random() < 0.7 else Form(n)
                 for _ in range(r)] for _ in range(r)]
    gram = [[ZERO] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = Scalar(r + 1 + rng.randint(0, 3))
    for i in range(r):
        for j in range(i + 1, r):
            c = Scalar(rng.randint(-1, 1), rng.randint(-1, 1))
            gram[i][j], gram[j][i] = c, c.conjugate()
    return PointFrameData(n, gram, mat(1, 0), C=mat(1, 0), Theta=mat(1, 1),
                          d_theta=mat(2, 0) if n >= 2 else None)


def _curvature(n, k, rng, trials, out):
    ok, wit = True, None
    for _ in range(max(1, trials // 4)):
        r = rng.randint(1, 4)
        data = _random_frame_data(rng, min(n, 4), r)
        m = data.dim
        for i in range(1, m + 1):
            for j in range(1, m + 1):
                Z, W = FrameVector.Z(m, i), FrameVector.Zbar(m, j)
                if evaluate(assemble_F(data).F11, Z, W) != crv_operator(data, Z, W):
                    ok, wit = False, {"r": r, "Z": i, "W": j}
                    break
            if not ok:
                break
        if not ok:
            break
    out.append(("F11 evaluation equals Theta + [theta, thetabar]", ok, wit))

    if k >= 1 and n <= 5:
        H = HiggsField(Form.dz(n, *range(1, k + 1)))
        data = higgs_frame_data(H)
        basis = holomorphic_basis(n)
        bad = None
        for j in range(1, n + 1):
            Z = FrameVector.Z(n, j)
            for mword in basis:
                s = Form(n, {mword: ONE})
                if Scalar(bochner_value(data, H, Z, s)) != bochner_from_curvature(data, Z, form_to_vector(s, basis)):
                    bad = {"Z": j, "word": mword}
                    break
            if bad:
                break
        out.append(("Bochner form equals <F(Z,Zbar)s, s>", bad is None, bad))
        M = iLambda_F_from_curvature(data)
        bad = None
        for a, mword in enumerate(basis):
            v = form_to_vector(iLambda_F(data, H, Form(n, {mword: ONE})), basis)
            if v != [M[b][a] for b in range(len(basis))]:
                bad = {"word": mword}
                break
        out.append(("i Lambda F equals the trace of F11", bad is None, bad))

    if n % 2 and n > 1:
        ok, wit = True, None
        for _ in range(trials):
            lam = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            C = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if not hhym_bookkeeping(n, lam, C, hhym_flat(n, lam, C)):
                ok, wit = False, {"lambda": lam, "C": C}
                break
        out.append(("flat HHYM bookkeeping identity", ok, wit))


def _nakano(n, k, rng, trials, out):
    if n > MAX_NAKANO_N:
        raise ValueError(f"the nakano suite is limited to n <= {MAX_NAKANO_N}")
    out.append(("[Lambda, L] = (n-p-q) Id", bool(lefschetz_check(n)), None))
    H = HiggsField(Form.dz(n, *range(1, k + 1)))
    fails: Dict[str, dict] = {}
    names = ["adjoint[dbar]", "adjoint[dh]", "adjoint[theta]", "adjoint[theta_adj]",
             "adjoint[D2]", "adjoint[D1]", "higgs_nakano", "D''^2 = 0", "D'_h^2 = 0",
             "box_D = box_D2 + box_D1", "box_D2 = boxbar", "ker boxbar in ker box_D2"]
    for t in range(trials):
        freq = rand_freq(rng, n)
        model = TorusModel(freq, H)
        res = [kahler_adjoint_check(model, nm) for nm in ("dbar", "dh", "theta", "theta_adj", "D2", "D1")]
        res.append(higgs_nakano_check(freq, H, model))
        for nm, r in zip(names, res):
            if not r and nm not in fails:
                fails[nm] = r.witness
        sq = [("D''^2 = 0", model.op("D2") @ model.op("D2")),
              ("D'_h^2 = 0", model.op("D1") @ model.op("D1"))]
        for nm, m in sq:
            if not m.matrix.is_zero() and nm not in fails:
                fails[nm] = {"freq": freq}
        if model.laplacian("box_D") != model.laplacian("box_D1") + model.laplacian("box_D2"):
            fails.setdefault("box_D = box_D2 + box_D1", {"freq": freq})
        if model.laplacian("box_D2") != model.laplacian("boxbar"):
            fails.setdefault("box_D2 = boxbar", {"freq": freq})
        if t == 0:
            r = kernel_inclusion_check(model)
            if not r:
                fails["ker boxbar in ker box_D2"] = r.witness
    for nm in names:
        out.append((nm, nm not in fails, fails.get(nm)))
    bad = [e for e in type_shift_audit(H) if not e.ok]
    out.append(("type-shift audit", not bad, None if not bad else {"operator": bad[0].name,
                                                                   **(bad[0].witness or {})}))
    ok, wit = True, None
    model = TorusModel([ONE] * n)
    for _ in range(trials):
        kappa = [Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n)]
        s = CharacterSection([ONE] * n, {TensorWord.from_index(rng.randrange(model.size), n): rand_scalar(rng)})
        if gigante_girbau(kappa, s) != gigante_girbau_operator(kappa, s, model):
            ok, wit = False, {"kappa": kappa, "word": next(iter(s.coeff))}
            break
    out.append(("diagonal curvature formula equals operator form", ok, wit))


SUITES: Dict[str, Callable] = {
    "exterior": _exterior,
    "metric": _metric,
    "higgs": _higgs,
    "curvature": _curvature,
    "nakano": _nakano,
}


def run_suite(suite: str, n: int, k: Optional[int] = None, seed: int = 0,
              trials: int = 10) -> List[CheckResult]:
    """Run one suite (or ``"all"``) and return one result per check."""
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(f"n must lie in 1..{MAX_EXHAUSTIVE_N}")
    if k is None:
        k = default_k(n)
    if k < 1 or k % 2 == 0 or k > n:
        raise ValueError(f"k must be odd with 1 <= k <= n, got {k}")
    if trials < 1:
        raise ValueError("trials must be positive")
    names = list(SUITES) if suite == "all" else [suite]
    if suite == "all" and n > MAX_NAKANO_N:
        names.remove("nakano")
    results = []
    for name in names:
        rng = random.Random(f"{seed}:{name}")
        raw: list = []
        SUITES[name](n, k, rng, trials, raw)
        results.extend(CheckResult(name, nm, bool(ok), wit) for nm, ok, wit in raw)
    return results
