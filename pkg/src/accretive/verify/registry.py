"""One check per inequality: generate admissible inputs, return every margin.

Each check takes ``(rng, n, alpha, opts)`` and returns an :class:`Outcome`.
``opts`` may pin ``fn`` (a FunctionSpec), ``t``, ``r``, ``lam`` and
``literal`` (logarithmic mean weights); anything not pinned is drawn from
``rng``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.linalg

from accretive import blockwitness as bw
from accretive.entropy import example_pairs, perspective_diff
from accretive.matcore import hermitize, re_part
from accretive.matfunc import (
    FunctionSpec,
    evaluate,
    fn_dual,
    neg_power,
    parse_fn,
    power,
)
from accretive.means import Perspective, arith_t, geom_t, harm_t, logmean_op
from accretive.report import Link
from accretive.rng import complex_gaussian
from accretive.verify import generators as gen


@dataclass
class Outcome:
    links: list[Link]
    params: dict = field(default_factory=dict)
    ratio: float | None = None


@dataclass(frozen=True)
class Entry:
    id: str
    summary: str
    check: Callable = field(repr=False)
    kind: str = "theorem"


# --- margin helpers -----------------------------------------------------------

def _norm(X) -> float:
    return float(np.linalg.norm(X, 2))


def leq(name: str, lhs, rhs) -> Link:
    """Link for ``lhs <= rhs`` in the Loewner order."""
    margin = float(np.linalg.eigvalsh(hermitize(rhs - lhs))[0])
    return Link(name, margin, max(1.0, _norm(lhs), _norm(rhs)))


def equal(name: str, X, Y, inflate: float = 1.0) -> Link:
    """Link for ``X = Y``; the margin is ``-||X - Y||``."""
    return Link(name, -_norm(X - Y), max(1.0, _norm(X), _norm(Y)) * inflate)


def upper_ratio(L, R, c: float):
    """``lambda_max(R^{-1/2} L R^{-1/2}) / c``: how much of ``L <= c R`` is used."""
    try:
        w = scipy.linalg.eigh(hermitize(L), hermitize(R), eigvals_only=True)
    except (np.linalg.LinAlgError, ValueError):
        return None
    return float(w[-1]) / c


def lower_ratio(L, R, c: float):
    """``c / lambda_min(L^{-1/2} R L^{-1/2})`` for ``c L <= R``."""
    try:
        w = scipy.linalg.eigh(hermitize(R), hermitize(L), eigvals_only=True)
    except (np.linalg.LinAlgError, ValueError):
        return None
    return c / float(w[0]) if w[0] > 0 else None


def _sec2(alpha):
    return 1.0 / math.cos(alpha) ** 2


def fval(f, A):
    return evaluate(f, A).value


def _t(rng, opts):
    return opts["t"] if opts.get("t") is not None else gen.weight(rng)


def _r(rng, opts, lo=0.0, hi=1.0):
    return opts["r"] if opts.get("r") is not None else float(rng.uniform(lo, hi))


def _lam(rng, opts):
    return opts["lam"] if opts.get("lam") is not None else float(rng.uniform(0, 1))


def _mean(f: FunctionSpec, A, B):
    return Perspective(A, B).mean(f).value


# --- order preservation ---------------------------------------------------------

def check_lh_order(rng, n, alpha, opts):
    A, B, gap = gen.ordered_pair(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    return _lh(A, B, gap, f, alpha, {"fn": f.name})


def _lh(A, B, gap, f, alpha, params):
    lhs = re_part(fval(f, A))
    base = re_part(fval(f, B))
    links = [Link("hyp: Re A <= Re B", gap, 1.0), leq("Re f(A) <= sec2 Re f(B)", lhs, _sec2(alpha) * base)]
    return Outcome(links, params, upper_ratio(lhs, base, _sec2(alpha)))


def check_power_order(rng, n, alpha, opts):
    A, B, gap = gen.ordered_pair(rng, n, alpha)
    r = _r(rng, opts)
    f = FunctionSpec(f"power:{r!r}", lambda z: np.power(z, r), r, params=(r,))
    return _lh(A, B, gap, f, alpha, {"r": r})


def check_inv_order(rng, n, alpha, opts):
    A, B, gap = gen.ordered_pair(rng, n, alpha)
    r = _r(rng, opts)
    g = neg_power(r)
    lhs = re_part(fval(g, B))
    base = re_part(fval(g, A))
    c = _sec2(alpha) ** 2
    links = [Link("hyp: Re A <= Re B", gap, 1.0), leq("Re B^-r <= sec4 Re A^-r", lhs, c * base)]
    return Outcome(links, {"r": r}, upper_ratio(lhs, base, c))


def check_inv_sec(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    lhs = np.linalg.inv(re_part(A))
    base = re_part(np.linalg.inv(A))
    c = _sec2(alpha)
    return Outcome([leq("(Re A)^-1 <= sec2 Re A^-1", lhs, c * base)], {}, upper_ratio(lhs, base, c))


def check_geo_self(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    G = geom_t(re_part(A), re_part(np.linalg.inv(A)), 0.5).value
    c = math.cos(alpha)
    ratio = c / float(np.linalg.eigvalsh(hermitize(G))[0])
    return Outcome([leq("cos I <= Re A # Re A^-1", c * np.eye(n), G)], {}, ratio)


# --- Choi-Davis type ------------------------------------------------------------

def check_cd_unital(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    k = int(rng.integers(1, 4))
    Cs = gen.unital_family(rng, n, k)

    def phi(X):
        return sum(C.conj().T @ X @ C for C in Cs)

    lhs = re_part(phi(fval(f, A)))
    rhs = re_part(fval(f, phi(A)))
    c = math.cos(alpha) ** 2
    return Outcome(
        [leq("cos2 Re Phi(f(A)) <= Re f(Phi(A))", c * lhs, rhs)],
        {"fn": f.name, "k": k},
        lower_ratio(lhs, rhs, c),
    )


def check_cd_sum(rng, n, alpha, opts):
    f = gen.draw_fn(rng, opts)
    k = int(rng.integers(1, 4))
    As = [gen.sector(rng, n, alpha) for _ in range(k)]
    Cs = gen.unital_family(rng, n, k)
    lhs = re_part(sum(C.conj().T @ fval(f, A) @ C for C, A in zip(Cs, As)))
    base = re_part(fval(f, sum(C.conj().T @ A @ C for C, A in zip(Cs, As))))
    c = _sec2(alpha)
    return Outcome(
        [leq("Re sum C* f(A) C <= sec2 Re f(sum C* A C)", lhs, c * base)],
        {"fn": f.name, "k": k},
        upper_ratio(lhs, base, c),
    )


def check_cd_contract(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    C = gen.contraction(rng, n)
    lhs = re_part(C.conj().T @ fval(f, A) @ C)
    base = re_part(fval(f, C.conj().T @ A @ C))
    c = _sec2(alpha)
    return Outcome(
        [leq("Re C* f(A) C <= sec2 Re f(C* A C)", lhs, c * base)],
        {"fn": f.name, "norm_C": _norm(C)},
        upper_ratio(lhs, base, c),
    )


# --- means ------------------------------------------------------------------------

def check_callebaut(rng, n, alpha, opts):
    f = gen.draw_fn(rng, opts)
    fd = fn_dual(f)
    k = int(rng.integers(2, 4)) if opts.get("k") is None else int(opts["k"])
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    As = [gen.sector(rng, n, alpha) for _ in range(k)]
    Bs = [gen.sector(rng, n, alpha) for _ in range(k)]
    geo = power(0.5)
    left = sum(_mean(geo, re_part(A), re_part(B)) for A, B in zip(As, Bs))
    s = sum(_mean(f, re_part(A), re_part(B)) for A, B in zip(As, Bs))
    sd = sum(_mean(fd, re_part(A), re_part(B)) for A, B in zip(As, Bs))
    mid = _mean(geo, s, sd)
    base = _mean(geo, re_part(sum(As)), re_part(sum(Bs)))
    c = _sec2(alpha)
    links = [
        leq("sum Re A # Re B <= (sum sigma) # (sum dual)", left, mid),
        leq("(sum sigma) # (sum dual) <= sec2 Re sum A # Re sum B", mid, c * base),
    ]
    return Outcome(links, {"fn": f.name, "k": k}, upper_ratio(mid, base, c))


def check_mean_convex(rng, n, alpha, opts):
    t = opts["t"] if opts.get("t") is not None else float(rng.uniform(0, 1))
    lam = _lam(rng, opts)
    A, B, C, D = (gen.sector(rng, n, alpha) for _ in range(4))
    lhs = re_part(lam * geom_t(A, C, t).value + (1 - lam) * geom_t(B, D, t).value)
    base = geom_t(re_part(lam * A + (1 - lam) * B), re_part(lam * C + (1 - lam) * D), t).value
    c = _sec2(alpha)
    return Outcome(
        [leq("Re(lam A#C + (1-lam) B#D) <= sec2 (...)#(...)", lhs, c * base)],
        {"t": t, "lam": lam},
        upper_ratio(lhs, base, c),
    )


def check_submult(rng, n, alpha, opts):
    A = opts["A"] if opts.get("A") is not None else gen.pd(rng, n)
    if opts.get("Y") is not None:
        Y = opts["Y"]
    elif rng.uniform() < 0.5:
        Y = gen.sector(rng, n, alpha)
    else:
        Y = 2 * complex_gaussian(rng, (n, n))
    A, Y = np.asarray(A, dtype=complex), np.asarray(Y, dtype=complex)
    Ai = np.linalg.inv(A)
    lhs = re_part(Y @ Ai @ Y)
    RY = re_part(Y)
    rhs = RY @ Ai @ RY
    return Outcome([leq("Re(Y A^-1 Y) <= Re Y A^-1 Re Y", lhs, rhs)])


# --- absolute value and block witnesses -----------------------------------------------

def check_r2r(rng, n, alpha, opts):
    X = gen.sector(rng, n, alpha)
    r = opts["r"] if opts.get("r") is not None else float(rng.choice([0.25, 0.5, 0.75, 1.0]))
    p = 2 * r
    f = FunctionSpec(f"power:{p!r}", lambda z: np.power(z, p), p, params=(p,))
    lhs = re_part(fval(f, X))
    w, V = np.linalg.eigh(re_part(X))
    base = hermitize((V * w**p) @ V.conj().T)
    c = _sec2(alpha)
    return Outcome(
        [leq("Re X^2r <= sec2 (Re X)^2r", lhs, c * base)], {"r": r}, upper_ratio(lhs, base, c)
    )


def check_block_witness(rng, n, alpha, opts):
    T = gen.sector(rng, n, alpha)
    v = bw.sector_block(T, alpha).verdict
    return Outcome([Link("block PSD", v.margin, v.scale)])


def check_inner_bound(rng, n, alpha, opts):
    T = gen.sector(rng, n, alpha)
    trials = int(opts.get("vectors") or 10_000)
    seed = int(rng.integers(2**32))
    res = bw.inner_bound_check(T, trials, seed, alpha)
    return Outcome([Link("sampled inner-product bound", res.worst_slack, res.scale)], {"vectors": trials})


def check_abs_bound(rng, n, alpha, opts):
    T = gen.sector(rng, n, alpha)
    U = bw.abs_bound_unitary(T, alpha)
    return Outcome([bw.abs_bound_link(T, U, alpha)])


def check_norm_chain(rng, n, alpha, opts):
    T = gen.sector(rng, n, alpha)
    values = bw.norm_chain(T, alpha)
    return Outcome(bw.chain_links(values), {"chain": list(values)}, values[0] / values[3])


# --- perspectives and entropies -----------------------------------------------------

def _pair_specs(rng, opts):
    t = _t(rng, opts)
    pairs = example_pairs(t)
    choice = opts.get("pair")
    if choice is None:
        names = pairs[int(rng.integers(len(pairs)))]
    elif isinstance(choice, int):
        names = pairs[choice]
    else:
        names = choice
    return parse_fn(names[0]), parse_fn(names[1]), t


def check_entropy_cong(rng, n, alpha, opts):
    f, g, t = _pair_specs(rng, opts)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    C = gen.invertible(rng, n)
    Ch = C.conj().T
    left = Ch @ perspective_diff(f, g, A, B).value @ C
    right = perspective_diff(f, g, Ch @ A @ C, Ch @ B @ C).value
    cond = float(np.linalg.cond(C))
    return Outcome([equal("C* D(A|B) C = D(C*AC|C*BC)", left, right, cond**2)],
                   {"f": f.name, "g": g.name, "t": t, "cond": cond})


def _entropy_bounds(A, B, f, g, alpha):
    RA, RB = re_part(A), re_part(B)
    PR = Perspective(RA, RB)
    Ff, Fg = PR.mean(f).value, PR.mean(g).value
    D_re = Ff - Fg
    D = re_part(perspective_diff(f, g, A, B).value)
    s = _sec2(alpha)
    return [
        leq("D(ReA|ReB) + (1-sec2) ReA sigma_g ReB <= Re D(A|B)", D_re + (1 - s) * Fg, D),
        leq("Re D(A|B) <= D(ReA|ReB) + (sec2-1) ReA sigma_f ReB", D, D_re + (s - 1) * Ff),
    ]


def check_entropy_1(rng, n, alpha, opts):
    f, g, t = _pair_specs(rng, opts)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    return Outcome(_entropy_bounds(A, B, f, g, alpha), {"f": f.name, "g": g.name, "t": t})


def _harm_arith(A, B, t):
    return re_part(harm_t(A, B, t).value), re_part(arith_t(A, B, t).value)


DERIV_T_FAMILIES = ("affine", "harm", "power", "logmean")


def check_entropy_2(rng, n, alpha, opts):
    t = _t(rng, opts)
    if opts.get("pair") is not None:
        f, g = (parse_fn(s) for s in opts["pair"])
    else:
        i, j = rng.integers(len(DERIV_T_FAMILIES), size=2)
        f = gen.FN_FAMILIES[DERIV_T_FAMILIES[i]](t)
        g = gen.FN_FAMILIES[DERIV_T_FAMILIES[j]](t)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    H, M = _harm_arith(A, B, t)
    D = re_part(perspective_diff(f, g, A, B).value)
    c2, s = math.cos(alpha) ** 2, _sec2(alpha)
    links = [
        leq("cos2 Re! - sec2 Re nabla <= Re D", c2 * H - s * M, D),
        leq("Re D <= sec2 Re nabla - cos2 Re!", D, s * M - c2 * H),
    ]
    return Outcome(links, {"f": f.name, "g": g.name, "t": t})


def check_logmean_cor(rng, n, alpha, opts):
    t = _t(rng, opts)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    H, M = _harm_arith(A, B, t)
    G = re_part(geom_t(A, B, t).value)
    L = re_part(logmean_op(A, B, t, literal=bool(opts.get("literal"))).value)
    c2, s = math.cos(alpha) ** 2, _sec2(alpha)
    links = [
        leq("cos2 Re! + Re# - sec2 Re nabla <= Re l_t", c2 * H + G - s * M, L),
        leq("Re l_t <= sec2 Re nabla + Re# - cos2 Re!", L, s * M + G - c2 * H),
    ]
    return Outcome(links, {"t": t, "literal": bool(opts.get("literal"))})


# --- classical inequalities used throughout -------------------------------------------

def check_sanity_f1(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    lhs = fval(f, re_part(A))
    rhs = re_part(fval(f, A))
    return Outcome([leq("f(Re A) <= Re f(A)", lhs, rhs)], {"fn": f.name}, lower_ratio(lhs, rhs, 1.0))


def check_sanity_f2(rng, n, alpha, opts):
    A = gen.sector(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    lhs = re_part(fval(f, A))
    base = hermitize(fval(f, re_part(A)))
    c = _sec2(alpha)
    return Outcome([leq("Re f(A) <= sec2 f(Re A)", lhs, c * base)], {"fn": f.name}, upper_ratio(lhs, base, c))


def check_sanity_sandwich(rng, n, alpha, opts):
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    f = gen.draw_fn(rng, opts)
    low = _mean(f, re_part(A), re_part(B))
    mid = re_part(_mean(f, A, B))
    c = _sec2(alpha)
    links = [leq("ReA sigma ReB <= Re(A sigma B)", low, mid), leq("Re(A sigma B) <= sec2 ReA sigma ReB", mid, c * low)]
    return Outcome(links, {"fn": f.name}, upper_ratio(mid, low, c))


def check_sanity_amhm(rng, n, alpha, opts):
    t = _t(rng, opts)
    f = gen.draw_fn(rng, opts, t=t)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    return _amhm(A, B, f, t, alpha)


def _amhm(A, B, f, t, alpha):
    H, M = _harm_arith(A, B, t)
    S = re_part(_mean(f, A, B))
    c2, s = math.cos(alpha) ** 2, _sec2(alpha)
    links = [leq("cos2 Re(A!B) <= Re(A sigma B)", c2 * H, S), leq("Re(A sigma B) <= sec2 Re(A nabla B)", S, s * M)]
    return Outcome(links, {"fn": f.name, "t": t}, upper_ratio(S, M, s))


def check_sanity_tan2(rng, n, alpha, opts):
    t = _t(rng, opts)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    return _amhm(A, B, power(t), t, alpha)


# --- worked specializations ---------------------------------------------------------

def check_spec_dt(rng, n, alpha, opts):
    """Tsallis specialization of the real-part bounds on perspective differences."""
    t = opts["t"] if opts.get("t") is not None else float(rng.uniform(0.05, 1.0))
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    RA, RB = re_part(A), re_part(B)
    Dre = (geom_t(RA, RB, t).value - RA) / t
    D = re_part((geom_t(A, B, t).value - A) / t)
    s = _sec2(alpha)
    links = [
        leq("T_t(ReA|ReB) + (1-sec2) ReA <= Re T_t(A|B)", Dre + (1 - s) * RA, D),
        leq("Re T_t(A|B) <= sec2 T_t(ReA|ReB) + (sec2-1) ReA", D, s * Dre + (s - 1) * RA),
    ]
    return Outcome(links, {"t": t})


def _sharp_parts(rng, n, alpha, opts):
    t = _t(rng, opts)
    A, B = gen.sector(rng, n, alpha), gen.sector(rng, n, alpha)
    H, M = _harm_arith(A, B, t)
    G = re_part(geom_t(A, B, t).value)
    return t, H, M, G, math.cos(alpha) ** 2, _sec2(alpha)


def check_spec_sharp_arith(rng, n, alpha, opts):
    t, H, M, G, c2, s = _sharp_parts(rng, n, alpha, opts)
    links = [
        leq("(1-sec2) Re nabla + cos2 Re! <= Re#", (1 - s) * M + c2 * H, G),
        leq("Re# <= (1+sec2) Re nabla - cos2 Re!", G, (1 + s) * M - c2 * H),
    ]
    return Outcome(links, {"t": t})


def check_spec_sharp_harm(rng, n, alpha, opts):
    """The second sandwich with the lower coefficient exactly as printed."""
    t, H, M, G, c2, s = _sharp_parts(rng, n, alpha, opts)
    links = [
        leq("(1+sec2) Re! - sec2 Re nabla <= Re#", (1 + s) * H - s * M, G),
        leq("Re# <= sec2 Re nabla + (1-cos2) Re!", G, s * M + (1 - c2) * H),
    ]
    return Outcome(links, {"t": t})


def check_spec_sharp_harm_derived(rng, n, alpha, opts):
    """The second sandwich with the lower coefficient that follows from the theorem."""
    t, H, M, G, c2, s = _sharp_parts(rng, n, alpha, opts)
    links = [
        leq("(1+cos2) Re! - sec2 Re nabla <= Re#", (1 + c2) * H - s * M, G),
        leq("Re# <= sec2 Re nabla + (1-cos2) Re!", G, s * M + (1 - c2) * H),
    ]
    return Outcome(links, {"t": t})


_ENTRIES = [
    Entry("LH-ORDER", "Re A <= Re B implies Re f(A) <= sec^2 Re f(B)", check_lh_order),
    Entry("POWER-ORDER", "Re A <= Re B implies Re A^r <= sec^2 Re B^r", check_power_order),
    Entry("INV-ORDER", "Re A <= Re B implies Re B^-r <= sec^4 Re A^-r", check_inv_order),
    Entry("INV-SEC", "(Re A)^-1 <= sec^2 Re A^-1", check_inv_sec),
    Entry("GEO-SELF", "Re A # Re A^-1 >= cos I", check_geo_self),
    Entry("CD-UNITAL", "Re f(Phi(A)) >= cos^2 Re Phi(f(A)), Phi unital", check_cd_unital),
    Entry("CD-SUM", "Re sum C* f(A) C <= sec^2 Re f(sum C* A C)", check_cd_sum),
    Entry("CD-CONTRACT", "Re C* f(A) C <= sec^2 Re f(C* A C), C contraction", check_cd_contract),
    Entry("CALLEBAUT", "sectorial Callebaut chain", check_callebaut),
    Entry("MEAN-CONVEX", "joint concavity of #_t up to sec^2", check_mean_convex),
    Entry("SUBMULT", "Re(Y A^-1 Y) <= Re Y A^-1 Re Y for A > 0", check_submult),
    Entry("R2R", "Re X^2r <= sec^2 (Re X)^2r", check_r2r),
    Entry("BLOCK-WITNESS", "[[sec Re T, T], [T*, sec Re T]] >= 0", check_block_witness),
    Entry("INNER-BOUND", "sampled inner-product bound with a polar unitary", check_inner_bound),
    Entry("ABS-BOUND", "|T| <= sec |(Re T)^1/2 U (Re T)^1/2|", check_abs_bound),
    Entry("NORM-CHAIN", "||T|| <= sec r(U Re T) <= ... <= sec ||Re T||", check_norm_chain),
    Entry("ENTROPY-CONG", "congruence invariance of perspective differences", check_entropy_cong),
    Entry("ENTROPY-1", "real-part bounds on D_{f,g}", check_entropy_1),
    Entry("ENTROPY-2", "harmonic/arithmetic bounds on D_{f,g}", check_entropy_2),
    Entry("LOGMEAN-COR", "bounds on the weighted logarithmic mean", check_logmean_cor),
    Entry("SANITY-F1", "Re f(A) >= f(Re A)", check_sanity_f1, "sanity"),
    Entry("SANITY-F2", "Re f(A) <= sec^2 f(Re A)", check_sanity_f2, "sanity"),
    Entry("SANITY-SANDWICH", "ReA sigma ReB <= Re(A sigma B) <= sec^2 ReA sigma ReB", check_sanity_sandwich, "sanity"),
    Entry("SANITY-AMHM", "cos^2 Re(A!B) <= Re(A sigma B) <= sec^2 Re(A nabla B)", check_sanity_amhm, "sanity"),
    Entry("SANITY-TAN2", "cos^2 Re(A!B) <= Re(A#B) <= sec^2 Re(A nabla B)", check_sanity_tan2, "sanity"),
    Entry("SPEC-DT", "Tsallis case of the real-part bounds", check_spec_dt, "specialization"),
    Entry("SPEC-SHARP-ARITH", "#_t sandwich from (affine, power)", check_spec_sharp_arith, "specialization"),
    Entry("SPEC-SHARP-HARM", "#_t sandwich from (power, harm), as printed", check_spec_sharp_harm, "specialization"),
    Entry("SPEC-SHARP-HARM-DERIVED", "#_t sandwich from (power, harm), rederived", check_spec_sharp_harm_derived, "specialization"),
]

REGISTRY = {e.id: e for e in _ENTRIES}
THEOREM_IDS = [e.id for e in _ENTRIES if e.kind != "specialization"]
SPECIALIZATION_IDS = [e.id for e in _ENTRIES if e.kind == "specialization"]
