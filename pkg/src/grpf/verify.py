"""One-shot verification suite: every headline claim, re-runnable from the CLI.

Each item is a named check returning (passed, detail).  The fast profile
skips the items marked slow (finite-field sampling and the larger
property sweeps); the full profile runs everything.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from .bwb import bwb_cohomology, serre_dual_weight
from .geometry import (
    ModelParams,
    grassmannian_window,
    orthogonal_rectangle,
    window_inclusion_closed_form,
    window_sets,
)
from .modp import det_mod, pfaffian_mod, random_skew_mod
from .pfaffian import AMap, build_skew_matrix, hypersurface_hodge, pfaffian_polynomial, sample_y2
from .schur import (
    KClass,
    cauchy_exterior_cotangent,
    clebsch_gordan_rank2,
    littlewood_richardson,
)
from .sections import (
    h1_tangent_y1,
    hodge_diamond_y1,
    twisted_ext_vanishing,
    verify_strong_exceptional,
)
from .weights import GLWeight, Partition


def _check_hypersurface_quintic():
    row = hypersurface_hodge(4, 5).middle_row()
    ok = row == [1, 101, 101, 1]
    return ok, f"middle row {row}"


def _check_section_hodge_10_5():
    res = hodge_diamond_y1(ModelParams(10, 5))
    row = res.diamond.middle_row()
    expected = [0] * 12
    expected[4:8] = [1, 101, 101, 1]
    ok = row == expected and res.diamond.h[(1, 1)] == 1
    return ok, f"middle row {row}"


def _check_tangent_10_5():
    res = h1_tangent_y1(ModelParams(10, 5))
    ok = res.mode == "exact-generic" and res.h1 == 101
    return ok, f"h1 = {res.h1} ({res.mode})"


def _check_collection(n):
    rep = verify_strong_exceptional(n, grassmannian_window(n))
    return rep.passed, f"{rep.pair_count} ordered pairs"


def _check_lemma(n):
    rep = twisted_ext_vanishing(n)
    detail = f"{rep.pair_count} pairs, {rep.summand_count} summands"
    if not rep.all_vanish:
        detail += f"; counterexamples {rep.counterexamples[:3]}"
    return rep.all_vanish, detail


def _check_window_grid():
    count = 0
    for n in range(3, 15):
        for k in range(1, math.comb(n, 2) + 1):
            s, t, literal = window_sets(ModelParams(n, k))
            if literal != window_inclusion_closed_form(n, k):
                return False, f"mismatch at (n,k)=({n},{k})"
            count += 1
    return True, f"{count} grid points"


def _check_rectangle():
    rect = orthogonal_rectangle(ModelParams(10, 5))
    expected = {(l, m) for l in range(4) for m in range(5)}
    ok = rect.labels == frozenset(expected)
    return ok, f"{len(rect)} labels"


def _check_pfaffian_degree():
    am = AMap.random(10, 5, seed=42, p=10007)
    pf = pfaffian_polynomial(build_skew_matrix(am))
    ok = pf.total_degree() == 5
    return ok, f"degree {pf.total_degree()}, {len(pf.terms)} terms"


def _random_levi_dominant(rng, n, span=8):
    raw = sorted((rng.randint(-span, span) for _ in range(2)), reverse=True)
    q = tuple(sorted((rng.randint(-span, span) for _ in range(n - 2)), reverse=True))
    return GLWeight(n, tuple(raw), q)


def _check_serre_duality(samples=1000, seed=2024):
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randrange(5, 13)
        w = _random_levi_dominant(rng, n)
        a = bwb_cohomology(w)
        b = bwb_cohomology(serre_dual_weight(w))
        if a.vanishes != b.vanishes:
            return False, f"vanishing mismatch at {w}"
        if not a.vanishes:
            if a.degree + b.degree != 2 * (n - 2) or a.dimension != b.dimension:
                return False, f"duality fails at {w}"
    return True, f"{samples} random weights"


def _check_dichotomy(samples=10000, seed=2025):
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randrange(5, 13)
        w = _random_levi_dominant(rng, n)
        res = bwb_cohomology(w)
        if not res.vanishes and not 0 <= res.degree <= 2 * (n - 2):
            return False, f"degree out of range at {w}"
    return True, f"{samples} random weights"


def _check_cauchy_ranks():
    for n in range(3, 13):
        for m in range(0, 2 * (n - 2) + 1):
            kc = cauchy_exterior_cotangent(n, m)
            if kc.virtual_rank() != math.comb(2 * (n - 2), m):
                return False, f"rank off at (n,m)=({n},{m})"
    return True, "all n <= 12"


def _check_clebsch_gordan_dims():
    for l in range(31):
        for lp in range(31):
            total = sum(e + 1 for e, _ in clebsch_gordan_rank2(l, lp))
            if total != (l + 1) * (lp + 1):
                return False, f"dimension off at ({l},{lp})"
    return True, "l, l' <= 30"


def _check_diamond_integrity():
    cases = [(10, 5), (7, 7), (9, 9), (8, 4), (4, 1), (6, 3)]
    for n, k in cases:
        res = hodge_diamond_y1(ModelParams(n, k))
        dia = res.diamond
        dia.validate()
        top = sum((-1) ** p * res.chi_p[p] for p in range(dia.dim + 1))
        if dia.euler_characteristic() != top:
            return False, f"Euler mismatch at ({n},{k})"
    return True, f"{len(cases)} diamonds"


def _check_pf_square_det(per_size=334, seed=2026):
    rng = random.Random(seed)
    p = 10007
    total = 0
    for n in (8, 10, 12):
        for _ in range(per_size):
            m = random_skew_mod(n, p, rng)
            if pfaffian_mod(m, p) ** 2 % p != det_mod(m, p):
                return False, f"Pf^2 != det at n={n}"
            total += 1
    return True, f"{total} random matrices"


def _partitions_upto(size, max_len):
    """All partitions of total size at most ``size`` and length <= max_len."""
    out = [Partition()]

    def rec(prefix, remaining, cap):
        if len(prefix) >= max_len:
            return
        for v in range(min(cap, remaining), 0, -1):
            q = prefix + [v]
            out.append(Partition(q))
            rec(q, remaining - v, v)

    rec([], size, size)
    return out


def _schur_monomials(shape, nvars, cache={}):
    """Monomial expansion of a Schur polynomial by tableau enumeration."""
    key = (shape.parts, nvars)
    if key in cache:
        return cache[key]
    if len(shape) > nvars:
        cache[key] = {}
        return {}
    rows = len(shape)
    cols = [shape[r] for r in range(rows)]
    cells = [(r, c) for r in range(rows) for c in range(cols[r])]
    grid = [[0] * shape[r] for r in range(rows)]
    out = {}

    def fill(idx):
        if idx == len(cells):
            exp = [0] * nvars
            for row in grid:
                for v in row:
                    exp[v - 1] += 1
            exp = tuple(exp)
            out[exp] = out.get(exp, 0) + 1
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, nvars + 1):
            grid[r][c] = v
            fill(idx + 1)
        grid[r][c] = 0

    fill(0)
    cache[key] = out
    return out


def _lr_by_monomials(lam, mu, nvars):
    """Expand s_lam * s_mu in the Schur basis by leading-term elimination."""
    prod = {}
    a = _schur_monomials(lam, nvars)
    b = _schur_monomials(mu, nvars)
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            prod[e] = prod.get(e, 0) + c1 * c2
    result = {}
    while prod:
        lead = max(prod)
        coeff = prod[lead]
        shape = Partition(lead)
        result[shape] = coeff
        for e, c in _schur_monomials(shape, nvars).items():
            v = prod.get(e, 0) - coeff * c
            if v:
                prod[e] = v
            else:
                prod.pop(e, None)
    return result


def _check_lr_oracle(seed=2027):
    nvars = 6
    pairs = []
    small = _partitions_upto(4, nvars)
    pairs.extend(itertools.product(small, small))
    rng = random.Random(seed)
    bigger = _partitions_upto(6, nvars)
    for _ in range(25):
        pairs.append((rng.choice(bigger), rng.choice(bigger)))
    for lam, mu in pairs:
        ours = dict(littlewood_richardson(lam, mu, nvars))
        oracle = _lr_by_monomials(lam, mu, nvars)
        if ours != oracle:
            return False, f"mismatch at {lam}, {mu}"
        theirs = dict(littlewood_richardson(mu, lam, nvars))
        if ours != theirs:
            return False, f"symmetry fails at {lam}, {mu}"
    return True, f"{len(pairs)} products"


def _check_sampling():
    details = []
    for n, k in ((10, 5), (7, 7), (8, 4)):
        am = AMap.random(n, k, seed=42, p=10007)
        res = sample_y2(am, 10007, 200, seed=42)
        expected_kernel = 2 if n % 2 == 0 else 3
        smooth = [q for q in res.points if q.smooth_at]
        ok = (
            len(res.points) >= 100
            and all(q.kernel_dim == expected_kernel for q in smooth)
            and res.smooth_fraction >= 0.95
        )
        details.append(f"({n},{k}): {len(res.points)} pts")
        if not ok:
            return False, "; ".join(details)
    return True, "; ".join(details)


@dataclass(frozen=True)
class VerifyItem:
    name: str
    slow: bool
    run: object


ITEMS = (
    VerifyItem("hypersurface-quintic", False, _check_hypersurface_quintic),
    VerifyItem("section-hodge-10-5", False, _check_section_hodge_10_5),
    VerifyItem("tangent-deformations-10-5", False, _check_tangent_10_5),
    VerifyItem("collection-n10", False, lambda: _check_collection(10)),
    VerifyItem("collection-n7", False, lambda: _check_collection(7)),
    VerifyItem("lemma-n8", False, lambda: _check_lemma(8)),
    VerifyItem("lemma-n10", False, lambda: _check_lemma(10)),
    VerifyItem("lemma-n12", False, lambda: _check_lemma(12)),
    VerifyItem("window-inclusion-grid", False, _check_window_grid),
    VerifyItem("orthogonal-rectangle-10-5", False, _check_rectangle),
    VerifyItem("pfaffian-degree-10-5", False, _check_pfaffian_degree),
    VerifyItem("serre-duality-random", False, _check_serre_duality),
    VerifyItem("bwb-degree-range-random", False, _check_dichotomy),
    VerifyItem("cauchy-rank-conservation", False, _check_cauchy_ranks),
    VerifyItem("clebsch-gordan-dimensions", False, _check_clebsch_gordan_dims),
    VerifyItem("diamond-integrity", False, _check_diamond_integrity),
    VerifyItem("pfaffian-square-is-det", True, _check_pf_square_det),
    VerifyItem("littlewood-richardson-oracle", True, _check_lr_oracle),
    VerifyItem("pfaffian-sampling", True, _check_sampling),
)


def run_profile(profile="fast"):
    """Run the suite; returns a list of (name, passed, detail, seconds)."""
    import time

    if profile not in ("fast", "full"):
        raise ValueError(f"unknown profile {profile!r}")
    results = []
    for item in ITEMS:
        if profile == "fast" and item.slow:
            continue
        t0 = time.perf_counter()
        passed, detail = item.run()
        results.append((item.name, passed, detail, time.perf_counter() - t0))
    return results
