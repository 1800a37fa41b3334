"""The verification suite: every structural claim becomes a named check.

Checks are grouped into suites; one suite *unit* generates one instance (or
instance pair) from a derived seed and evaluates all member checks on it,
emitting one CheckReport per (check, instance).  Statuses:

    pass              the claim holds on this instance
    fail              a hard claim is violated: implementation bug or a
                      genuine refutation; carries a replayable witness
    not-applicable    the claim's hypotheses are not met by this instance
    soft-discrepancy  a soft claim (one whose published argument has known
                      gaps or intricate side conditions) is violated; logged
                      as a finding with a witness, not a build failure

Determinism: unit i of suite S under master seed m uses the derived seed
h(m, S, i), so any report replays from (seed, digest) alone.  Reports sort
canonically by (check, digest, seed); their serialized form excludes
timing, so parallel and serial runs emit byte-identical output.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import random
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence

import numpy as np

from .blockspace import DEFAULT_MAX_SPACE, BlockSpace, Labeling
from .codes import Code
from .constructions import (
    direct_sum_code,
    extended_code,
    plotkin_code,
    punctured_code,
    sum_map_injective,
    tensor_code,
    tensor_vector,
)
from .errors import AxiomViolation
from .field import make_field
from .instances import Instance, derive_seed
from . import poset as posets
from .weights import WeightFn, custom_weight, hamming_weight, lee_weight

# Desk-scale ambient caps per field size: q^n stays below these in scans.
_SIZE_CAP = {2: 1024, 3: 729, 5: 625, 7: 343}
_EXHAUSTIVE_PAIR_CAP = 2048
_RANDOM_PAIR_SAMPLES = 2000


@dataclass
class CheckReport:
    check: str
    digest: str
    seed: int
    status: str  # pass | fail | not-applicable | soft-discrepancy
    witness: dict | None
    elapsed: float

    def record(self) -> dict:
        """Stable serialized fields; timing is deliberately excluded so that
        parallel and serial runs produce byte-identical report streams."""
        return {
            "check": self.check,
            "digest": self.digest,
            "seed": self.seed,
            "status": self.status,
            "witness": self.witness,
        }

    def line(self) -> str:
        return json.dumps(self.record(), sort_keys=True, separators=(",", ":"))


class _Unit:
    """Report collector for one (instance, seed) evaluation."""

    def __init__(self, seed: int, digest: str):
        self.seed = seed
        self.digest = digest
        self.reports: list[CheckReport] = []
        self._t0 = time.perf_counter()

    def _emit(self, check: str, status: str, witness: dict | None) -> None:
        now = time.perf_counter()
        self.reports.append(
            CheckReport(check, self.digest, self.seed, status, witness, now - self._t0)
        )
        self._t0 = now

    def hard(self, check: str, ok: bool, witness: dict) -> None:
        self._emit(check, "pass" if ok else "fail", None if ok else witness)

    def soft(self, check: str, ok: bool, witness: dict) -> None:
        self._emit(check, "pass" if ok else "soft-discrepancy", None if ok else witness)

    def na(self, check: str, reason: str) -> None:
        self._emit(check, "not-applicable", {"reason": reason})


def _pair_digest(*parts: str) -> str:
    return hashlib.sha256("|".join(parts).encode()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# samplers
# ---------------------------------------------------------------------------


def _random_poset(rng: random.Random, s: int) -> posets.Poset:
    roll = rng.random()
    if roll < 0.30:
        return posets.chain(s)
    if roll < 0.50:
        return posets.antichain(s)
    covers = [
        (a, b)
        for a in range(1, s + 1)
        for b in range(a + 1, s + 1)
        if rng.random() < 0.4
    ]
    return posets.from_cover_relations(s, covers)


def _pick_q(rng: random.Random, pool: list[int], q_filter: int | None) -> int | None:
    """Field size for this unit: the filter when it lies in the suite's pool,
    a seeded choice otherwise; None skips the unit entirely."""
    if q_filter is not None:
        return q_filter if q_filter in pool else None
    return rng.choice(pool)


def _random_weight(rng: random.Random, q: int, allow_table: bool = True) -> WeightFn:
    field = make_field(q)
    kinds = ["hamming"]
    if field.e == 1:
        kinds.append("lee")
    if allow_table and field.e == 1 and q >= 3:
        kinds.append("table")
    kind = rng.choice(kinds)
    if kind == "hamming":
        return hamming_weight(field)
    if kind == "lee":
        return lee_weight(field)
    for _ in range(200):
        vals = [0] * q
        for a in range(1, q):
            b = field.neg(a)
            if b < a:
                vals[a] = vals[b]
            else:
                vals[a] = rng.randint(1, 3)
        try:
            return custom_weight(field, vals)
        except AxiomViolation:
            continue
    return lee_weight(field)


def _random_shape(
    rng: random.Random, q: int, s_max: int = 3, k_max: int = 2, cap: int | None = None
) -> tuple[posets.Poset, Labeling]:
    cap = cap if cap is not None else _SIZE_CAP[q]
    while True:
        s = rng.randint(1, s_max)
        sizes = tuple(rng.randint(1, k_max) for _ in range(s))
        if q ** sum(sizes) <= cap:
            return _random_poset(rng, s), Labeling(sizes)


def _random_rows(rng: random.Random, q: int, n: int, dim: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(rng.randrange(q) for _ in range(n)) for _ in range(dim))


def _random_code(
    rng: random.Random,
    space: BlockSpace,
    dim_min: int = 1,
    dim_max: int = 3,
) -> Code:
    """A random linear code; when dim_min >= 1, rows are redrawn until rank >= 1."""
    dim = rng.randint(dim_min, max(dim_min, min(space.n, dim_max)))
    while True:
        code = Code.linear(space, _random_rows(rng, space.q, space.n, dim))
        if dim == 0 or code.size >= 2:
            return code


def _instance_of(code: Code) -> Instance:
    return Instance.from_parts(code.space, code)


def _covering_with_oracle(unit: _Unit, code: Code, label: str, max_space: int) -> int:
    """Covering radius by full scan, cross-checked against the coset-leader max."""
    rho = code.covering_radius(max_space)
    if code.is_linear:
        coset_max = code.coset_table(max_space).max_weight
        unit.hard(
            "covering-oracle",
            rho == coset_max,
            {"code": label, "scan": rho, "coset_max": coset_max},
        )
    return rho


def _hamming_view(code: Code) -> Code:
    return code.with_weight(hamming_weight(code.space.field))


# ---------------------------------------------------------------------------
# suite: metric-axioms
# ---------------------------------------------------------------------------


_sum_rank_cache: dict = {}


def metric_axiom_witness(
    space: BlockSpace,
    rng: random.Random | None = None,
    exhaustive_cap: int = _EXHAUSTIVE_PAIR_CAP,
    samples: int = _RANDOM_PAIR_SAMPLES,
) -> dict | None:
    """None if the metric axioms hold, else a witness.

    For q^n <= exhaustive_cap the check is exact over all pairs: identity and
    symmetry vector-wise, and the triangle inequality in its weight form
    w(x + y) <= w(x) + w(y), which covers every triple (u, v, z) exactly via
    x = u - z, y = z - v.  Larger spaces fall back to seeded random pairs.
    """
    q, n = space.q, space.n
    if space.size <= exhaustive_cap:
        arr = space.all_vectors()
        w = space.batch_weights(arr)
        if w[0] != 0:
            return {"axiom": "identity", "vector": list(space.unrank(0))}
        nz = np.nonzero(w[1:] == 0)[0]
        if len(nz):
            return {"axiom": "identity", "vector": list(space.unrank(int(nz[0]) + 1))}
        neg_rank = space.field.neg_table[arr].astype(np.int64) @ space._radix
        bad = np.nonzero(w[neg_rank] != w)[0]
        if len(bad):
            return {"axiom": "symmetry", "vector": list(space.unrank(int(bad[0])))}
        key = (q, n)
        if key not in _sum_rank_cache:
            sums = space.field.add_table[arr[:, None, :], arr[None, :, :]]
            _sum_rank_cache[key] = sums.astype(np.int64) @ space._radix
        ranks = _sum_rank_cache[key]
        viol = w[ranks] > w[:, None] + w[None, :]
        if viol.any():
            i, j = (int(v) for v in np.argwhere(viol)[0])
            return {
                "axiom": "triangle",
                "u": list(space.unrank(i)),
                "v": list(space.unrank(j)),
            }
        return None

    rng = rng or random.Random(0)
    if space.wpb_weight(space.zero()) != 0:
        return {"axiom": "identity", "vector": list(space.zero())}
    for _ in range(samples):
        u = tuple(rng.randrange(q) for _ in range(n))
        v = tuple(rng.randrange(q) for _ in range(n))
        wu, wv = space.wpb_weight(u), space.wpb_weight(v)
        if any(u) and wu == 0:
            return {"axiom": "identity", "vector": list(u)}
        if space.wpb_weight(space.neg(u)) != wu:
            return {"axiom": "symmetry", "vector": list(u)}
        if space.wpb_weight(space.add(u, v)) > wu + wv:
            return {"axiom": "triangle", "u": list(u), "v": list(v)}
    return None


def _unit_metric_axioms(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "metric-axioms", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    cap = 1024 if q == 2 else _SIZE_CAP[q] * (25 if q == 5 else 1)  # q=5 may go randomized
    pos, lab = _random_shape(rng, q, s_max=3, k_max=2, cap=cap)
    weight = _random_weight(rng, q)
    space = BlockSpace(pos, lab, make_field(q), weight)
    inst = Instance.from_parts(space, Code.linear(space, []))
    u = _Unit(child, inst.digest())
    witness = metric_axiom_witness(space, rng)
    u.hard("metric-axioms", witness is None, witness or {})
    return u.reports


# ---------------------------------------------------------------------------
# suite: reductions
# ---------------------------------------------------------------------------


def _unit_reductions(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "reductions", unit)
    rng = random.Random(child)
    which = unit % 4
    cap = 1024

    if which == 0:  # trivial blocks + antichain + Hamming -> Hamming weight
        q = _pick_q(rng, [2, 3, 5], q_filter)
        if q is None:
            return []
        n = rng.randint(1, {2: 10, 3: 6, 5: 4}[q])
        space = BlockSpace(
            posets.antichain(n), Labeling((1,) * n), make_field(q), hamming_weight(make_field(q))
        )
        arr = space.all_vectors(cap)
        expect = (arr != 0).sum(axis=1)
        name = "reduction-hamming"
    elif which == 1:  # trivial blocks + antichain + Lee -> Lee weight
        q = _pick_q(rng, [3, 5, 7], q_filter)
        if q is None:
            return []
        n = rng.randint(1, {3: 6, 5: 4, 7: 3}[q])
        space = BlockSpace(
            posets.antichain(n), Labeling((1,) * n), make_field(q), lee_weight(make_field(q))
        )
        arr = space.all_vectors(cap)
        a = arr.astype(np.int64)
        expect = np.minimum(a, q - a).sum(axis=1)
        name = "reduction-lee"
    elif which == 2:  # chain + Hamming -> NRT block weight (top nonzero block index)
        q = _pick_q(rng, [2, 3, 5], q_filter)
        if q is None:
            return []
        _, lab = _random_shape(rng, q, s_max=3, k_max=2, cap=cap)
        space = BlockSpace(
            posets.chain(lab.s), lab, make_field(q), hamming_weight(make_field(q))
        )
        arr = space.all_vectors(cap)
        expect = np.zeros(len(arr), dtype=np.int64)
        for i in range(1, space.s + 1):
            sl = space.labeling.block_slice(i)
            expect = np.where((arr[:, sl] != 0).any(axis=1), i, expect)
        name = "reduction-nrt"
    else:  # any poset + Hamming -> poset block weight |ideal(supp)|
        q = _pick_q(rng, [2, 3], q_filter)
        if q is None:
            return []
        pos, lab = _random_shape(rng, q, s_max=3, k_max=2, cap=cap)
        space = BlockSpace(pos, lab, make_field(q), hamming_weight(make_field(q)))
        arr = space.all_vectors(cap)
        expect = np.array(
            [
                len(pos.ideal(space.block_support(space.unrank(r))))
                for r in range(space.size)
            ],
            dtype=np.int64,
        )
        name = "reduction-poset-block"

    inst = Instance.from_parts(space, Code.linear(space, []))
    u = _Unit(child, inst.digest())
    got = space.batch_weights(arr)
    bad = np.nonzero(got != expect)[0]
    witness = {}
    if len(bad):
        r = int(bad[0])
        witness = {
            "vector": list(space.unrank(r)),
            "wpb": int(got[r]),
            "oracle": int(expect[r]),
        }
    u.hard(name, len(bad) == 0, witness)
    return u.reports


# ---------------------------------------------------------------------------
# suite: ball-nesting (chain envelope, exhaustive)
# ---------------------------------------------------------------------------

_BALL_ENVELOPE: list[tuple[int, ...]] = [
    sizes for s in (1, 2, 3) for sizes in itertools.product((1, 2), repeat=s)
]


def _unit_ball_nesting(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    if q_filter is not None and q_filter != 5:
        return []
    sizes = _BALL_ENVELOPE[unit % len(_BALL_ENVELOPE)]
    child = derive_seed(seed, "ball-nesting", unit)
    q = 5
    f = make_field(q)
    space = BlockSpace(posets.chain(len(sizes)), Labeling(sizes), f, lee_weight(f))
    inst = Instance.from_parts(space, Code.linear(space, []))
    u = _Unit(child, inst.digest())
    arr = space.all_vectors()
    wl = space.batch_weights(arr)
    wh = space.hamming_sibling().batch_weights(arr)
    mw = space.weight.max_weight
    ok, witness = True, {}
    for i in range(0, space.s + 1):
        for sigma in range(1, mw + 1):
            in_w = wl <= sigma + i * mw
            in_h = wh <= i + 1
            if (in_w & ~in_h).any():
                ok, witness = False, {"kind": "inclusion", "i": i, "sigma": sigma}
                break
            if i < space.s and (in_w == in_h).all() != (sigma == mw):
                ok, witness = False, {"kind": "equality-iff", "i": i, "sigma": sigma}
                break
        if not ok:
            break
    u.hard("ball-nesting-chain", ok, witness)
    return u.reports


# ---------------------------------------------------------------------------
# suite: chain-radii (packing + covering radius theorems on chains)
# ---------------------------------------------------------------------------


def _unit_chain_radii(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "chain-radii", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    _, lab = _random_shape(rng, q, s_max=3, k_max=2)
    space = BlockSpace(posets.chain(lab.s), lab, make_field(q), _random_weight(rng, q))
    code = _random_code(rng, space, dim_min=1, dim_max={2: 4, 3: 3, 5: 3}[q])
    inst = _instance_of(code)
    u = _Unit(child, inst.digest())

    mw = space.weight.max_weight
    m_small = space.weight.min_nonzero_weight
    d_h = _hamming_view(code).min_distance(max_space)
    d_w = code.min_distance(max_space)
    rho_pack = code.packing_radius(max_space)
    floor = (d_h - 1) * mw
    witness = {
        "packing": rho_pack,
        "d_hamming": d_h,
        "d_weighted": d_w,
        "M_w": mw,
        "m_w": m_small,
    }
    u.hard("packing-radius-chain-lower", rho_pack >= floor, witness)
    # The published equality criterion has genuine counterexamples (already
    # with the Lee weight over GF(5)): a minimum-distance difference can
    # split into two below-threshold halves, letting balls of radius
    # floor + 1 intersect although d_w exceeds m_w + floor.  Soft check.
    u.soft(
        "packing-radius-chain-equality",
        (rho_pack == floor) == (d_w == m_small + floor),
        witness,
    )

    rho = _covering_with_oracle(u, code, "code", max_space)
    r = code.trailing_full_index(max_space)
    u.hard(
        "covering-radius-chain",
        (r - 1) * mw < rho <= r * mw,
        {"covering": rho, "r": r, "M_w": mw},
    )
    return u.reports


# ---------------------------------------------------------------------------
# suite: direct-sum
# ---------------------------------------------------------------------------


def _sample_pair(
    rng: random.Random,
    q: int,
    total_cap: int,
    s_max: int = 3,
    k_max: int = 2,
    dim_max: int = 2,
) -> tuple[Code, Code]:
    weight = _random_weight(rng, q, allow_table=False)
    while True:
        p1, lab1 = _random_shape(rng, q, s_max, k_max, cap=total_cap)
        p2, lab2 = _random_shape(rng, q, s_max, k_max, cap=total_cap)
        if q ** (lab1.n + lab2.n) <= total_cap:
            break
    f = make_field(q)
    c1 = _random_code(rng, BlockSpace(p1, lab1, f, weight), 1, dim_max)
    c2 = _random_code(rng, BlockSpace(p2, lab2, f, weight), 1, dim_max)
    return c1, c2


def _unit_direct_sum(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "direct-sum", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    c1, c2 = _sample_pair(rng, q, total_cap=_SIZE_CAP[q])
    i1, i2 = _instance_of(c1), _instance_of(c2)
    u = _Unit(child, _pair_digest(i1.digest(), i2.digest()))

    mw = c1.space.weight.max_weight
    d1 = c1.min_distance(max_space)
    d2 = c2.min_distance(max_space)
    rho1 = _covering_with_oracle(u, c1, "C1", max_space)
    rho2 = _covering_with_oracle(u, c2, "C2", max_space)

    disj = direct_sum_code(c1, c2, "disjoint").code
    lin = direct_sum_code(c1, c2, "linear").code

    dd = disj.min_distance(max_space)
    u.hard("dsum-mindist-disjoint", dd == min(d1, d2), {"d": dd, "d1": d1, "d2": d2})
    dl = lin.min_distance(max_space)
    u.hard("dsum-mindist-linear", dl == d1, {"d": dl, "d1": d1})

    rho_disj = _covering_with_oracle(u, disj, "disjoint-sum", max_space)
    u.hard(
        "dsum-covering-disjoint",
        rho_disj == rho1 + rho2,
        {"rho": rho_disj, "rho1": rho1, "rho2": rho2},
    )
    rho_lin = _covering_with_oracle(u, lin, "linear-sum", max_space)
    if rho2 > 0:
        u.hard(
            "dsum-covering-linear",
            rho_lin == c1.space.s * mw + rho2,
            {"rho": rho_lin, "s": c1.space.s, "M_w": mw, "rho2": rho2},
        )
    else:
        # With C2 the full space the deep coset leader (u', u'') has zero
        # second half, so the published equality degenerates; skip.
        u.na("dsum-covering-linear", "rho(C2) = 0")

    t1 = c1.coset_table(max_space)
    t2 = c2.coset_table(max_space)
    for label, total in (("disjoint", disj), ("linear", lin)):
        table = total.coset_table(max_space)
        ok, witness = True, {}
        for l1, w1 in zip(t1.leaders, t1.weights):
            for l2, w2 in zip(t2.leaders, t2.weights):
                joint = l1 + l2
                expect = table.weights[total.coset_index(joint)]
                got = total.space.wpb_weight(joint)
                if got != expect:
                    ok = False
                    witness = {
                        "order": label,
                        "leader1": list(l1),
                        "leader2": list(l2),
                        "weight": got,
                        "coset_weight": expect,
                    }
                    break
            if not ok:
                break
        u.hard(f"dsum-coset-leader-{label}", ok, witness)
    return u.reports


# ---------------------------------------------------------------------------
# suite: plotkin
# ---------------------------------------------------------------------------


def _unit_plotkin(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "plotkin", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    cap = _SIZE_CAP[q]
    weight = _random_weight(rng, q, allow_table=False)
    f = make_field(q)
    while True:
        p1, lab1 = _random_shape(rng, q, cap=cap)
        if q ** (2 * lab1.n) <= cap:
            break
    n = lab1.n
    # a second labeling with the same total length
    while True:
        s2 = rng.randint(1, min(3, n))
        sizes2 = _random_partition(rng, n, s2)
        if sizes2 is not None:
            break
    p2 = _random_poset(rng, len(sizes2))
    lab2 = Labeling(sizes2)
    c1 = _random_code(rng, BlockSpace(p1, lab1, f, weight), 1, 2)
    c2 = _random_code(rng, BlockSpace(p2, lab2, f, weight), 1, 2)
    i1, i2 = _instance_of(c1), _instance_of(c2)
    u = _Unit(child, _pair_digest(i1.digest(), i2.digest()))

    mw = weight.max_weight
    d1 = c1.min_distance(max_space)
    d2 = c2.min_distance(max_space)
    rho1 = _covering_with_oracle(u, c1, "C1", max_space)
    rho2 = _covering_with_oracle(u, c2, "C2", max_space)

    disj = plotkin_code(c1, c2, "disjoint").code
    lin = plotkin_code(c1, c2, "linear").code

    dd = disj.min_distance(max_space)
    u.hard("plotkin-mindist-disjoint", dd >= min(d1, d2), {"d": dd, "d1": d1, "d2": d2})
    dl = lin.min_distance(max_space)
    u.hard("plotkin-mindist-linear", dl >= d1, {"d": dl, "d1": d1})

    if sum_map_injective(c1, c2):
        # cross-space quantities: C1 and C1+C2 measured in (Q, pi2, w)
        space2 = c2.space
        c1_in_q = Code.explicit(space2, c1.codewords())
        sums = Code.explicit(
            space2,
            [space2.add(a, b) for a in c1.codewords() for b in c2.codewords()],
        )
        d_c1_q = c1_in_q.min_distance(max_space)
        d_sums = sums.min_distance(max_space)
        bound = min(d2, d1 + d_c1_q, d1 + d_sums)
        u.hard(
            "plotkin-refined-disjoint",
            dd >= bound,
            {"d": dd, "bound": bound, "d2": d2, "d_c1_q": d_c1_q, "d_sums": d_sums},
        )
        expect = c1.space.s * mw + min(d2, d_c1_q, d_sums)
        u.hard(
            "plotkin-refined-linear",
            dl == expect,
            {"d": dl, "expected": expect},
        )
    else:
        u.na("plotkin-refined-disjoint", "sum map not injective on C1 x C2")
        u.na("plotkin-refined-linear", "sum map not injective on C1 x C2")

    rho_disj = _covering_with_oracle(u, disj, "disjoint", max_space)
    u.hard(
        "plotkin-covering-disjoint",
        rho_disj <= rho1 + rho2,
        {"rho": rho_disj, "rho1": rho1, "rho2": rho2},
    )
    rho_lin = _covering_with_oracle(u, lin, "linear", max_space)
    u.hard(
        "plotkin-covering-linear",
        rho_lin <= c1.space.s * mw + rho2,
        {"rho": rho_lin, "s": c1.space.s, "M_w": mw, "rho2": rho2},
    )
    return u.reports


def _random_partition(rng: random.Random, n: int, parts: int) -> tuple[int, ...] | None:
    """n as an ordered sum of `parts` sizes in {1, 2}, or None if impossible."""
    if not parts <= n <= 2 * parts:
        return None
    twos = n - parts
    flags = [1] * parts
    for idx in rng.sample(range(parts), twos):
        flags[idx] = 2
    return tuple(flags)


# ---------------------------------------------------------------------------
# suite: extend
# ---------------------------------------------------------------------------


def _unit_extend(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "extend", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    cap = _SIZE_CAP[q]
    while True:
        pos, lab = _random_shape(rng, q, cap=cap)
        if q ** (lab.n + 1) <= cap:
            break
    space = BlockSpace(pos, lab, make_field(q), _random_weight(rng, q))
    code = _random_code(rng, space, 1, 2)
    inst = _instance_of(code)
    u = _Unit(child, inst.digest())

    ext = extended_code(code).code
    mw = space.weight.max_weight
    d = code.min_distance(max_space)
    de = ext.min_distance(max_space)
    u.hard("extend-mindist", d <= de <= d + mw, {"d": d, "d_ext": de, "M_w": mw})

    rho = _covering_with_oracle(u, code, "code", max_space)
    rho_e = _covering_with_oracle(u, ext, "extended", max_space)
    u.hard(
        "extend-covering", rho <= rho_e <= rho + mw, {"rho": rho, "rho_ext": rho_e, "M_w": mw}
    )
    return u.reports


# ---------------------------------------------------------------------------
# suite: puncture
# ---------------------------------------------------------------------------


def _unit_puncture(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "puncture", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3, 5], q_filter)
    if q is None:
        return []
    while True:
        pos, lab = _random_shape(rng, q)
        if lab.s >= 2:
            break
    space = BlockSpace(pos, lab, make_field(q), _random_weight(rng, q))
    code = _random_code(rng, space, 1, {2: 4, 3: 3, 5: 2}[q])
    block = rng.randint(1, space.s)
    inst = _instance_of(code)
    u = _Unit(child, _pair_digest(inst.digest(), f"block={block}"))

    pun = punctured_code(code, block).code
    sl = space.labeling.block_slice(block)

    ok, witness = True, {}
    step = max(1, space.size // 256)
    for rank in range(0, space.size, step):
        v = space.unrank(rank)
        star = v[: sl.start] + v[sl.stop :]
        if pun.space.wpb_weight(star) > space.wpb_weight(v):
            ok, witness = False, {"vector": list(v), "block": block}
            break
    u.hard("puncture-vector-weight", ok, witness)

    # d(C*) <= d(C) needs some minimum-distance pair to survive puncturing.
    # When a nonzero codeword lives entirely in the punctured block the pair
    # may collapse and the published bound can fail, so that regime is soft.
    cw = code.codeword_array(max_space)
    outside = np.ones(space.n, dtype=bool)
    outside[sl] = False
    collapse = bool(
        ((cw[:, outside] == 0).all(axis=1) & (cw != 0).any(axis=1)).any()
    )
    d = code.min_distance(max_space)
    if pun.size < 2:
        u.na("puncture-mindist", "punctured code has a single word")
    else:
        dp = pun.min_distance(max_space)
        witness = {"d": d, "d_punctured": dp, "block": block, "collapse": collapse}
        if collapse:
            u.soft("puncture-mindist", dp <= d, witness)
        else:
            u.hard("puncture-mindist", dp <= d, witness)

    rho = _covering_with_oracle(u, code, "code", max_space)
    rho_p = _covering_with_oracle(u, pun, "punctured", max_space)
    u.hard("puncture-covering", rho_p <= rho, {"rho": rho, "rho_punctured": rho_p})
    return u.reports


# ---------------------------------------------------------------------------
# suites: tensor products
# ---------------------------------------------------------------------------


def _top_block_index(code_space: BlockSpace, vec) -> int:
    supp = code_space.block_support(vec)
    return max(supp) if supp else 0


def _sample_tensor_pair(
    rng: random.Random,
    q: int,
    shapes: tuple[str, str],
    trivial: bool,
    word_cap: int,
    ambient_cap: int | None,
    dim_min: int = 1,
) -> tuple[Code, Code] | None:
    weight_pool = ["hamming", "lee"] if make_field(q).e == 1 else ["hamming"]
    wname = rng.choice(weight_pool)
    f = make_field(q)
    weight = lee_weight(f) if wname == "lee" else hamming_weight(f)
    for _ in range(60):
        s = rng.randint(1, 3)
        t = rng.randint(1, 3)
        sizes1 = (1,) * s if trivial else tuple(rng.randint(1, 2) for _ in range(s))
        sizes2 = (1,) * t if trivial else tuple(rng.randint(1, 2) for _ in range(t))
        n1, n2 = sum(sizes1), sum(sizes2)
        if ambient_cap is not None and q ** (n1 * n2) > ambient_cap:
            continue
        d1 = rng.randint(dim_min, min(n1, 2))
        d2 = rng.randint(dim_min, min(n2, 2))
        if q ** (d1 + d2) > word_cap:
            continue
        p1 = posets.chain(s) if shapes[0] == "chain" else posets.antichain(s)
        p2 = posets.chain(t) if shapes[1] == "chain" else posets.antichain(t)
        c1 = _random_code(rng, BlockSpace(p1, Labeling(sizes1), f, weight), dim_min, d1)
        c2 = _random_code(rng, BlockSpace(p2, Labeling(sizes2), f, weight), dim_min, d2)
        return c1, c2
    return None


_SHAPE_MIX = [("chain", "antichain"), ("antichain", "antichain"), ("chain", "chain"),
              ("antichain", "chain")]


def _unit_tensor_mindist(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "tensor-mindist", unit)
    rng = random.Random(child)
    mode = unit % 3  # 0: general shapes, 1: trivial labelings, 2: Lee corollary
    if mode == 2:
        q = _pick_q(rng, [3, 5, 7], q_filter)
        trivial = True
    else:
        q = _pick_q(rng, [2, 3, 5], q_filter)
        trivial = mode == 1
    if q is None:
        return []
    shapes = _SHAPE_MIX[unit % 4]
    pair = _sample_tensor_pair(rng, q, shapes, trivial, word_cap=128, ambient_cap=None)
    if pair is None:
        return []
    c1, c2 = pair
    if mode == 2:
        c1 = c1.with_weight(lee_weight(make_field(q)))
        c2 = c2.with_weight(lee_weight(make_field(q)))
    i1, i2 = _instance_of(c1), _instance_of(c2)
    u = _Unit(child, _pair_digest(i1.digest(), i2.digest()))

    space1, space2 = c1.space, c2.space
    weight = space1.weight
    mw, m_small = weight.max_weight, weight.min_nonzero_weight
    s, t = space1.s, space2.s
    p_chain, q_chain = space1.poset.is_chain(), space2.poset.is_chain()
    p_anti, q_anti = space1.poset.is_antichain(), space2.poset.is_antichain()
    d1h = _hamming_view(c1).min_distance(max_space)
    d2h = _hamming_view(c2).min_distance(max_space)
    d1w = c1.min_distance(max_space)
    d2w = c2.min_distance(max_space)

    car = tensor_code(c1, c2, "cartesian").code
    lex = tensor_code(c1, c2, "lex").code
    d_car = car.min_distance(max_space)
    d_lex = lex.min_distance(max_space)
    base = {"d_car": d_car, "d_lex": d_lex, "d1h": d1h, "d2h": d2h, "d1w": d1w, "d2w": d2w}

    # exact weight formula for rank-one words under chain x chain
    if p_chain and q_chain:
        ok, witness = True, {}
        pairs = [(a, b) for a in c1.codewords() if any(a) for b in c2.codewords() if any(b)]
        if len(pairs) > 200:
            pairs = [pairs[rng.randrange(len(pairs))] for _ in range(200)]
        for a, b in pairs:
            lam = _top_block_index(space1, a)
            delta = _top_block_index(space2, b)
            tv = tensor_vector(space1.field, space1.labeling, space2.labeling, a, b)
            flat = (lam - 1) * t + delta
            expect = car.space.block_max_weight(tv, flat) + (lam * delta - 1) * mw
            got = car.space.wpb_weight(tv)
            if got != expect:
                ok = False
                witness = {"u": list(a), "v": list(b), "weight": got, "expected": expect}
                break
        u.hard("tensor-weight-chain-chain", ok, witness)
    else:
        u.na("tensor-weight-chain-chain", "needs two chains")

    def soft_between(check: str, lo: int, d: int, hi: int) -> None:
        u.soft(check, lo <= d <= hi, dict(base, lower=lo, upper=hi))

    # cartesian-product distance sandwiches
    if p_chain and q_anti and not (s == 1 and t == 1):
        soft_between(
            "tensor-mindist-car-chain-anti",
            d2h * (d1h - 1) * mw + d2w,
            d_car,
            d1h * d2h * mw,
        )
    if p_anti and q_chain and not (s == 1 and t == 1):
        soft_between(
            "tensor-mindist-car-anti-chain",
            d1h * (d2h - 1) * mw + d1w,
            d_car,
            d1h * d2h * mw,
        )
    if p_anti and q_anti:
        soft_between(
            "tensor-mindist-car-anti-anti",
            d1h * d2h * m_small,
            d_car,
            d1h * d2h * mw,
        )
    if p_chain and q_chain:
        soft_between(
            "tensor-mindist-car-chain-chain",
            (d1h * d2h - 1) * mw + m_small,
            d_car,
            d1h * d2h * mw,
        )
        if trivial:
            expect = (d1h * d2h - 1) * mw + m_small
            u.soft("tensor-trivial-car", d_car == expect, dict(base, expected=expect))

    # lexicographic-product distance sandwiches
    if p_chain and q_anti:
        soft_between(
            "tensor-mindist-lex-chain-anti",
            (d1h - 1) * t * mw + d2w,
            d_lex,
            (d1h - 1) * t * mw + d2h * mw,
        )
        if trivial:
            expect = (d1h - 1) * t * mw + d2w
            u.soft(
                "tensor-trivial-lex-chain-anti", d_lex == expect, dict(base, expected=expect)
            )
    if p_chain and q_chain:
        soft_between(
            "tensor-mindist-lex-chain-chain",
            m_small + (d1h - 1) * t * mw + (d2h - 1) * mw,
            d_lex,
            (d1h - 1) * t * mw + d2h * mw,
        )
        if trivial:
            expect = m_small + (d1h - 1) * t * mw + (d2h - 1) * mw
            u.soft(
                "tensor-trivial-lex-chain-chain", d_lex == expect, dict(base, expected=expect)
            )
    if p_anti and q_anti:
        soft_between(
            "tensor-mindist-lex-anti-anti",
            d1h * d2h * m_small,
            d_lex,
            d1h * d2h * mw,
        )
    if p_anti and q_chain:
        soft_between(
            "tensor-mindist-lex-anti-chain",
            d1w + d1h * (d2h - 1) * mw,
            d_lex,
            d1h * d2h * mw,
        )

    # the Lee-weight special case with trivial labelings
    if mode == 2:
        half = space1.q // 2
        if p_anti and q_anti:
            u.soft(
                "tensor-lee-corollary",
                d1h * d2h <= d_car <= d1h * d2h * half,
                dict(base, case="anti-anti"),
            )
        elif p_chain and q_anti:
            u.soft(
                "tensor-lee-corollary",
                d2h * (d1h - 1) * half + d2w <= d_car <= d1h * d2h * half,
                dict(base, case="chain-anti"),
            )
        elif p_chain and q_chain:
            lhs = (d1w - 1) * d2h + d2w
            rhs = (d2w - 1) * d1h + d1w
            u.soft(
                "tensor-lee-corollary",
                d_car == lhs == rhs,
                dict(base, case="chain-chain", form1=lhs, form2=rhs),
            )
    return u.reports


def _unit_tensor_covering(
    seed: int, unit: int, max_space: int, q_filter: int | None = None
) -> list[CheckReport]:
    child = derive_seed(seed, "tensor-covering", unit)
    rng = random.Random(child)
    q = _pick_q(rng, [2, 3], q_filter)
    if q is None:
        return []
    shapes = _SHAPE_MIX[unit % 4]
    trivial = rng.random() < 0.5
    pair = _sample_tensor_pair(
        rng,
        q,
        shapes,
        trivial,
        word_cap=64,
        ambient_cap={2: 512, 3: 729}[q],
        dim_min=0,
    )
    if pair is None:
        return []
    c1, c2 = pair
    i1, i2 = _instance_of(c1), _instance_of(c2)
    u = _Unit(child, _pair_digest(i1.digest(), i2.digest()))

    space1, space2 = c1.space, c2.space
    weight = space1.weight
    mw, m_small = weight.max_weight, weight.min_nonzero_weight
    s, t = space1.s, space2.s
    alpha_s = space1.labeling.sizes[-1]
    beta_t = space2.labeling.sizes[-1]
    p_chain, q_chain = space1.poset.is_chain(), space2.poset.is_chain()
    p_anti, q_anti = space1.poset.is_antichain(), space2.poset.is_antichain()

    ham = hamming_weight(space1.field)
    rho1 = _covering_with_oracle(u, c1, "C1", max_space)
    rho2 = _covering_with_oracle(u, c2, "C2", max_space)
    big_d1 = c1.max_poset_weight(ham, max_space)
    big_d2 = c2.max_poset_weight(ham, max_space)
    r1 = _hamming_view(c1).covering_radius(max_space)
    r2 = _hamming_view(c2).covering_radius(max_space)

    car = tensor_code(c1, c2, "cartesian").code
    lex = tensor_code(c1, c2, "lex").code
    rho_car = car.covering_radius(max_space)
    rho_lex = lex.covering_radius(max_space)
    base = {
        "rho_car": rho_car,
        "rho_lex": rho_lex,
        "rho1": rho1,
        "rho2": rho2,
        "R1": r1,
        "R2": r2,
        "D1": big_d1,
        "D2": big_d2,
        "s": s,
        "t": t,
    }

    floor = max(s * rho2, t * rho1)
    u.hard("tensor-covering-lower-car", rho_car >= floor, dict(base, lower=floor))
    u.hard("tensor-covering-lower-lex", rho_lex >= floor, dict(base, lower=floor))

    # cartesian cases
    if p_chain and q_anti:
        if big_d1 < s:
            u.soft("tensor-covering-car-1a", rho_car == s * t * mw, base)
        else:
            u.na("tensor-covering-car-1a", "D1 = s")
        u.soft(
            "tensor-covering-car-1b",
            rho_car >= r2 * (s - 1) * mw + r2 * m_small,
            base,
        )
        if big_d1 == s and alpha_s == 1:
            u.soft(
                "tensor-covering-car-1c",
                rho_car <= (s - 1) * t * mw + rho2,
                base,
            )
        else:
            u.na("tensor-covering-car-1c", "needs D1 = s and alpha_s = 1")
    if p_chain and q_chain:
        if big_d1 < s or big_d2 < t:
            u.soft("tensor-covering-car-2a", rho_car == s * t * mw, base)
        else:
            u.na("tensor-covering-car-2a", "D1 = s and D2 = t")
        if big_d1 == s and big_d2 == t:
            if alpha_s == 1:
                u.soft(
                    "tensor-covering-car-2b",
                    rho_car <= (s - 1) * t * mw + rho2,
                    base,
                )
            if beta_t == 1:
                u.soft(
                    "tensor-covering-car-2c",
                    rho_car <= (t - 1) * s * mw + rho1,
                    base,
                )
            if alpha_s == 1 and beta_t == 1:
                u.soft(
                    "tensor-covering-car-2d",
                    rho_car <= min((s - 1) * t * mw + rho2, (t - 1) * s * mw + rho1),
                    base,
                )
        u.soft(
            "tensor-covering-car-2e",
            rho_car >= max((s * r2 - 1) * mw + m_small, (t * r1 - 1) * mw + m_small),
            base,
        )

    # lexicographic cases
    if p_chain:
        if big_d1 < s or (q_chain and big_d2 < t):
            u.soft("tensor-covering-lex-1a", rho_lex == s * t * mw, base)
        else:
            u.na("tensor-covering-lex-1a", "no deficient trailing projection")
        if big_d1 == s and big_d2 == t and alpha_s == 1:
            u.soft(
                "tensor-covering-lex-1b",
                rho_lex <= (s - 1) * t * mw + rho2,
                base,
            )
        else:
            u.na("tensor-covering-lex-1b", "needs D1 = s, D2 = t, alpha_s = 1")
        u.soft(
            "tensor-covering-lex-1c",
            rho_lex >= max((s - 1) * t * mw + rho2, t * rho1),
            base,
        )
    if p_anti and q_chain:
        if big_d2 < t:
            u.soft("tensor-covering-lex-2a", rho_lex == s * t * mw, base)
        else:
            u.na("tensor-covering-lex-2a", "D2 = t")
        if big_d2 == t and beta_t == 1:
            u.soft(
                "tensor-covering-lex-2b",
                rho_lex <= (t - 1) * s * mw + rho1,
                base,
            )
        else:
            u.na("tensor-covering-lex-2b", "needs D2 = t and beta_t = 1")
    return u.reports


# ---------------------------------------------------------------------------
# registry and runner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    tags: frozenset[str]
    checks: tuple[str, ...]
    default_trials: int
    unit_fn: Callable[[int, int, int, int | None], list[CheckReport]]

    def unit_count(self, trials: int | None) -> int:
        n = trials if trials is not None else self.default_trials
        if self.name == "ball-nesting":
            return min(n, len(_BALL_ENVELOPE))
        return n


REGISTRY: dict[str, Suite] = {
    s.name: s
    for s in [
        Suite(
            "metric-axioms",
            frozenset({"metric", "axioms"}),
            ("metric-axioms",),
            50,
            _unit_metric_axioms,
        ),
        Suite(
            "reductions",
            frozenset({"metric"}),
            (
                "reduction-hamming",
                "reduction-lee",
                "reduction-nrt",
                "reduction-poset-block",
            ),
            48,
            _unit_reductions,
        ),
        Suite(
            "ball-nesting",
            frozenset({"balls", "chain"}),
            ("ball-nesting-chain",),
            len(_BALL_ENVELOPE),
            _unit_ball_nesting,
        ),
        Suite(
            "chain-radii",
            frozenset({"radii", "chain"}),
            (
                "packing-radius-chain-lower",
                "packing-radius-chain-equality",
                "covering-radius-chain",
                "covering-oracle",
            ),
            200,
            _unit_chain_radii,
        ),
        Suite(
            "direct-sum",
            frozenset({"constructions"}),
            (
                "dsum-mindist-disjoint",
                "dsum-mindist-linear",
                "dsum-covering-disjoint",
                "dsum-covering-linear",
                "dsum-coset-leader-disjoint",
                "dsum-coset-leader-linear",
                "covering-oracle",
            ),
            100,
            _unit_direct_sum,
        ),
        Suite(
            "plotkin",
            frozenset({"constructions"}),
            (
                "plotkin-mindist-disjoint",
                "plotkin-mindist-linear",
                "plotkin-refined-disjoint",
                "plotkin-refined-linear",
                "plotkin-covering-disjoint",
                "plotkin-covering-linear",
                "covering-oracle",
            ),
            100,
            _unit_plotkin,
        ),
        Suite(
            "extend",
            frozenset({"constructions"}),
            ("extend-mindist", "extend-covering", "covering-oracle"),
            100,
            _unit_extend,
        ),
        Suite(
            "puncture",
            frozenset({"constructions"}),
            (
                "puncture-vector-weight",
                "puncture-mindist",
                "puncture-covering",
                "covering-oracle",
            ),
            100,
            _unit_puncture,
        ),
        Suite(
            "tensor-mindist",
            frozenset({"constructions", "tensor"}),
            (
                "tensor-weight-chain-chain",
                "tensor-mindist-car-chain-anti",
                "tensor-mindist-car-anti-chain",
                "tensor-mindist-car-anti-anti",
                "tensor-mindist-car-chain-chain",
                "tensor-mindist-lex-chain-anti",
                "tensor-mindist-lex-chain-chain",
                "tensor-mindist-lex-anti-anti",
                "tensor-mindist-lex-anti-chain",
                "tensor-trivial-car",
                "tensor-trivial-lex-chain-anti",
                "tensor-trivial-lex-chain-chain",
                "tensor-lee-corollary",
            ),
            100,
            _unit_tensor_mindist,
        ),
        Suite(
            "tensor-covering",
            frozenset({"constructions", "tensor"}),
            (
                "tensor-covering-lower-car",
                "tensor-covering-lower-lex",
                "tensor-covering-car-1a",
                "tensor-covering-car-1b",
                "tensor-covering-car-1c",
                "tensor-covering-car-2a",
                "tensor-covering-car-2b",
                "tensor-covering-car-2c",
                "tensor-covering-car-2d",
                "tensor-covering-car-2e",
                "tensor-covering-lex-1a",
                "tensor-covering-lex-1b",
                "tensor-covering-lex-1c",
                "tensor-covering-lex-2a",
                "tensor-covering-lex-2b",
                "covering-oracle",
            ),
            100,
            _unit_tensor_covering,
        ),
    ]
}


def resolve_filters(filters: Sequence[str]) -> dict[str, set[str] | None]:
    """Map suite name -> selected check ids (None = all) for the given filters.

    A filter matches a suite name, a tag, or an individual check id.
    """
    wanted: dict[str, set[str] | None] = {}
    unknown = []
    for f in filters:
        if f == "all":
            for name in REGISTRY:
                wanted[name] = None
            continue
        hit = False
        for name, suite in REGISTRY.items():
            if f == name or f in suite.tags:
                wanted[name] = None
                hit = True
            elif f in suite.checks:
                hit = True
                if name in wanted and wanted[name] is None:
                    continue  # whole suite already selected
                wanted.setdefault(name, set())
                wanted[name].add(f)
        if not hit:
            unknown.append(f)
    if unknown:
        raise ValueError(
            f"unknown suite/tag/check filters: {unknown}; known suites: {sorted(REGISTRY)}"
        )
    return wanted


def _run_unit(args: tuple[str, int, int, int, int | None]) -> list[CheckReport]:
    name, seed, unit, max_space, q = args
    return REGISTRY[name].unit_fn(seed, unit, max_space, q)


def verify_suite(
    filters: Sequence[str] = ("all",),
    seed: int = 0,
    trials: int | None = None,
    max_space: int = DEFAULT_MAX_SPACE,
    jobs: int = 1,
    q: int | None = None,
) -> list[CheckReport]:
    """Run the selected suites and return canonically ordered reports.

    ``q`` restricts instance generation to one field size; suites whose
    envelope does not contain it contribute no reports.
    """
    if q is not None and q not in (2, 3, 5, 7):
        raise ValueError(f"--q must be one of 2, 3, 5, 7; got {q}")
    wanted = resolve_filters(filters)
    tasks: list[tuple[str, int, int, int, int | None]] = []
    for name in REGISTRY:
        if name not in wanted:
            continue
        for unit in range(REGISTRY[name].unit_count(trials)):
            tasks.append((name, seed, unit, max_space, q))
    if jobs > 1:
        with Pool(jobs) as pool:
            chunks = pool.map(_run_unit, tasks)
    else:
        chunks = [_run_unit(t) for t in tasks]
    reports: list[CheckReport] = []
    for (name, _, _, _, _), chunk in zip(tasks, chunks):
        allowed = wanted[name]
        for rep in chunk:
            if allowed is None or rep.check in allowed:
                reports.append(rep)
    reports.sort(key=lambda r: (r.check, r.digest, r.seed))
    return reports


def to_jsonl(reports: Iterable[CheckReport]) -> str:
    return "".join(r.line() + "\n" for r in reports)


def discrepancies(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return [r for r in reports if r.status == "soft-discrepancy"]


def hard_failures(reports: Iterable[CheckReport]) -> list[CheckReport]:
    return [r for r in reports if r.status == "fail"]


def summarize(reports: Sequence[CheckReport]) -> str:
    """A human-readable per-check table of status counts."""
    by_check: dict[str, dict[str, int]] = {}
    elapsed: dict[str, float] = {}
    for r in reports:
        row = by_check.setdefault(r.check, {})
        row[r.status] = row.get(r.status, 0) + 1
        elapsed[r.check] = elapsed.get(r.check, 0.0) + r.elapsed
    statuses = ["pass", "fail", "soft-discrepancy", "not-applicable"]
    width = max([len(c) for c in by_check] + [5])
    lines = [
        f"{'check':<{width}}  {'pass':>6} {'fail':>6} {'soft':>6} {'n/a':>6} {'sec':>7}"
    ]
    for check in sorted(by_check):
        row = by_check[check]
        cells = " ".join(f"{row.get(s, 0):>6}" for s in statuses)
        lines.append(f"{check:<{width}}  {cells} {elapsed[check]:>7.2f}")
    total = {s: sum(r.get(s, 0) for r in by_check.values()) for s in statuses}
    cells = " ".join(f"{total.get(s, 0):>6}" for s in statuses)
    lines.append(f"{'TOTAL':<{width}}  {cells} {sum(elapsed.values()):>7.2f}")
    return "\n".join(lines)
