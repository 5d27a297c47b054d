"""Bipartition extraction for dense Fano-free hypergraphs.

The pipeline peels low-degree vertices, fixes a tetrahedron S, works in the
reduced link multigraph G(S) and then either classifies the vertices around a
multiplicity-4 anchor pair (the span <= 10 case) or shows that a heavy
triple forces a Fano plane (the span >= 11 case).  Every branch in which the
underlying argument reaches a contradiction returns a checkable certificate
instead: a Fano witness inside H, or a stage violation with the numbers
that broke.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from fanostab import kernels
from fanostab.constants import DELTA_MAX, ChainReport, verify_inequalities
from fanostab.detect import (
    FanoWitness,
    PatternDefect,
    _heavy_cliques5,
    fano_through_edge,
    heavy_quadruple,
    find_tetrahedron,
    link_structures,
    quad_patterns,
    rainbow_witness,
    witness_for_quad,
)
from fanostab.hypercore import Hypergraph3, Multigraph, edges_within, ex_fano

MODES = ("strict", "relaxed")

STAGES = (
    "config",
    "density",
    "peel",
    "tetrahedron",
    "multigraph-peel",
    "span",
    "case1-anchor-edge",
    "case1-classify",
    "case1-C",
    "case1-prune-B",
    "case1-prune-A",
    "case2",
    "reassign",
    "inside-edges",
)


def _exact(x) -> Fraction:
    """Rational value of x; floats go through their shortest decimal form."""
    return Fraction(repr(x)) if isinstance(x, float) else Fraction(x)


@dataclass(frozen=True)
class StabilityConfig:
    delta: Fraction
    mode: str = "relaxed"
    drop_lower_order: bool = False
    seed: int = 0

    def __post_init__(self):
        d = _exact(self.delta)
        object.__setattr__(self, "delta", d)
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        if not 0 < d < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.mode == "strict" and not d < DELTA_MAX:
            raise ValueError("strict mode requires delta < (1/36)^8")

    @classmethod
    def from_delta1(cls, delta1, **kw) -> "StabilityConfig":
        """Config whose delta_1 = (5/3) delta^(1/2) equals ``delta1``."""
        d1 = _exact(delta1)
        if d1 <= 0:
            raise ValueError("delta_1 must be positive")
        return cls(delta=(3 * d1 / 5) ** 2, **kw)


# delta-ledger comparisons, exact: c * delta^e against a rational x

def _root_lt(c: Fraction, delta: Fraction, e: Fraction, x: Fraction) -> bool:
    """c * delta**e < x for c >= 0."""
    if x <= 0:
        return False
    k = e.denominator
    return c**k * delta**e.numerator < x**k


def _root_le(c: Fraction, delta: Fraction, e: Fraction, x: Fraction) -> bool:
    if x < 0:
        return False
    k = e.denominator
    return c**k * delta**e.numerator <= x**k


# -- reports ---------------------------------------------------------------------------

@dataclass
class StageTrace:
    stages: list[str] = field(default_factory=list)
    sizes: dict[str, int] = field(default_factory=dict)
    peeled: dict[str, list[int]] = field(default_factory=dict)
    S: tuple[int, ...] | None = None
    case: int | None = None
    anchor: tuple[int, ...] | None = None
    a_hist: list[int] | None = None
    classes: dict[str, int] | None = None
    e_prime: int | None = None
    m: int | None = None
    fixed_pairs: dict[str, tuple[int, int]] = field(default_factory=dict)
    split: tuple[tuple[int, int], tuple[int, int]] | None = None
    removed_edges: int = 0

    def enter(self, stage: str) -> None:
        assert stage in STAGES, stage
        self.stages.append(stage)

    def to_json(self) -> dict:
        return {
            "stages": list(self.stages),
            "sizes": dict(self.sizes),
            "peeled": {k: list(v) for k, v in self.peeled.items()},
            "S": None if self.S is None else list(self.S),
            "case": self.case,
            "anchor": None if self.anchor is None else list(self.anchor),
            "aHist": self.a_hist,
            "classes": self.classes,
            "ePrime": self.e_prime,
            "m": self.m,
            "fixedPairs": {k: list(v) for k, v in self.fixed_pairs.items()},
            "split": None if self.split is None else [list(self.split[0]), list(self.split[1])],
            "removedEdges": self.removed_edges,
        }


@dataclass(frozen=True)
class StageViolation:
    stage: str
    description: str
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"type": "violation", "stage": self.stage, "description": self.description,
                "data": _jsonable(self.data)}


@dataclass
class FailureCertificate:
    variant: FanoWitness | StageViolation
    trace: StageTrace

    @property
    def is_witness(self) -> bool:
        return isinstance(self.variant, FanoWitness)

    def to_json(self) -> dict:
        if self.is_witness:
            cert = {"type": "fano", "via": self.variant.via, **self.variant.to_json()}
        else:
            cert = self.variant.to_json()
        return {"A": None, "B": None, "eA": None, "eB": None, "badPairs": None,
                "trace": self.trace.to_json(), "certificate": cert}


@dataclass(frozen=True)
class ClaimCheck:
    split: tuple[tuple[int, int], tuple[int, int]]
    viol_i: int
    viol_ii: int
    viol_iii: int

    @property
    def total(self) -> int:
        return self.viol_i + self.viol_ii + self.viol_iii

    def to_json(self) -> dict:
        return {"split": [list(self.split[0]), list(self.split[1])],
                "i": self.viol_i, "ii": self.viol_ii, "iii": self.viol_iii}


@dataclass(frozen=True)
class ClaimReport:
    """Violation counts for the minimizing ordered split, plus the given one."""

    best: ClaimCheck
    given: ClaimCheck | None

    @property
    def split(self):
        return self.best.split

    @property
    def viol_i(self) -> int:
        return self.best.viol_i

    @property
    def viol_ii(self) -> int:
        return self.best.viol_ii

    @property
    def viol_iii(self) -> int:
        return self.best.viol_iii

    def to_json(self) -> dict:
        return {"best": self.best.to_json(), "given": None if self.given is None else self.given.to_json()}


@dataclass
class PartitionReport:
    A: tuple[int, ...]
    B: tuple[int, ...]
    eA: int
    eB: int
    bad_pairs: ClaimReport
    chain: ChainReport
    trace: StageTrace
    n1: int
    within_claim_bound: bool
    sides_quarter: bool

    def to_json(self) -> dict:
        return {
            "A": list(self.A),
            "B": list(self.B),
            "eA": self.eA,
            "eB": self.eB,
            "badPairs": {**self.bad_pairs.to_json(), "total": self.bad_pairs.best.total,
                         "withinClaimBound": self.within_claim_bound, "sidesAtLeastQuarter": self.sides_quarter},
            "chain": {"deltaMax": str(self.chain.delta_max), "certified": self.chain.certified},
            "trace": self.trace.to_json(),
            "certificate": None,
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


class _Stop(Exception):
    def __init__(self, variant):
        super().__init__(variant)
        self.variant = variant


# -- claim verification ------------------------------------------------------------------

def _ordered_splits(S):
    a, b, c, d = S
    for (x, y), (z, w) in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
        yield ((x, y), (z, w))
        yield ((z, w), (x, y))


def verify_claim(H: Hypergraph3, S, split, A, B) -> ClaimReport:
    """Count pairs breaking the three link conditions of the bipartition.

    (i) pairs inside A lie in L(a), L(b) and in neither L(c) nor L(d);
    (ii) pairs inside B the other way round; (iii) cross pairs lie in all
    four links.  Apexes are excluded from A and B.  All six ordered splits
    of S are tried and the minimizing one is reported next to ``split``.
    """
    S = tuple(sorted(S))
    if len(S) != 4:
        raise ValueError("S must have four vertices")
    sset = set(S)
    A_ = sorted(set(A) - sset)
    B_ = sorted(set(B) - sset)
    if set(A_) & set(B_):
        raise ValueError("A and B must be disjoint")
    bits = H.link_bits

    def mask(u: int, v: int) -> int:
        return sum(1 << i for i, x in enumerate(S) if bits[x][u] >> v & 1)

    inA = Counter(mask(u, v) for u, v in combinations(A_, 2))
    inB = Counter(mask(u, v) for u, v in combinations(B_, 2))
    cross = Counter(mask(u, v) for u in A_ for v in B_)
    full = 15

    def check(sp) -> ClaimCheck:
        (a, b), (c, d) = sp
        ma = (1 << S.index(a)) | (1 << S.index(b))
        mc = (1 << S.index(c)) | (1 << S.index(d))
        return ClaimCheck(
            (tuple(sorted((a, b))), tuple(sorted((c, d)))),
            sum(k for m, k in inA.items() if m != ma),
            sum(k for m, k in inB.items() if m != mc),
            sum(k for m, k in cross.items() if m != full),
        )

    checks = [check(sp) for sp in _ordered_splits(S)]
    best = min(checks, key=lambda c: (c.total, c.split))
    given = None
    if split is not None:
        (a, b), (c, d) = split
        if sorted((a, b, c, d)) != list(S):
            raise ValueError("split must partition S")
        given = check(((a, b), (c, d)))
    return ClaimReport(best, given)


# -- stage 0: minimum degree peel --------------------------------------------------------

def peel_min_degree(H: Hypergraph3, cfg: StabilityConfig, trace: StageTrace | None = None):
    """Delete vertices below (1 - delta_1) 3n^2/8 + 3n until none remain.

    Returns ``(V0, removed_edges)``; raises on the contradiction bound.
    """
    trace = trace if trace is not None else StageTrace()
    n = H.n
    delta = cfg.delta
    extra = 0 if cfg.drop_lower_order else 3 * n
    base = Fraction(3 * n * n, 8) + extra
    c = Fraction(5, 8) * n * n  # delta_1 * 3n^2/8 = c * delta^(1/2)
    half = Fraction(1, 2)

    def low(d: int) -> bool:
        # d < (1 - delta_1) 3n^2/8 + extra  <=>  c delta^(1/2) < base - d
        return _root_lt(c, delta, half, base - d)

    def exhausted(k: int) -> bool:
        # k >= delta_2 n - slack, delta_2 = delta^(1/2); at least one deletion
        if k < 1:
            return False
        slack = 0 if cfg.drop_lower_order else 4
        return _root_le(Fraction(n), delta, half, Fraction(k + slack))

    deg = list(H.degree)
    alive = [True] * n
    incident = [[] for _ in range(n)]
    for e in H.edges:
        for v in e:
            incident[v].append(e)
    deleted: list[int] = []
    removed = 0
    while True:
        victim = next((v for v in range(n) if alive[v] and low(deg[v])), None)
        if victim is None:
            break
        alive[victim] = False
        deleted.append(victim)
        for e in incident[victim]:
            if all(alive[u] or u == victim for u in e):
                removed += 1
                for u in e:
                    if u != victim:
                        deg[u] -= 1
        if exhausted(len(deleted)):
            break
    trace.peeled["peel"] = deleted
    trace.removed_edges = removed
    V0 = tuple(v for v in range(n) if alive[v])
    if not V0 or exhausted(len(deleted)):
        raise _Stop(StageViolation("peel", "peel-exhausted", {
            "deleted": len(deleted), "n": n, "delta": delta, "dropLowerOrder": cfg.drop_lower_order,
        }))
    return V0, removed


# -- helpers on G(S) -----------------------------------------------------------------------

def _quad_witness(H: Hypergraph3, S, quad, stage: str) -> FanoWitness:
    w = rainbow_witness(H, S, quad)
    if w is None:
        raise PatternDefect(f"{stage}: quadruple {tuple(quad)} spans >= 21 but has no rainbow assignment")
    return w


def _multigraph_peel(H, S, G: Multigraph, V1, delta, trace):
    n1 = len(V1)
    M = G.matrix()
    alive = set(V1)
    deg = {v: int(sum(M[v, u] for u in V1)) for v in V1}
    # delta_3 = (5/3)^(1/2) delta^(1/4): deg < (1 - delta_3) 3 n1  <=>  3 n1 delta_3 < 3 n1 - deg
    c4 = (3 * n1) ** 4 * Fraction(25, 9)  # (3 n1 delta_3)^4 = c4 * delta

    def low(d: int) -> bool:
        x = 3 * n1 - d
        return x > 0 and c4 * delta < Fraction(x) ** 4

    def too_many(k: int) -> bool:
        # k >= delta_4 n1 with delta_4 = delta_3
        return k > 0 and Fraction(n1) ** 4 * Fraction(25, 9) * delta <= Fraction(k) ** 4

    deleted = []
    while True:
        victim = next((v for v in sorted(alive) if low(deg[v])), None)
        if victim is None:
            break
        alive.discard(victim)
        deleted.append(victim)
        for u in alive:
            deg[u] -= int(M[u, victim])
        if too_many(len(deleted)):
            break
    trace.peeled["multigraph-peel"] = deleted
    if too_many(len(deleted)) or not alive:
        q = heavy_quadruple(G, V1)
        if q is not None:
            raise _Stop(_quad_witness(H, S, q, "multigraph-peel"))
        raise _Stop(StageViolation("multigraph-peel", "multigraph-peel-exhausted", {
            "deleted": len(deleted), "n1": n1, "edges": G.edge_count(),
        }))
    return tuple(sorted(alive))


# -- span >= 11 ----------------------------------------------------------------------------

def case2_analyze(H: Hypergraph3, S, G: Multigraph, triple, vertices=None, trace: StageTrace | None = None):
    """Follow the heavy-triple argument to a certificate.

    ``triple`` spans at least 11 edges of G.  Returns a FanoWitness when one
    materializes, else a StageViolation carrying the edge count that the
    argument says cannot occur for small delta.
    """
    trace = trace if trace is not None else StageTrace()
    S = tuple(sorted(S))
    t = tuple(triple)
    m = G.m
    if m(t[0], t[1]) + m(t[0], t[2]) + m(t[1], t[2]) < 11:
        raise ValueError("triple spans fewer than 11 edges")
    # normalize: p meets both multiplicity-4 pairs
    p = next(x for x in t if all(m(x, y) == 4 for y in t if y != x))
    q, r = sorted(y for y in t if y != p)
    trace.anchor = (p, q, r)
    verts = sorted(vertices if vertices is not None else (v for v in range(G.n) if v not in S))
    others = [s for s in verts if s not in (p, q, r)]
    hist = [0] * 13
    conn = {}
    for s in others:
        conn[s] = m(s, p) + m(s, q) + m(s, r)
        hist[conn[s]] += 1
    trace.a_hist = hist
    for s in others:
        if conn[s] >= 10:
            return _quad_witness(H, S, (p, q, r, s), "case2")
    V3 = [s for s in others if conn[s] >= 9]
    trace.peeled["case2"] = [s for s in others if conn[s] < 9]
    trace.sizes["n3"] = len(V3) + 3
    for s in V3:
        pats = quad_patterns(G, (p, q, r, s))
        if pats:
            return witness_for_quad(H, S, (p, q, r, s), pats[0])
    # survivors now connect as 1,4,4 to p,q,r
    for s, u in combinations(V3, 2):
        if m(s, u) >= 2:
            return _quad_witness(H, S, (q, r, s, u), "case2")
    k = len(V3)
    return StageViolation("case2", "case2-density", {
        "anchor": [p, q, r],
        "survivors": k,
        "edgesAmongSurvivors": sum(m(s, u) for s, u in combinations(V3, 2)),
        "maxSimpleEdges": k * (k - 1) // 2,
        "aHist": hist,
    })


# -- span <= 10 ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Case1Classes:
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    D: tuple[int, ...]
    hist: tuple[int, ...]

    def sizes(self) -> dict[str, int]:
        return {"A": len(self.A), "B": len(self.B), "C": len(self.C), "D": len(self.D)}


def case1_classify(G: Multigraph, p: int, q: int, vertices=None) -> Case1Classes:
    """Split the other vertices by their multiplicities towards p and q.

    A: (4, 2), B: (2, 4), C: (3, 3), D: sum at most 5.  ``hist[i]`` counts
    vertices joined to {p, q} by i edges.
    """
    if G.m(p, q) != 4:
        raise ValueError("anchor pair must have multiplicity 4")
    verts = sorted(vertices if vertices is not None else range(G.n))
    cls: dict[str, list[int]] = {"A": [], "B": [], "C": [], "D": []}
    hist = [0] * 9
    for x in verts:
        if x in (p, q):
            continue
        a, b = G.m(x, p), G.m(x, q)
        hist[a + b] += 1
        if a + b <= 5:
            cls["D"].append(x)
        elif (a, b) == (4, 2):
            cls["A"].append(x)
        elif (a, b) == (2, 4):
            cls["B"].append(x)
        elif (a, b) == (3, 3):
            cls["C"].append(x)
        else:
            raise _Stop(StageViolation("case1-classify", "unclassifiable-vertex", {
                "vertex": x, "multiplicities": [a, b], "anchor": [p, q],
            }))
    return Case1Classes(*(tuple(cls[k]) for k in "ABCD"), tuple(hist[:7]))


def _apexes_holding(H: Hypergraph3, S, u: int, v: int) -> tuple[int, ...]:
    return tuple(x for x in S if H.link_bits[x][u] >> v & 1)


def _case1(H, S, G: Multigraph, V2, trace: StageTrace):
    m = G.m
    trace.enter("case1-anchor-edge")
    anchor = next(((u, v) for u, v in combinations(V2, 2) if m(u, v) == 4), None)
    if anchor is None:
        for k5 in _heavy_cliques5(G, V2):
            for quad in combinations(k5, 4):
                w = rainbow_witness(H, S, quad)
                if w is not None:
                    raise _Stop(w)
            raise PatternDefect(f"heavy K5 {k5} without rainbow quadruple")
        raise _Stop(StageViolation("case1-anchor-edge", "no-mult4-edge", {"n2": len(V2)}))
    p, q = anchor
    trace.anchor = anchor

    trace.enter("case1-classify")
    cl = case1_classify(G, p, q, V2)
    trace.a_hist = list(cl.hist)
    trace.classes = cl.sizes()
    A, B, C = list(cl.A), list(cl.B), list(cl.C)
    trace.peeled["case1-D"] = list(cl.D)
    trace.sizes["n3"] = len(V2) - len(cl.D)

    trace.enter("case1-C")
    for x, y in combinations(C, 2):
        if m(x, y) >= 3:
            raise _Stop(witness_for_quad(H, S, (p, q, x, y), "heavy_k4"))
    for x in C:
        for y in A + B:
            if m(x, y) >= 2:
                pats = quad_patterns(G, (p, q, x, y))
                if pats:
                    raise _Stop(witness_for_quad(H, S, (p, q, x, y), pats[0]))
    trace.peeled["case1-C"] = list(C)
    trace.sizes["n4"] = len(A) + len(B)
    trace.m = max(len(A), len(B))
    trace.e_prime = (
        sum(1 for side in (A, B) for u, v in combinations(side, 2) if m(u, v) <= 1)
        + sum(1 for u in A for v in B if m(u, v) <= 3)
    )

    trace.enter("case1-prune-B")
    xy = next(((u, v) for u, v in combinations(A, 2) if m(u, v) == 2), None)
    if xy is None:
        raise _Stop(StageViolation("case1-prune-B", "no-anchor-pair", {"side": "A", "size": len(A)}))
    x, y = xy
    ab = _apexes_holding(H, S, x, y)
    cd = tuple(s for s in S if s not in ab)
    trace.fixed_pairs["A"] = xy
    keepB = [u for u in B if m(x, u) == 4 and m(y, u) == 4]
    trace.peeled["case1-prune-B"] = [u for u in B if u not in keepB]
    B = keepB
    for w, z in combinations(B, 2):
        if any(H.link_bits[s][w] >> z & 1 for s in ab):
            raise _Stop(_quad_witness(H, S, (w, x, y, z), "case1-prune-B"))

    trace.enter("case1-prune-A")
    uv = next(((u, v) for u, v in combinations(B, 2) if m(u, v) == 2), None)
    if uv is None:
        raise _Stop(StageViolation("case1-prune-A", "no-anchor-pair", {"side": "B", "size": len(B)}))
    u, v = uv
    trace.fixed_pairs["B"] = uv
    keepA = [a for a in A if m(u, a) == 4 and m(v, a) == 4]
    trace.peeled["case1-prune-A"] = [a for a in A if a not in keepA]
    A = keepA
    for w, z in combinations(A, 2):
        if any(H.link_bits[s][w] >> z & 1 for s in cd):
            raise _Stop(_quad_witness(H, S, (w, u, v, z), "case1-prune-A"))
    trace.sizes["n5"] = len(A) + len(B)
    return A, B, (tuple(sorted(ab)), tuple(sorted(cd)))


def _reassign(H: Hypergraph3, A: list[int], B: list[int]) -> tuple[list[int], list[int]]:
    """Place every unassigned vertex on the side gaining fewer inside edges (tie: A)."""
    placed = set(A) | set(B)
    maskA = sum(1 << a for a in A)
    maskB = sum(1 << b for b in B)
    bits = H.link_bits
    for v in range(H.n):
        if v in placed:
            continue
        row = bits[v]
        gainA = sum((row[a] & maskA).bit_count() for a in A) // 2
        gainB = sum((row[b] & maskB).bit_count() for b in B) // 2
        if gainA <= gainB:
            A.append(v)
            maskA |= 1 << v
        else:
            B.append(v)
            maskB |= 1 << v
    return sorted(A), sorted(B)


# -- driver --------------------------------------------------------------------------------

def run_stability(H: Hypergraph3, cfg: StabilityConfig) -> PartitionReport | FailureCertificate:
    trace = StageTrace()
    trace.enter("config")
    trace.sizes["n"] = H.n
    try:
        return _run(H, cfg, trace)
    except _Stop as stop:
        if isinstance(stop.variant, StageViolation) and stop.variant.stage not in trace.stages:
            trace.enter(stop.variant.stage)
        return FailureCertificate(stop.variant, trace)


def _run(H: Hypergraph3, cfg: StabilityConfig, trace: StageTrace):
    n = H.n
    delta = cfg.delta
    if cfg.mode == "strict":
        trace.enter("density")
        if n < 8:
            raise _Stop(StageViolation("density", "too-few-vertices", {"n": n}))
        need = ex_fano(n) - delta * n**3 / 8
        if len(H.edges) < need:
            raise _Stop(StageViolation("density", "below-density", {
                "edges": len(H.edges), "required": need,
            }))

    trace.enter("peel")
    V0, _ = peel_min_degree(H, cfg, trace)
    trace.sizes["n0"] = len(V0)

    trace.enter("tetrahedron")
    S = find_tetrahedron(H, V0)
    if S is None:
        raise _Stop(StageViolation("tetrahedron", "no-tetrahedron", {"n0": len(V0)}))
    trace.S = S
    fam = link_structures(H, S)
    V1 = tuple(v for v in V0 if v not in S)
    G = fam.reduced.restrict(V1)
    trace.sizes["n1"] = len(V1)

    trace.enter("multigraph-peel")
    V2 = _multigraph_peel(H, S, G, V1, delta, trace)
    trace.sizes["n2"] = len(V2)

    trace.enter("span")
    heavy = kernels.first_heavy_triple(G.matrix(), list(V2), 11)
    if heavy is not None:
        trace.case = 2
        trace.enter("case2")
        raise _Stop(case2_analyze(H, S, G, heavy, V2, trace))
    trace.case = 1
    A, B, split = _case1(H, S, G, list(V2), trace)

    trace.enter("reassign")
    A, B = _reassign(H, list(A), list(B))
    if B and (not A or B[0] < A[0]):
        A, B = B, A
        split = (split[1], split[0])
    trace.split = split

    # an edge inside a side closes a Fano with four vertices of the other
    trace.enter("inside-edges")
    for side in (A, B):
        mask = sum(1 << v for v in side)
        for e in H.edges:
            if all(mask >> v & 1 for v in e):
                w = fano_through_edge(H, e)
                if w is not None:
                    raise _Stop(w)

    claim = verify_claim(H, S, split, A, B)
    n1 = len(V1)
    # total <= delta_9 n1^2 with delta_9 = 417 delta^(1/8)
    within = claim.best.total == 0 or not _root_lt(Fraction(417 * n1 * n1), delta, Fraction(1, 8),
                                                   Fraction(claim.best.total))
    quarter = 4 * len(A) >= n1 and 4 * len(B) >= n1
    chain = verify_inequalities(min(delta, DELTA_MAX) if cfg.mode == "strict" else delta)
    return PartitionReport(
        A=tuple(A), B=tuple(B), eA=edges_within(H, A), eB=edges_within(H, B),
        bad_pairs=claim, chain=chain, trace=trace, n1=n1,
        within_claim_bound=within, sides_quarter=quarter,
    )
