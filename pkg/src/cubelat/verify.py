"""Checks of the connectivity statements for cubical polytopes on concrete instances.

Every check returns a :class:`VerificationReport`.  ``passed`` is ``True``,
``False``, ``"indeterminate"`` (an enumeration hit the work limit) or
``"n/a"`` (the hypothesis of the statement does not hold for the instance).
Failed reports carry a ``counterexample`` entry in their witness that can be
replayed through the underlying modules.
"""
from __future__ import annotations

import itertools
import json
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from .complex import (
    PolytopalComplex,
    antistar,
    dual_graph,
    facet_ridge_path,
    is_pure,
    is_spanning_subcomplex,
    star,
    strong_connectivity,
)
from .connectivity import (
    DEFAULT_WORK_LIMIT,
    FlowNetwork,
    SeparatorCensus,
    WorkLimitExceeded,
    enumerate_separators,
    independent_paths,
    local_connectivity,
    vertex_connectivity,
)
from .cube import (
    CubeCutsetSpec,
    EMPTY,
    all_faces,
    boundary_complex,
    cube_closure,
    cube_antistar_complex,
    cube_cutset_complex,
    face_meet,
    face_vertex_ids,
    vertex_word,
)
from .graph import Graph
from .polytope import CubicalPolytope, chain_of_cubes, connected_sum, hypercube, vertex_census

Passed = Union[bool, str]
INDETERMINATE = "indeterminate"
NOT_APPLICABLE = "n/a"


@dataclass
class VerificationReport:
    claim: str
    instance: str
    passed: Passed
    witness: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "instance": self.instance,
            "passed": self.passed,
            "witness": self.witness,
            "ms": round(self.elapsed * 1000, 3),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @property
    def failed(self) -> bool:
        return self.passed is False


def _timed(claim: str, instance: str, body: Callable[[], tuple[Passed, dict]]) -> VerificationReport:
    start = time.perf_counter()
    passed, witness = body()
    return VerificationReport(claim, instance, passed, witness, time.perf_counter() - start)


def _name(P: CubicalPolytope) -> str:
    return P.name or f"cubical {P.d}-polytope on {P.nverts} vertices"


# Graph-level results are shared across checks of the same instance.
_KAPPA: dict[Graph, int] = {}
_CENSUS: dict[tuple[Graph, int], SeparatorCensus] = {}


def kappa_of(G: Graph) -> int:
    if G not in _KAPPA:
        _KAPPA[G] = vertex_connectivity(G)
    return _KAPPA[G]


def separators_of_size(G: Graph, size: int, work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> SeparatorCensus:
    needed = math.comb(G.n, size)
    if needed > work_limit:
        raise WorkLimitExceeded(needed, work_limit)
    key = (G, size)
    if key not in _CENSUS:
        _CENSUS[key] = enumerate_separators(G, size, work_limit=work_limit, jobs=jobs)
    return _CENSUS[key]


def clear_caches() -> None:
    _KAPPA.clear()
    _CENSUS.clear()


def _labels(G: Graph, idx: Iterable[int]) -> list[int]:
    return [G.labels[i] for i in idx]


def _witness_cut(G: Graph, kappa: int) -> Optional[list[int]]:
    """A vertex cut of size ``kappa`` between some non-adjacent pair, in labels."""
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if G.has_edge(i, j):
                continue
            net = FlowNetwork(G, i, j)
            if net.run() == kappa:
                return _labels(G, net.min_cut())
    return None


# --- cube-level statements -------------------------------------------------

def verify_cube_separators(d: int, work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> VerificationReport:
    """Every d-vertex separator of Q_d is the neighbourhood of a vertex cut off alone."""

    def body():
        if d < 2:
            raise ValueError("d must be at least 2")
        G = hypercube(d).graph
        try:
            census = separators_of_size(G, d, work_limit, jobs)
        except WorkLimitExceeded as exc:
            return INDETERMINATE, {"needed": exc.needed, "work_limit": exc.limit}
        found = {s.X for s in census.separators}
        expected = {tuple(sorted(_labels(G, G.neighbors(v)))) for v in range(G.n)}
        bad = [s.to_dict() for s in census.separators if not s.is_vertex_link]
        witness = {
            "subsets_checked": census.subsets_checked,
            "separators": len(found),
            "expected": len(expected),
        }
        ok = found == expected and not bad
        if not ok:
            witness["counterexample"] = {
                "d": d,
                "unexpected": [list(x) for x in sorted(found - expected)],
                "missing": [list(x) for x in sorted(expected - found)],
                "misclassified": bad[:10],
            }
        return ok, witness

    return _timed("cube-separators", f"Q{d}", body)


def cube_face_filter(d: int, F) -> set[frozenset]:
    """Oracle: vertex sets of all nonempty faces of Q_d disjoint from F."""
    return {
        frozenset(face_vertex_ids(w))
        for w in all_faces(d)
        if w.dim < d and face_meet(w, F) is EMPTY
    }


def verify_cube_antistar(d: int) -> VerificationReport:
    """Antistar of each proper face of Q_d: construction, purity, strong connectivity."""

    def body():
        if d < 2:
            raise ValueError("d must be at least 2")
        B = boundary_complex(d)
        faces = [w for w in all_faces(d) if w.dim < d]
        problems = []
        for F in faces:
            A = cube_antistar_complex(d, F)
            keys = {f.key for f in A.faces()}
            issues = []
            if keys != cube_face_filter(d, F):
                issues.append("differs from face filter")
            if A != antistar(face_vertex_ids(F), B):
                issues.append("differs from antistar in boundary complex")
            if A.dim != d - 1 or not is_pure(A):
                issues.append("not a pure (d-1)-complex")
            if not strong_connectivity(A):
                issues.append("not strongly connected")
            if issues:
                problems.append({"d": d, "face": F.letters, "issues": issues})
        witness = {"faces_checked": len(faces)}
        if problems:
            witness["counterexample"] = problems[0]
            witness["failures"] = len(problems)
        return not problems, witness

    return _timed("cube-antistar", f"Q{d}", body)


def _unit(d: int, y: int, i: int) -> str:
    return vertex_word(y ^ (1 << (d - 1 - i)), d).letters


def check_cutset(spec: CubeCutsetSpec) -> list[str]:
    """Violations of the cutset-complex statements for one apex/neighbour set."""
    d = spec.d
    C, Cp = cube_cutset_complex(spec)
    issues = []
    if not is_spanning_subcomplex(Cp, C):
        issues.append("C' not spanning in C")
    if Cp.dim != d - 2 or not is_pure(Cp):
        issues.append("C' not a pure (d-2)-complex")
    if not strong_connectivity(Cp):
        issues.append("C' not strongly connected")
    full = len(spec.Y) == d
    if is_pure(C) != full:
        issues.append(f"is_pure(C)={is_pure(C)} with |Y|={len(spec.Y)}")
    if full and C != Cp:
        issues.append("C differs from C' with |Y| = d")
    return issues


def verify_cube_cutset(d: int, exhaustive_up_to: int = 4) -> VerificationReport:
    """Spanning strongly connected (d-2)-subcomplex after removing y and some neighbours.

    Also asserts purity of the induced complex exactly when every neighbour
    of y is removed.
    """

    def body():
        if d < 3:
            raise ValueError("d must be at least 3")
        cases = []
        for k in range(d + 1):
            cases.append((0, tuple(range(k))))
        if d <= exhaustive_up_to:
            for y in range(1 << d):
                for k in range(d + 1):
                    for pos in itertools.combinations(range(d), k):
                        if (y, pos) not in cases:
                            cases.append((y, pos))
        failures = []
        for y, pos in cases:
            spec = CubeCutsetSpec(d, vertex_word(y, d), tuple(_unit(d, y, i) for i in pos))
            issues = check_cutset(spec)
            if issues:
                failures.append({"d": d, "y": spec.y.letters, "Y": [w.letters for w in spec.Y], "issues": issues})
        witness = {"cases_checked": len(cases)}
        if failures:
            witness["failures"] = len(failures)
            witness["failing_sizes"] = sorted({len(f["Y"]) for f in failures})
            witness["counterexample"] = failures[0]
        return not failures, witness

    return _timed("cube-cutset", f"Q{d}", body)


# --- polytope-level statements ---------------------------------------------

def verify_balinski(P: CubicalPolytope) -> VerificationReport:
    def body():
        G = P.graph
        k = kappa_of(G)
        witness = {"kappa": k, "d": P.d}
        if k < P.d:
            witness["counterexample"] = {"instance": P.to_dict(), "cut": _witness_cut(G, k)}
        return k >= P.d, witness

    return _timed("balinski", _name(P), body)


def _facet_overlaps(P: CubicalPolytope, X: Iterable[int]) -> list[dict]:
    X = set(X)
    return [
        {"facet": list(f), "overlap": len(X & set(f))}
        for f in P.facets if len(X & set(f)) > P.d - 1
    ]


def verify_connectivity_theorem(P: CubicalPolytope, work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> VerificationReport:
    """Connectivity at least min(delta, 2d-2); small minimum separators are vertex links."""

    def body():
        d = P.d
        if d < 3:
            return NOT_APPLICABLE, {"reason": "requires d >= 3"}
        G = P.graph
        k = kappa_of(G)
        delta = G.min_degree()
        bound = min(delta, 2 * d - 2)
        witness = {"kappa": k, "delta": delta, "bound": bound}
        if k < bound:
            witness["counterexample"] = {"instance": P.to_dict(), "cut": _witness_cut(G, k)}
            return False, witness
        if d < 4 or k > 2 * d - 3:
            witness["structure"] = "skipped: d < 4" if d < 4 else "skipped: kappa > 2d-3"
            return True, witness
        try:
            census = separators_of_size(G, k, work_limit, jobs)
        except WorkLimitExceeded as exc:
            witness.update(needed=exc.needed, work_limit=exc.limit)
            return INDETERMINATE, witness
        bad = [s for s in census.separators if not s.is_vertex_link]
        overlaps = [(s, _facet_overlaps(P, s.X)) for s in census.separators]
        overlaps = [(s, o) for s, o in overlaps if o]
        witness.update(
            subsets_checked=census.subsets_checked,
            separators=len(census.separators),
            links_of=sorted(s.neighborhood_of for s in census.separators if s.is_vertex_link),
        )
        if bad or overlaps:
            s = bad[0] if bad else overlaps[0][0]
            witness["counterexample"] = {
                "instance": P.to_dict(),
                "separator": s.to_dict(),
                "facet_overlaps": _facet_overlaps(P, s.X),
            }
            return False, witness
        return True, witness

    return _timed("connectivity-theorem", _name(P), body)


def _is_sc(C: PolytopalComplex, dim: int) -> bool:
    return C.dim == dim and bool(strong_connectivity(C))


def verify_star_antistar(P: CubicalPolytope) -> VerificationReport:
    def body():
        B = P.boundary
        d = P.d
        problems = []
        if not _is_sc(B, d - 1):
            problems.append({"complex": "boundary"})
        for v in B.vertices:
            for kind, C in (("star", star((v,), B)), ("antistar", antistar((v,), B))):
                if not _is_sc(C, d - 1):
                    problems.append({"complex": kind, "vertex": v, "pure": is_pure(C), "dim": C.dim})
        witness = {"vertices_checked": len(B.vertices)}
        if problems:
            witness["counterexample"] = dict(problems[0], instance=P.to_dict())
            witness["failures"] = len(problems)
        return not problems, witness

    return _timed("star-antistar", _name(P), body)


def verify_star_minus_facet(P: CubicalPolytope) -> VerificationReport:
    """In the star of each vertex, the antistar of each facet is a strongly connected (d-2)-complex."""

    def body():
        B = P.boundary
        d = P.d
        problems = []
        pairs = 0
        for v in B.vertices:
            S = star((v,), B)
            for F in S.facets:
                pairs += 1
                A = antistar(F, S)
                if not _is_sc(A, d - 2):
                    problems.append({"vertex": v, "facet": list(F.vertices), "pure": is_pure(A), "dim": A.dim})
        witness = {"pairs_checked": pairs}
        if problems:
            witness["counterexample"] = dict(problems[0], instance=P.to_dict())
            witness["failures"] = len(problems)
        return not problems, witness

    return _timed("star-minus-facet", _name(P), body)


def facet_boundary_union(P: CubicalPolytope, F) -> PolytopalComplex:
    """Union over all facets of the facet's boundary complex with V(F) removed."""
    removed = frozenset(F.vertices)
    dims: dict[frozenset, int] = {}
    order: dict[frozenset, tuple[int, ...]] = {}
    top = P.d - 1
    for facet in P.facets:
        for sub, k in cube_closure(facet):
            key = frozenset(sub)
            if k < top and not key & removed and key not in dims:
                dims[key] = k
                order[key] = sub
    return PolytopalComplex(dims, order)


def verify_antistar_spanning(P: CubicalPolytope) -> VerificationReport:
    """For each proper face F, the facet boundaries minus V(F) form a spanning
    strongly connected (d-2)-subcomplex of the antistar of F."""

    def body():
        d = P.d
        if d < 3:
            return NOT_APPLICABLE, {"reason": "requires d >= 3"}
        B = P.boundary
        problems = []
        antistar_not_sc = 0
        faces = P.proper_faces()
        for F in faces:
            ast = B.minus(F.vertices)
            C = facet_boundary_union(P, F)
            issues = []
            if not C.is_subcomplex_of(ast):
                issues.append("not a subcomplex of the antistar")
            if not is_spanning_subcomplex(C, ast):
                issues.append("not spanning")
            if not _is_sc(C, d - 2):
                issues.append("not a strongly connected (d-2)-complex")
            if issues:
                problems.append({"face": list(F.vertices), "issues": issues})
            if not _is_sc(ast, d - 1):
                antistar_not_sc += 1
        witness = {"faces_checked": len(faces), "antistars_not_strongly_connected_top_dim": antistar_not_sc}
        if problems:
            witness["counterexample"] = dict(problems[0], instance=P.to_dict())
            witness["failures"] = len(problems)
        return not problems, witness

    return _timed("antistar-spanning", _name(P), body)


def verify_facet_removal(P: CubicalPolytope) -> VerificationReport:
    """Removing the vertices of any proper face leaves a (d-2)-connected graph."""

    def body():
        d = P.d
        if d < 3:
            return NOT_APPLICABLE, {"reason": "requires d >= 3"}
        G = P.graph
        index = {v: i for i, v in enumerate(G.labels)}
        faces = P.proper_faces()
        worst = None
        below_d_minus_1 = 0
        for F in faces:
            H = G.remove_vertices(index[v] for v in F.vertices)
            k = vertex_connectivity(H)
            if k < d - 1:
                below_d_minus_1 += 1
            if worst is None or k < worst[0]:
                worst = (k, F)
        k, F = worst
        witness = {
            "faces_checked": len(faces),
            "min_kappa": k,
            "min_kappa_face": list(F.vertices),
            "faces_below_d_minus_1": below_d_minus_1,
        }
        if k < d - 2:
            witness["counterexample"] = {"instance": P.to_dict(), "face": list(F.vertices), "kappa": k}
        return k >= d - 2, witness

    return _timed("face-removal", _name(P), body)


def verify_dual_menger(P: CubicalPolytope, max_spot_checks: int = 50000) -> VerificationReport:
    """d independent facet-ridge paths between every two facets, plus avoidance paths."""

    def body():
        B = P.boundary
        D = dual_graph(B)
        facets, edges = B.dual_structure
        ridges = sorted({r for _, _, r in edges})
        d = P.d
        problems = []
        min_paths = None
        for s, t in itertools.combinations(range(D.n), 2):
            k = local_connectivity(D, s, t)
            paths = independent_paths(D, s, t, k)
            inner = [v for p in paths for v in p[1:-1]]
            if len(inner) != len(set(inner)) or len(paths) != k:
                problems.append({"pair": [s, t], "issue": "witness paths not independent"})
            if k < d:
                problems.append({"pair": [list(facets[s].vertices), list(facets[t].vertices)], "paths": k})
            min_paths = k if min_paths is None else min(min_paths, k)

        spot = []
        for s, t in itertools.combinations(range(len(facets)), 2):
            for f in range(len(facets)):
                if f not in (s, t):
                    spot.append((s, t, "facet", f))
            for r in range(len(ridges)):
                spot.append((s, t, "ridge", r))
        stride = max(1, math.ceil(len(spot) / max_spot_checks))
        checked = 0
        for s, t, kind, x in spot[::stride]:
            checked += 1
            if kind == "facet":
                path = facet_ridge_path(B, facets[s], facets[t], avoid_facets=[facets[x]])
            else:
                path = facet_ridge_path(B, facets[s], facets[t], avoid_ridges=[ridges[x]])
            if path is None:
                avoided = facets[x] if kind == "facet" else ridges[x]
                problems.append({
                    "pair": [list(facets[s].vertices), list(facets[t].vertices)],
                    "avoid_" + kind: list(avoided.vertices),
                })
        witness = {"pairs": D.n * (D.n - 1) // 2, "min_independent_paths": min_paths, "avoidance_checks": checked}
        if problems:
            witness["counterexample"] = dict(problems[0], instance=P.to_dict())
            witness["failures"] = len(problems)
        return not problems, witness

    return _timed("dual-menger", _name(P), body)


def verify_nonsimple(P: CubicalPolytope) -> VerificationReport:
    def body():
        census = vertex_census(P)
        if census.simple_vertices:
            return NOT_APPLICABLE, {"simple_vertices": len(census.simple_vertices)}
        k = kappa_of(P.graph)
        witness = {"kappa": k, "delta": census.delta}
        if k < P.d + 1:
            witness["counterexample"] = {"instance": P.to_dict(), "cut": _witness_cut(P.graph, k)}
        return k >= P.d + 1, witness

    return _timed("nonsimple", _name(P), body)


def search_non_neighborhood_separators(P: CubicalPolytope, work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> VerificationReport:
    """Minimum separators that are not a vertex neighbourhood (only asserted absent for d >= 4)."""

    def body():
        G = P.graph
        k = kappa_of(G)
        try:
            census = separators_of_size(G, k, work_limit, jobs)
        except WorkLimitExceeded as exc:
            return INDETERMINATE, {"kappa": k, "needed": exc.needed, "work_limit": exc.limit}
        odd = [s.to_dict() for s in census.separators if s.neighborhood_of is None]
        witness = {
            "kappa": k,
            "subsets_checked": census.subsets_checked,
            "separators": len(census.separators),
            "non_neighborhood": odd,
        }
        if P.d < 4:
            witness["informational"] = True
            return NOT_APPLICABLE, witness
        if odd and k <= 2 * P.d - 3:
            witness["counterexample"] = {"instance": P.to_dict(), "separator": odd[0]}
            return False, witness
        return True, witness

    return _timed("non-neighborhood-search", _name(P), body)


def verify_euler_edges(P: CubicalPolytope) -> VerificationReport:
    def body():
        if P.d != 3:
            return NOT_APPLICABLE, {"reason": "only for d = 3"}
        E, V = P.num_edges, P.nverts
        witness = {"edges": E, "vertices": V, "expected": 2 * V - 4}
        if E != 2 * V - 4:
            witness["counterexample"] = {"instance": P.to_dict()}
        return E == 2 * V - 4, witness

    return _timed("euler-edges", _name(P), body)


@dataclass
class BoundsLedger:
    d: int
    g_lower: int
    f_upper: int
    instances_checked: int = 0
    violations: list = field(default_factory=list)
    indeterminate: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "g_lower": self.g_lower,
            "f_lower": self.g_lower + 1,
            "f_upper": self.f_upper,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "indeterminate": self.indeterminate,
        }


def bounds_ledger(d: int, corpus: Iterable[CubicalPolytope], work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> BoundsLedger:
    """Look for instances contradicting 2d-3 <= g(d) < f(d) <= 2^(d-1).

    A violation is either a minimum separator of size at most 2d-3 that is
    not a vertex neighbourhood, or an instance with delta <= 2d-2 whose
    connectivity is below delta.
    """
    if d < 4:
        raise ValueError("the bounds are stated for d >= 4")
    ledger = BoundsLedger(d, 2 * d - 3, 2 ** (d - 1))
    for P in corpus:
        if P.d != d:
            continue
        ledger.instances_checked += 1
        G = P.graph
        k = kappa_of(G)
        delta = G.min_degree()
        if delta <= 2 * d - 2 and k < delta:
            ledger.violations.append({"instance": _name(P), "kind": "kappa < delta", "kappa": k, "delta": delta})
        if k <= 2 * d - 3:
            try:
                census = separators_of_size(G, k, work_limit, jobs)
            except WorkLimitExceeded:
                ledger.indeterminate.append(_name(P))
                continue
            for s in census.separators:
                if s.neighborhood_of is None:
                    ledger.violations.append({"instance": _name(P), "kind": "non-neighbourhood separator", "X": list(s.X)})
    return ledger


def verify_bounds(d: int, corpus: Iterable[CubicalPolytope], work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> VerificationReport:
    def body():
        ledger = bounds_ledger(d, corpus, work_limit, jobs)
        witness = ledger.to_dict()
        if ledger.violations:
            witness["counterexample"] = ledger.violations[0]
            return False, witness
        if ledger.indeterminate:
            return INDETERMINATE, witness
        return True, witness

    return _timed("bounds-ledger", f"d={d}", body)


# --- suite -----------------------------------------------------------------

INSTANCE_CLAIMS: dict[str, Callable] = {
    "balinski": verify_balinski,
    "connectivity-theorem": verify_connectivity_theorem,
    "star-antistar": verify_star_antistar,
    "star-minus-facet": verify_star_minus_facet,
    "antistar-spanning": verify_antistar_spanning,
    "face-removal": verify_facet_removal,
    "dual-menger": verify_dual_menger,
    "nonsimple": verify_nonsimple,
    "non-neighborhood-search": search_non_neighborhood_separators,
    "euler-edges": verify_euler_edges,
}

_TAKES_LIMIT = {"connectivity-theorem", "non-neighborhood-search"}


def run_instance_claims(
    P: CubicalPolytope,
    claims: Optional[Iterable[str]] = None,
    work_limit: int = DEFAULT_WORK_LIMIT,
    jobs: int = 1,
) -> list[VerificationReport]:
    names = list(INSTANCE_CLAIMS) if claims is None else list(claims)
    reports = []
    for name in names:
        if name not in INSTANCE_CLAIMS:
            raise KeyError(f"unknown claim {name!r}")
        fn = INSTANCE_CLAIMS[name]
        if name in _TAKES_LIMIT:
            reports.append(fn(P, work_limit=work_limit, jobs=jobs))
        else:
            reports.append(fn(P))
    return reports


def default_corpus() -> list[CubicalPolytope]:
    Q3, Q4 = hypercube(3), hypercube(4)
    q4sum = connected_sum(Q4, 7, Q4, 6)
    q4sum.name = "Q4#Q4"
    q3sum = connected_sum(Q3, 5, Q3, 4)
    q3sum.name = "Q3#Q3"
    return [
        Q3,
        Q4,
        hypercube(5),
        q3sum,
        q4sum,
        chain_of_cubes(3, 3),
        chain_of_cubes(3, 4),
        chain_of_cubes(4, 3),
    ]


def cube_reports(work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> list[VerificationReport]:
    reports = [verify_cube_separators(d, work_limit, jobs) for d in (3, 4, 5)]
    reports += [verify_cube_antistar(d) for d in (2, 3, 4, 5)]
    reports += [verify_cube_cutset(d) for d in (3, 4)]
    reports += [verify_balinski(hypercube(d)) for d in (2, 6)]
    return reports


def full_suite(work_limit: int = DEFAULT_WORK_LIMIT, jobs: int = 1) -> list[VerificationReport]:
    reports = cube_reports(work_limit, jobs)
    corpus = default_corpus()
    for P in corpus:
        reports += run_instance_claims(P, work_limit=work_limit, jobs=jobs)
    for d in (4, 5):
        reports.append(verify_bounds(d, corpus, work_limit, jobs))
    return reports
