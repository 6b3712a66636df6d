"""Decide whether a bound quiver presents one of the annulus algebras.

The decision follows the five-condition characterization over chordless
cycles of the underlying multigraph.  A saturated cycle fused with the root
along a shared segment also produces composite chordless cycles; these are
recognised as such (their symmetric difference with the root is spanned by
saturated cycles) and do not count as extra roots.

Counting conventions for condition (e): a saturated cycle meeting the root
is counterclockwise when the root already carries at least beta_h strictly
internal counterclockwise relations, clockwise when it carries at least
beta_a strictly internal clockwise ones, and ties resolve to
counterclockwise exactly when beta_h <= beta_a.  The congruence
r_h = r_a (mod m) is insensitive to reversing the traversal direction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .quiver import Arrow, BoundQuiver, is_gentle

CLOCKWISE = "clockwise"
COUNTERCLOCKWISE = "counterclockwise"
NOT_APPLICABLE = "not_applicable"

ACCEPTED = "Accepted"
ACCEPTED_TYPE_A_ONLY = "AcceptedTypeAOnly"
REJECTED = "Rejected"


class DisconnectedQuiver(ValueError):
    pass


@dataclass(frozen=True)
class CycleRecord:
    """A chordless cycle of the underlying graph, in a canonical rotation.

    ``arrows`` and ``vertices`` run in parallel: arrows[i] joins vertices[i]
    and vertices[(i+1) % len].  ``forward[i]`` says whether arrows[i] points
    from vertices[i] to the next vertex.
    """

    vertices: tuple[str, ...]
    arrows: tuple[str, ...]
    forward: tuple[bool, ...]
    oriented: bool
    saturated: bool
    shared_root_vertices: int = 0
    beta_h: int | None = None
    beta_a: int | None = None
    orientation_class: str = NOT_APPLICABLE

    def __len__(self) -> int:
        return len(self.arrows)

    def arrow_set(self) -> frozenset[str]:
        return frozenset(self.arrows)


@dataclass
class ConditionResult:
    passed: bool
    witness: str = ""


@dataclass
class RecognitionReport:
    quiver: BoundQuiver
    m: int
    gentle: bool
    gentle_violations: list[str]
    root_cycle: CycleRecord | None
    saturated_cycles: list[CycleRecord]
    alpha_h: int
    alpha_a: int
    r_h: int
    r_a: int
    conditions: dict[str, ConditionResult]
    verdict: str
    reasons: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "verdict": self.verdict,
            "gentle": self.gentle,
            "gentle_violations": self.gentle_violations,
            "m": self.m,
            "root_cycle": list(self.root_cycle.vertices) if self.root_cycle else None,
            "saturated_cycles": [
                {
                    "vertices": list(c.vertices),
                    "beta_h": c.beta_h,
                    "beta_a": c.beta_a,
                    "orientation": c.orientation_class,
                    "shared_root_vertices": c.shared_root_vertices,
                }
                for c in self.saturated_cycles
            ],
            "alpha_h": self.alpha_h,
            "alpha_a": self.alpha_a,
            "r_h": self.r_h,
            "r_a": self.r_a,
            "conditions": {
                k: {"passed": v.passed, "witness": v.witness}
                for k, v in sorted(self.conditions.items())
            },
            "reasons": self.reasons,
        }
        return json.dumps(payload, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# Chordless cycles of the underlying multigraph
# ---------------------------------------------------------------------------


def _simple_cycles(bq: BoundQuiver) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
    """All simple cycles as (vertex tuple, arrow-id tuple), canonicalized."""
    adjacency: dict[str, list[Arrow]] = {v: [] for v in bq.vertices}
    for a in bq.arrows:
        adjacency[a.src].append(a)
        if a.src != a.dst:
            adjacency[a.dst].append(a)

    found: set[tuple[tuple[str, ...], tuple[str, ...]]] = set()

    def canonical(verts: list[str], edges: list[str]) -> tuple[tuple[str, ...], tuple[str, ...]]:
        n = len(verts)
        best = None
        for start in range(n):
            for direction in (1, -1):
                vs, es = [], []
                for k in range(n):
                    idx = (start + direction * k) % n
                    vs.append(verts[idx])
                    eidx = idx if direction == 1 else (idx - 1) % n
                    es.append(edges[eidx])
                cand = (tuple(vs), tuple(es))
                if best is None or cand < best:
                    best = cand
        return best

    order = sorted(bq.vertices)
    for root in order:
        stack: list[tuple[str, list[str], list[str]]] = [(root, [root], [])]
        while stack:
            v, path, epath = stack.pop()
            for arrow in adjacency[v]:
                w = arrow.dst if arrow.src == v else arrow.src
                if w == root and len(path) >= 2 and arrow.id != epath[-1]:
                    found.add(canonical(path, epath + [arrow.id]))
                    continue
                if w in path or w < root:
                    continue
                stack.append((w, path + [w], epath + [arrow.id]))
    return sorted(found)


def _chordless(bq: BoundQuiver, verts: tuple[str, ...], edges: tuple[str, ...]) -> bool:
    # Chord = an edge joining two vertices that are not neighbours on the
    # cycle.  A parallel copy of a cycle edge is not a chord: cycles through
    # either copy of a double arrow must both be visible.
    n = len(verts)
    adjacent_pairs = {frozenset((verts[i], verts[(i + 1) % n])) for i in range(n)}
    for a in bq.arrows:
        if a.src in verts and a.dst in verts and a.src != a.dst:
            if frozenset((a.src, a.dst)) not in adjacent_pairs:
                return False
    return True


def find_cycles(bq: BoundQuiver, m: int) -> list[CycleRecord]:
    """All chordless cycles, each tagged oriented/saturated; deterministic order."""
    by_id = {a.id: a for a in bq.arrows}
    records = []
    for verts, edges in _simple_cycles(bq):
        if not _chordless(bq, verts, edges):
            continue
        n = len(verts)
        forward = tuple(
            by_id[edges[i]].src == verts[i] and by_id[edges[i]].dst == verts[(i + 1) % n]
            for i in range(n)
        )
        oriented = all(forward) or not any(forward)
        saturated = False
        if oriented and n == m + 2:
            seq = list(edges) if all(forward) else [edges[(n - 1 - i) % n] for i in range(n)]
            saturated = all(
                (seq[i], seq[(i + 1) % n]) in bq.relations for i in range(n)
            )
        records.append(CycleRecord(verts, edges, forward, oriented, saturated))
    return records


# ---------------------------------------------------------------------------
# GF(2) cycle-space arithmetic over arrow-id bitmasks
# ---------------------------------------------------------------------------


class _EdgeSpace:
    def __init__(self, arrow_ids: list[str]):
        self.bit = {aid: 1 << i for i, aid in enumerate(sorted(arrow_ids))}

    def mask(self, arrow_ids: tuple[str, ...]) -> int:
        out = 0
        for aid in arrow_ids:
            out ^= self.bit[aid]
        return out

    @staticmethod
    def reduce(mask: int, basis: list[int]) -> int:
        for b in basis:
            mask = min(mask, mask ^ b)
        return mask

    @staticmethod
    def insert(mask: int, basis: list[int]) -> None:
        mask = _EdgeSpace.reduce(mask, basis)
        if mask:
            basis.append(mask)
            basis.sort(reverse=True)


# ---------------------------------------------------------------------------
# Relation runs
# ---------------------------------------------------------------------------


def _relation_runs(bq: BoundQuiver) -> list[tuple[list[tuple[str, str]], bool]]:
    """Maximal chains of consecutive relations; (chain, is_cyclic)."""
    successors: dict[tuple[str, str], list[tuple[str, str]]] = {}
    predecessors: dict[tuple[str, str], list[tuple[str, str]]] = {}
    rels = sorted(bq.relations)
    for r in rels:
        for s in rels:
            if r[1] == s[0]:
                successors.setdefault(r, []).append(s)
                predecessors.setdefault(s, []).append(r)
    runs: list[tuple[list[tuple[str, str]], bool]] = []
    seen: set[tuple[str, str]] = set()
    for r in rels:
        if r in predecessors or r in seen:
            continue
        chain = [r]
        seen.add(r)
        while chain[-1] in successors:
            nxt = successors[chain[-1]][0]
            if nxt in seen:
                break
            chain.append(nxt)
            seen.add(nxt)
        runs.append((chain, False))
    for r in rels:
        if r in seen:
            continue
        chain = [r]
        seen.add(r)
        while True:
            nxt = successors.get(chain[-1], [None])[0]
            if nxt is None or nxt == chain[0]:
                break
            if nxt in seen:
                break
            chain.append(nxt)
            seen.add(nxt)
        runs.append((chain, True))
    return runs


def _run_arrows(chain: list[tuple[str, str]]) -> set[str]:
    out: set[str] = set()
    for first, second in chain:
        out.add(first)
        out.add(second)
    return out


# ---------------------------------------------------------------------------
# The decision procedure
# ---------------------------------------------------------------------------


def _connected(bq: BoundQuiver) -> bool:
    if not bq.vertices:
        return True
    seen = {bq.vertices[0]}
    frontier = [bq.vertices[0]]
    while frontier:
        v = frontier.pop()
        for a in bq.arrows:
            for w in ((a.dst,) if a.src == v else ()) + ((a.src,) if a.dst == v else ()):
                if w not in seen:
                    seen.add(w)
                    frontier.append(w)
    return len(seen) == len(bq.vertices)


def recognize(bq: BoundQuiver, m: int, reverse_root: bool = False) -> RecognitionReport:
    """Evaluate gentleness and the five conditions; never raises on content.

    ``reverse_root`` recomputes with the opposite root traversal; the verdict
    must not depend on it (see ``orientation_sweep``).
    """
    if m < 1:
        raise ValueError(f"m >= 1 required, got {m}")
    if not _connected(bq):
        raise DisconnectedQuiver("recognition requires a connected quiver")

    gentle, violations = is_gentle(bq)
    conditions: dict[str, ConditionResult] = {}
    cycles = find_cycles(bq, m)
    saturated = [c for c in cycles if c.saturated]
    non_saturated = [c for c in cycles if not c.saturated]

    space = _EdgeSpace([a.id for a in bq.arrows])
    basis: list[int] = []
    for c in saturated:
        space.insert(space.mask(c.arrows), basis)

    root: CycleRecord | None = None
    extra_roots: list[CycleRecord] = []
    if non_saturated:
        ordered = sorted(non_saturated, key=lambda c: (len(c), c.vertices))
        root = ordered[0]
        root_mask = space.mask(root.arrows)
        for c in ordered[1:]:
            if space.reduce(root_mask ^ space.mask(c.arrows), basis) != 0:
                extra_roots.append(c)

    if extra_roots:
        conditions["a"] = ConditionResult(
            False,
            f"independent non-saturated cycles: {root.vertices} and {extra_roots[0].vertices}",
        )
        conditions["c"] = ConditionResult(
            False, f"non-saturated cycle {extra_roots[0].vertices} is not the root"
        )
    else:
        conditions["a"] = ConditionResult(True)
        conditions["c"] = ConditionResult(True)

    if reverse_root and root is not None:
        n = len(root)
        verts = tuple(root.vertices[-k % n] for k in range(n))
        arrows = tuple(root.arrows[(-1 - k) % n] for k in range(n))
        forward = tuple(not root.forward[(-1 - k) % n] for k in range(n))
        root = CycleRecord(verts, arrows, forward, root.oriented, root.saturated)

    root_edges = root.arrow_set() if root is not None else frozenset()
    root_vertices = set(root.vertices) if root is not None else set()
    by_id = {a.id: a for a in bq.arrows}

    internal = [
        r for r in sorted(bq.relations) if r[0] in root_edges and r[1] in root_edges
    ]

    if root is not None and root.oriented:
        if internal:
            conditions["b"] = ConditionResult(True)
        else:
            conditions["b"] = ConditionResult(
                False, f"oriented root {root.vertices} carries no internal relation"
            )
    else:
        conditions["b"] = ConditionResult(True)

    saturated_arrow_sets = [c.arrow_set() for c in saturated]

    bad_runs = []
    for chain, cyclic in _relation_runs(bq):
        arrows_used = _run_arrows(chain)
        if any(arrows_used <= s for s in saturated_arrow_sets):
            continue
        if cyclic or len(chain) > m - 1:
            bad_runs.append((chain, cyclic))
    if bad_runs:
        chain, cyclic = bad_runs[0]
        kind = "cyclic run" if cyclic else f"run of {len(chain)}"
        conditions["d"] = ConditionResult(
            False, f"{kind} consecutive relations outside saturated cycles: {chain}"
        )
    else:
        conditions["d"] = ConditionResult(True)

    # Condition (e): orientation bookkeeping along the root traversal.
    alpha_h = alpha_a = 0
    r_h = r_a = 0
    tagged_saturated: list[CycleRecord] = [
        CycleRecord(
            c.vertices,
            c.arrows,
            c.forward,
            c.oriented,
            c.saturated,
            len(set(c.vertices) & root_vertices),
        )
        for c in saturated
    ]
    e_result = ConditionResult(True)
    if root is not None and internal:
        arrow_direction: dict[str, bool] = {}
        n = len(root)
        for i in range(n):
            arrow_direction[root.arrows[i]] = root.forward[i]

        strict = [
            r
            for r in internal
            if not any(r[0] in s or r[1] in s for s in saturated_arrow_sets)
        ]
        for r in strict:
            if arrow_direction[r[0]]:
                alpha_h += 1
            else:
                alpha_a += 1

        tagged_saturated = []
        problems: list[str] = []
        classified: list[tuple[CycleRecord, int, int, str]] = []
        for c in saturated:
            shared_vertices = len(set(c.vertices) & root_vertices)
            shared_arrows = [aid for aid in c.arrows if aid in root_edges]
            beta_h = beta_a = None
            orientation = NOT_APPLICABLE
            if shared_vertices >= 2 and len(shared_arrows) >= 2:
                segs = _cycle_segments(c, root_edges)
                if len(segs) != 1:
                    problems.append(
                        f"saturated cycle {c.vertices} meets the root in "
                        f"{len(segs)} disjoint segments"
                    )
                else:
                    s = len(shared_arrows)
                    seg_forward = arrow_direction[shared_arrows[0]]
                    k = s if seg_forward else m + 2 - s
                    beta_h, beta_a = k - 1, m + 1 - k
                    cond1 = alpha_a >= beta_h
                    cond2 = alpha_h >= beta_a
                    if cond1 and not cond2:
                        orientation = COUNTERCLOCKWISE
                    elif cond2 and not cond1:
                        orientation = CLOCKWISE
                    else:
                        orientation = (
                            COUNTERCLOCKWISE if beta_h <= beta_a else CLOCKWISE
                        )
                    classified.append((c, beta_h, beta_a, orientation))
            elif shared_vertices >= 2 and not shared_arrows:
                problems.append(
                    f"saturated cycle {c.vertices} shares {shared_vertices} vertices "
                    "with the root but no arrow (unsupported attachment)"
                )
            tagged_saturated.append(
                CycleRecord(
                    c.vertices,
                    c.arrows,
                    c.forward,
                    c.oriented,
                    c.saturated,
                    shared_vertices,
                    beta_h,
                    beta_a,
                    orientation,
                )
            )
        r_h = alpha_h + sum(bh for _, bh, _, o in classified if o == CLOCKWISE)
        r_a = alpha_a + sum(ba for _, _, ba, o in classified if o == COUNTERCLOCKWISE)
        if problems:
            e_result = ConditionResult(False, "; ".join(problems))
        elif (r_h - r_a) % m != 0:
            e_result = ConditionResult(
                False, f"r_h={r_h} and r_a={r_a} differ modulo m={m}"
            )
    conditions["e"] = e_result

    reasons = []
    if not gentle:
        reasons.append("not gentle: " + "; ".join(violations))
    for name in "abcde":
        if not conditions[name].passed:
            reasons.append(f"condition ({name}): {conditions[name].witness}")

    if reasons:
        verdict = REJECTED
    elif root is not None:
        verdict = ACCEPTED
    else:
        verdict = ACCEPTED_TYPE_A_ONLY

    if root is not None:
        root = CycleRecord(
            root.vertices,
            root.arrows,
            root.forward,
            root.oriented,
            root.saturated,
            len(root.vertices),
        )

    return RecognitionReport(
        quiver=bq,
        m=m,
        gentle=gentle,
        gentle_violations=violations,
        root_cycle=root,
        saturated_cycles=tagged_saturated,
        alpha_h=alpha_h,
        alpha_a=alpha_a,
        r_h=r_h,
        r_a=r_a,
        conditions=conditions,
        verdict=verdict,
        reasons=reasons,
    )


def _cycle_segments(cycle: CycleRecord, root_edges: frozenset[str]) -> list[list[str]]:
    """Contiguous blocks of root arrows around a cycle."""
    n = len(cycle)
    on_root = [cycle.arrows[i] in root_edges for i in range(n)]
    if all(on_root):
        return [list(cycle.arrows)]
    segments: list[list[str]] = []
    i = 0
    while i < n:
        if on_root[i] and not on_root[(i - 1) % n]:
            seg = []
            j = i
            while on_root[j % n]:
                seg.append(cycle.arrows[j % n])
                j += 1
            segments.append(seg)
            i = j
        else:
            i += 1
    return segments


def orientation_sweep(report: RecognitionReport) -> bool:
    """Whether the verdict and condition (e) survive reversing the traversal."""
    other = recognize(report.quiver, report.m, reverse_root=True)
    return (
        other.verdict == report.verdict
        and other.conditions["e"].passed == report.conditions["e"].passed
    )
