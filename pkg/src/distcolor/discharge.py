"""Exact charge bookkeeping and the four discharging rule sets.

Vertices and faces start with charge ``d - 4``. Face-to-vertex rules fire once
per boundary occurrence of the vertex; face-to-face rules fire once per shared
edge. The rule engines use the face and vertex classes from :mod:`configs` but
never its detectors, so :func:`verify_unavoidability` is a genuine cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .configs import ConfigWitness, Structure, TheoremId, VertexClass, check_hypotheses, detect_all
from .plane import Face, PlaneGraph

THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
SIXTH = Fraction(1, 6)
ONE = Fraction(1)

ALLOWED_AMOUNTS = frozenset({ONE, HALF, THIRD, SIXTH})


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass
class ChargeLedger:
    vertex_charge: list[Fraction]
    face_charge: list[Fraction]

    def total(self) -> Fraction:
        return sum(self.vertex_charge, Fraction(0)) + sum(self.face_charge, Fraction(0))

    def copy(self) -> "ChargeLedger":
        return ChargeLedger(list(self.vertex_charge), list(self.face_charge))

    def to_dict(self) -> dict:
        return {
            "vertices": [frac_str(x) for x in self.vertex_charge],
            "faces": [frac_str(x) for x in self.face_charge],
            "total": frac_str(self.total()),
        }


# an element is ("v", id) or ("f", id)
Element = tuple[str, int]


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Element
    target: Element
    amount: Fraction

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "source": list(self.source),
            "target": list(self.target),
            "amount": frac_str(self.amount),
        }


@dataclass
class DischargeReport:
    theorem: TheoremId
    initial: ChargeLedger
    transfers: list[Transfer]
    final: ChargeLedger
    negative_elements: list[Element] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "initial": self.initial.to_dict(),
            "final": self.final.to_dict(),
            "transfers": [t.to_dict() for t in self.transfers],
            "negative_elements": [list(e) for e in self.negative_elements],
        }


def initial_charges(pg: PlaneGraph) -> ChargeLedger:
    return ChargeLedger(
        [Fraction(pg.degree(v) - 4) for v in range(pg.n)],
        [Fraction(f.size - 4) for f in pg.faces],
    )


# ---------------------------------------------------------------------------
# rule sets; each yields transfers in face-ID order then walk order


def _corners(f: Face):
    """Vertices on f's boundary, one per occurrence."""
    return f.walk


def _rules_2dg4(st: Structure):
    deg = st.deg
    on4 = [st.on_face_size(v, 4) for v in range(st.pg.n)]
    for f in st.pg.faces:
        if f.size < 5:
            continue
        for v in _corners(f):
            if deg[v] == 3:
                if on4[v]:
                    yield Transfer("R1", ("f", f.id), ("v", v), HALF)
                else:
                    yield Transfer("R0", ("f", f.id), ("v", v), THIRD)
        # R2: f borders a 5-face g = u1..u5 along u4u5, one transfer per shared edge
        for i in range(f.size):
            g = st.other_side(f, i)
            if g.size != 5 or g.id == f.id:
                continue
            if _r2_pattern(st, g, f, f.darts[i]):
                yield Transfer("R2", ("f", f.id), ("f", g.id), SIXTH)


def _r2_pattern(st: Structure, g: Face, f: Face, edge) -> bool:
    """Some labeling u1..u5 of g puts ``edge`` (shared with f) at u4u5, with
    d(u1)=d(u3)=d(u4)=3 and a 4-face on u1u2."""
    deg = st.deg
    for labels, across in st.five_labelings(g):
        u1, u2, u3, u4, u5 = labels
        if {u4, u5} != set(edge) or across(4, 5).id != f.id:
            continue
        if deg[u1] == deg[u3] == deg[u4] == 3 and across(1, 2).size == 4:
            return True
    return False


def _triangle_adjacent_to_triangle(st: Structure, t: Face) -> bool:
    return any(st.other_side(t, i).size == 3 for i in range(t.size))


def _rules_injg3(st: Structure):
    deg = st.deg
    for f in st.pg.faces:
        if f.size < 5:
            continue
        for v in _corners(f):
            if deg[v] == 3:
                yield Transfer("R0", ("f", f.id), ("v", v), THIRD)
        for i in range(f.size):
            g = st.other_side(f, i)
            if g.size == 3:
                if _triangle_adjacent_to_triangle(st, g):
                    yield Transfer("R2", ("f", f.id), ("f", g.id), HALF)
                else:
                    yield Transfer("R1", ("f", f.id), ("f", g.id), THIRD)
            elif f.size >= 6 and st.bad_injg3(g):
                yield Transfer("R3", ("f", f.id), ("f", g.id), THIRD)


def _rules_injg4(st: Structure):
    deg = st.deg
    for f in st.pg.faces:
        if f.size < 5:
            continue
        good = not st.bad_injg4(f)
        for v in _corners(f):
            if deg[v] == 2:
                yield Transfer("R0", ("f", f.id), ("v", v), ONE)
            elif deg[v] == 3:
                c = st.vclass[v]
                if c is VertexClass.SMALL and good:
                    yield Transfer("R1", ("f", f.id), ("v", v), ONE)
                elif c is VertexClass.MEDIUM and good:
                    yield Transfer("R2", ("f", f.id), ("v", v), HALF)
                elif c is VertexClass.LARGE:
                    yield Transfer("R3", ("f", f.id), ("v", v), THIRD)


def _rules_exact(st: Structure):
    deg = st.deg
    on4 = [st.on_face_size(v, 4) for v in range(st.pg.n)]
    for f in st.pg.faces:
        if f.size < 5:
            continue
        for v in _corners(f):
            if deg[v] == 2:
                yield Transfer("R0", ("f", f.id), ("v", v), ONE)
            elif deg[v] == 3:
                if on4[v]:
                    yield Transfer("R2", ("f", f.id), ("v", v), HALF)
                else:
                    yield Transfer("R1", ("f", f.id), ("v", v), THIRD)
        for i in range(f.size):
            g = st.other_side(f, i)
            if g.size == 3:
                yield Transfer("R3", ("f", f.id), ("f", g.id), THIRD)


RULES = {
    TheoremId.TWO_DIST_G4: _rules_2dg4,
    TheoremId.INJ_G3: _rules_injg3,
    TheoremId.INJ_G4: _rules_injg4,
    TheoremId.EXACT: _rules_exact,
}


def run_rules(pg: PlaneGraph, t: TheoremId, check: bool = True) -> DischargeReport:
    if check:
        check_hypotheses(pg, t, require_connected=False)
    st = Structure(pg)
    initial = initial_charges(pg)
    final = initial.copy()
    transfers = list(RULES[t](st))
    for tr in transfers:
        for elem, sign in ((tr.source, -1), (tr.target, 1)):
            kind, i = elem
            target = final.vertex_charge if kind == "v" else final.face_charge
            target[i] += sign * tr.amount
    negative = [("v", v) for v, x in enumerate(final.vertex_charge) if x < 0]
    negative += [("f", f) for f, x in enumerate(final.face_charge) if x < 0]
    return DischargeReport(t, initial, transfers, final, negative)


@dataclass
class ConfigFound:
    witnesses: list[ConfigWitness]

    def to_dict(self, pg: PlaneGraph | None = None) -> dict:
        return {"outcome": "ConfigFound", "witnesses": [w.to_dict(pg) for w in self.witnesses]}


@dataclass
class Anomaly:
    report: DischargeReport
    neighborhoods: dict

    def to_dict(self, pg: PlaneGraph | None = None) -> dict:
        return {"outcome": "Anomaly", "report": self.report.to_dict(), "neighborhoods": self.neighborhoods}


def _neighborhood(pg: PlaneGraph, elem: Element) -> dict:
    kind, i = elem
    if kind == "v":
        return {
            "neighbors": sorted(pg.adj[i]),
            "face_sizes": [f.size for f in pg.incident_faces(i)],
        }
    f = pg.faces[i]
    return {
        "walk": list(f.walk),
        "degrees": [pg.degree(v) for v in f.walk],
        "adjacent_face_sizes": [g.size for g in pg.adjacent_faces(f)],
    }


def verify_unavoidability(pg: PlaneGraph, t: TheoremId) -> ConfigFound | Anomaly:
    check_hypotheses(pg, t)
    witnesses = detect_all(pg, t, check=False)
    if witnesses:
        return ConfigFound(witnesses)
    report = run_rules(pg, t, check=False)
    nbhd = {f"{k}{i}": _neighborhood(pg, (k, i)) for k, i in report.negative_elements}
    return Anomaly(report, nbhd)
