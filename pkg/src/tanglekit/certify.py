"""Theorem engine: check hypotheses, emit replayable certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from .diagram import Diagram, Mode, parse
from . import graph8 as g8
from . import links as lk
from . import tangles as tg

NON_SPLIT = "NonSplitLink"
NON_TRIVIAL = "NonTrivialLink"
PRIME = "PrimeLink"
COMPOSITE_IFF = "CompositeLinkIffProjection"
PRIME_TANGLE = "PrimeTangle"
COMPOSITE_TANGLE = "CompositeTangle"
LOCAL_KNOT = "LocalKnot"
VERTEX_SPLIT = "VertexSplitProjection"
NOT_RATIONAL = "NotRational"

CONCLUSIONS = (
    NON_SPLIT, NON_TRIVIAL, PRIME, COMPOSITE_IFF, PRIME_TANGLE,
    COMPOSITE_TANGLE, LOCAL_KNOT, VERTEX_SPLIT, NOT_RATIONAL,
)


@dataclass(frozen=True)
class Certificate:
    conclusion: str
    rule: str
    hypotheses: tuple[tuple[str, Any], ...]
    witness: dict = field(default_factory=dict)
    certified: bool = True

    def to_json(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "rule": self.rule,
            "certified": self.certified,
            "hypotheses": [{"predicate": k, "value": v} for k, v in self.hypotheses],
            "witness": self.witness,
        }


# -- predicate registry --------------------------------------------------------

def _prime_projection(d: Diagram) -> bool:
    if d.mode is Mode.TANGLE:
        return tg.is_prime_tangle_projection(d)[0]
    return lk.is_prime_projection(d)[0]


def _not_rational(d: Diagram) -> bool:
    return tg.is_strongly_alternating(d) and lk.is_connected(d)[0]


PREDICATES: dict[str, Callable[[Diagram], Any]] = {
    "crossings>=1": lambda d: d.n_crossings >= 1,
    "knot": lambda d: d.n_components == 1,
    "connected": lambda d: lk.is_connected(d)[0],
    "reduced": lambda d: lk.is_reduced(d)[0],
    "alternating": lk.is_alternating,
    "positive": lk.is_positive_diagram,
    "semi_adequate": lk.is_semi_adequate,
    "twist_adequate": lk.is_twist_adequate,
    "prime_projection": _prime_projection,
    "nontrivial_certified": lambda d: lk.nontrivial_criterion(d) is not None,
    "strongly_alternating": tg.is_strongly_alternating,
    "not_rational_certified": _not_rational,
    "mof": lambda d: tg.mof(d).satisfied,
    "split_tangle": lambda d: tg.split_tangle_witness(d) is not None,
    "sawollek_reduced_alternating": g8.sawollek_reduced_alternating,
    "vertex_split": lambda d: g8.vertex_split_witness(d) is not None,
    "single_vertex": lambda d: len(d.vertices) == 1,
}

_DERIVED: dict[str, Callable[[Diagram], Diagram]] = {
    "N": tg.numerator_closure,
    "D": tg.denominator_closure,
    "tangle": g8.excise_vertex,
}


def evaluate(name: str, d: Diagram, witness: dict | None = None) -> Any:
    """Value of a (possibly prefixed) hypothesis predicate on ``d``.

    ``N.x`` / ``D.x`` evaluate on a tangle closure, ``tangle.x`` on the
    excised tangle of a figure-eight graph, and ``witness.K.x`` on the
    witness knot stored in ``witness["knot"]``.
    """
    if name.startswith("witness.K."):
        return evaluate(name[len("witness.K."):], parse(witness["knot"]))
    head, _, rest = name.partition(".")
    if rest and head in _DERIVED:
        return evaluate(rest, _DERIVED[head](d), witness)
    return PREDICATES[name](d)


def replay(cert: Certificate, d: Diagram) -> bool:
    """Re-evaluate every recorded hypothesis; True when all values reproduce."""
    return all(evaluate(k, d, cert.witness) == v for k, v in cert.hypotheses)


def _check(d: Diagram, names, witness: dict | None = None) -> tuple[tuple[str, Any], ...]:
    return tuple((n, evaluate(n, d, witness)) for n in names)


def _holds(hyps) -> bool:
    return all(v is True for _, v in hyps)


# -- witness payloads -------------------------------------------------------------

def face_walk(d: Diagram, face: int) -> list[int]:
    """Signed edge labels around a face (negative: traversed from end 1)."""
    return [(dart >> 1) + 1 if dart % 2 == 0 else -((dart >> 1) + 1) for dart in d.faces[face].darts]


def composite_payload(d: Diagram, w: lk.CompositeWitness) -> dict:
    e, f = w.edges
    fa, fb = w.faces
    return {
        "edges": [e + 1, f + 1],
        "faces": [fa, fb],
        "side_crossings": list(w.side_crossings),
        "circle": [[e + 1, face_walk(d, fb)], [f + 1, face_walk(d, fa)]],
    }


def knot_payload(k: Diagram, criterion: str | None) -> dict:
    return {"knot": str(k), "criterion": criterion}


def _criterion_names(criterion: str) -> list[str]:
    return ["witness.K." + n for n in lk.CRITERION_PREDICATES[criterion]]


# -- links --------------------------------------------------------------------

def certify_link(d: Diagram) -> list[Certificate]:
    out: list[Certificate] = []
    base = _check(d, ["connected", "reduced", "alternating"])
    connected = base[0][1]
    if _holds(base):
        out.append(Certificate(NON_SPLIT, "Menasco (1)", base))
        if connected:
            prime = _check(d, ["prime_projection"])
            if _holds(prime):
                out.append(Certificate(PRIME, "Menasco (2)", base + prime))
    kmt = _check(d, ["connected", "reduced", "alternating", "crossings>=1"])
    if _holds(kmt):
        out.append(Certificate(NON_TRIVIAL, "Kauffman-Murasugi-Thistlethwaite", kmt))
    ozawa = _check(d, ["connected", "positive"])
    if _holds(ozawa):
        out.append(Certificate(NON_SPLIT, "Ozawa", ozawa))
    stoim = _check(d, ["knot", "reduced", "positive", "crossings>=1"])
    if _holds(stoim):
        out.append(Certificate(NON_TRIVIAL, "Stoimenow", stoim))
    thist = _check(d, ["semi_adequate", "crossings>=1", "reduced"])
    if _holds(thist):
        out.append(Certificate(NON_TRIVIAL, "Thistlethwaite (1)", thist))
        if connected:
            out.append(Certificate(NON_SPLIT, "Thistlethwaite (2)", thist + (("connected", True),)))
    if _holds(ozawa):
        oz_prime = _check(d, ["connected", "positive", "nontrivial_certified", "prime_projection"])
        if _holds(oz_prime):
            out.append(Certificate(PRIME, "Ozawa", oz_prime))
    futer = _check(d, ["connected", "reduced", "twist_adequate"])
    if _holds(futer):
        prime, w = lk.is_prime_projection(d)
        witness = {"projection": "prime" if prime else "composite", "link": "prime" if prime else "composite"}
        if w is not None:
            witness.update(composite_payload(d, w))
        out.append(Certificate(COMPOSITE_IFF, "Futer-Kalfagianni-Purcell", futer + (("prime_projection", prime),), witness))
    return out


# -- tangles ----------------------------------------------------------------------

def _knotted_arc(t: Diagram) -> tuple[lk.CompositeWitness | None, Diagram | None, str | None]:
    first = None
    for w in tg.tangle_composite_witnesses(t):
        k = g8.enclosed_knot(t, w)
        crit = lk.nontrivial_criterion(k)
        if first is None:
            first = (w, k, None)
        if crit is not None:
            return w, k, crit
    return first if first is not None else (None, None, None)


def _tangle_witness(t: Diagram, prime: bool) -> dict:
    if prime:
        return {}
    w, k, crit = _knotted_arc(t)
    payload = composite_payload(t, w)
    payload.update(knot_payload(k, crit))
    return payload


def certify_tangle(t: Diagram) -> list[Certificate]:
    out: list[Certificate] = []
    lt = _check(t, ["strongly_alternating", "connected"])
    if _holds(lt):
        out.append(Certificate(NOT_RATIONAL, "Lickorish-Thistlethwaite (strongly alternating and connected)", lt))
    if t.n_crossings == 0:
        return out
    prime = tg.is_prime_tangle_projection(t)[0]
    conclusion = PRIME_TANGLE if prime else COMPOSITE_TANGLE
    m = tg.mof(t).satisfied
    mof_hyps = _check(t, ["not_rational_certified"]) + (("mof", m), ("prime_projection", prime))
    if m != "none" and _holds(mof_hyps[:1]):
        out.append(Certificate(conclusion, "MOF tangle primeness", mof_hyps, _tangle_witness(t, prime)))
        return out
    crom = _check(t, ["strongly_alternating"]) + (("prime_projection", prime),)
    if _holds(crom[:1]):
        out.append(Certificate(conclusion, "Cromwell (strongly alternating)", crom, _tangle_witness(t, prime)))
        return out
    if not prime:
        for prop in ("alternating", "positive", "semi_adequate"):
            hyps = _check(t, ["crossings>=1", "D.reduced", "D." + prop]) + (("prime_projection", False),)
            if _holds(hyps[:3]):
                out.append(Certificate(COMPOSITE_TANGLE, "knotted arc", hyps, _tangle_witness(t, False)))
                break
    return out


# -- figure-eight graphs ----------------------------------------------------------

def certify_graph8(g: Diagram, *, research: bool = False) -> list[Certificate]:
    single = len(g.vertices) == 1
    certified = single
    out: list[Certificate] = []
    vs = g8.vertex_split_witness(g)
    if vs is not None:
        witness = {
            "vertex": vs.vertex,
            "corners": list(vs.corners),
            "face": vs.face,
            "circle": [[0, face_walk(g, vs.face)]],
        }
        out.append(Certificate(VERTEX_SPLIT, "vertex-split circle (Sawollek, backward direction)",
                               _check(g, ["vertex_split"]), witness, certified))
    if not single:
        return out if research else []
    lkw = g8.local_knot_witness(g)
    if lkw is None:
        return out
    witness = {"route": lkw.route, "tangle": str(lkw.tangle), **knot_payload(lkw.knot, lkw.criterion)}
    witness.update(lkw.circle)
    crit = _criterion_names(lkw.criterion)
    if lkw.route == "b":
        split_hyps = _check(g, ["crossings>=1", "sawollek_reduced_alternating", "vertex_split"])
        rule = "vertex-split local knot" if _holds(split_hyps) else "vertex-split string closure"
        hyps = _check(g, ["tangle.split_tangle"]) + split_hyps + _check(g, crit, witness)
    else:
        rule = "composite-circle local knot"
        hyps = (("tangle.mof", tg.mof(lkw.tangle).satisfied), ("tangle.prime_projection", False))
        hyps += _check(g, crit, witness)
    out.append(Certificate(LOCAL_KNOT, rule, hyps, witness, certified))
    return out


def certify(d: Diagram, *, research: bool = False) -> list[Certificate]:
    if d.mode is Mode.LINK:
        return certify_link(d)
    if d.mode is Mode.TANGLE:
        return certify_tangle(d)
    return certify_graph8(d, research=research)
