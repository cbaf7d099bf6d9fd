"""Canonical ordering of the dual derived from a primal canonical ordering.

Group ``V_k`` of the primal completes a set of inner faces when it is added.
Listing these face sets backwards, behind ``[f1, f2]``, gives a canonical
ordering of the dual rooted at ``(f1, f2, f_phi)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from .canonical import (
    CanonicalOrdering,
    EdgeAnnotation,
    LABELS,
    S,
    SE,
    SW,
    annotate,
    compute_canonical_ordering,
)
from .errors import InternalInvariantBroken
from .planar import DualGraph, PlanarGraph, dual
from .report import ValidationReport


@dataclass(frozen=True)
class DualCanonicalOrdering:
    dual: DualGraph
    ordering: CanonicalOrdering
    annotation: EdgeAnnotation

    @property
    def graph(self) -> PlanarGraph:
        return self.dual.graph

    def to_dict(self) -> dict:
        out = self.ordering.to_dict(self.annotation.idx)
        out["roots"] = list(self.graph.roots)
        return out


def completed_faces(g: PlanarGraph, co: CanonicalOrdering, annot: EdgeAnnotation) -> list[list[int]]:
    """Faces completed by each group; entry ``k - 1`` belongs to ``V_k``.

    A singleton completes the faces between consecutive incoming edges, in
    clockwise order around it.  A chain completes the one face below it.
    """
    face_of = g.face_of
    res: list[list[int]] = [[]]
    for k in range(2, co.K + 1):
        grp = co.groups[k - 1]
        if len(grp) == 1:
            inc = annot.incoming(g, grp[0])
            res.append([face_of[d] for d in inc[1:]])
        else:
            res.append([face_of[g.dart(grp[1], grp[0])]])
    return res


def dual_canonical_ordering(
    g: PlanarGraph,
    co: CanonicalOrdering | None = None,
    annot: EdgeAnnotation | None = None,
    D: DualGraph | None = None,
    engine: str = "compiled",
) -> DualCanonicalOrdering:
    """Dual ordering ``F_1 = [f1, f2]``, ``F_{K-k+2}`` = faces completed by ``V_k``."""
    if co is None:
        co = compute_canonical_ordering(g, engine=engine)
    if annot is None:
        annot = annotate(g, co, engine=engine)
    if D is None:
        D = dual(g)
    f1, f2, fphi = D.graph.roots
    if engine == "python":
        comp = completed_faces(g, co, annot)
        groups = [(f1, f2)] + [tuple(comp[k - 1]) for k in range(co.K, 1, -1)]
    else:
        A = g.arrays()
        gseq, gstart = co.flat()
        dseq, dstart = _k.dual_groups(
            A.head, A.cw_next, A.face_of, A.vdart, gseq, gstart,
            annot.array("out").astype(np.bool_), annot.array("last_out"), f1, f2,
        )
        dco = CanonicalOrdering.from_flat(dseq, dstart)
        groups = list(dco.groups)
    for j, grp in enumerate(groups):
        if not grp:
            raise InternalInvariantBroken(f"group {co.K - j + 1} completes no face")
    if groups[-1] != (fphi,):
        raise InternalInvariantBroken(f"last dual group {groups[-1]} is not (f_phi,)")
    if engine == "python":
        dco = CanonicalOrdering.from_groups(groups)
    return DualCanonicalOrdering(D, dco, annotate(D.graph, dco, engine=engine))


def edge_kind(g: PlanarGraph, annot: EdgeAnnotation, e: int) -> str:
    """``intra`` or the label at the head of the oriented edge: ``S``, ``SW``, ``SE``."""
    if annot.is_intra(g, e):
        return "intra"
    d = annot.oriented_dart(e)
    lab = annot.labels[d ^ 1]
    if lab in (S, SW, SE):
        return LABELS[lab]
    return f"bad:{LABELS[lab] if lab >= 0 else '?'}"


def verify_label_correspondence(
    g: PlanarGraph, annot: EdgeAnnotation, dco: DualCanonicalOrdering
) -> ValidationReport:
    """Edge by edge: SW and SE swap, S and intra swap.

    For an SW-edge the dual edge points from the left to the right face of
    the primal edge; for an SE-edge it points the other way.
    """
    rep = ValidationReport()
    dg, dan = dco.graph, dco.annotation
    for e in range(g.m):
        pk = edge_kind(g, annot, e)
        dk = edge_kind(dg, dan, e)
        want = {"SW": "SE", "SE": "SW", "S": "intra", "intra": "S"}.get(pk)
        if want is None or dk != want:
            rep.add("kind", e, f"primal {pk} edge has dual kind {dk}, expected {want}")
            continue
        d = annot.oriented_dart(e)
        dd = dan.oriented_dart(e)
        if pk == "SW" and dd != d:
            rep.add("direction", e, "dual of an SW-edge must cross it from left to right")
        elif pk == "SE" and dd != d ^ 1:
            rep.add("direction", e, "dual of an SE-edge must cross it from right to left")
    return rep
