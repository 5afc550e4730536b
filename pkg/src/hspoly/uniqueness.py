"""Uniqueness certificates for polynomial solutions of difference equations.

Roots of g (the coefficient of y(x+2h) in the recurrence form) and of
g - h r (the coefficient of y(x)) are grouped into classes of points that
differ by integer multiples of h.  Membership is decided exactly: a root of
P collides with a root of Q at offset k iff gcd(P(x), Q(x + k h)) is
nonconstant, so irrational roots need no numeric comparison.

Three sufficient conditions are checked, in this order:

* ``T1``: some root a of g - hr has no root of g on {a + k h : k >= 0};
* ``T1_REMARK``: some root b of g has no root of g - hr on {b - k h : k >= 0};
* ``T2``: on {a + k h : k >= 0} for some root a of g - hr, roots of g - hr
  outnumber roots of g.

Any of them rules out two linearly independent polynomial solutions.
``INCONCLUSIVE`` only means none of the conditions applies.
"""
from __future__ import annotations

import enum
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisViolation
from .fdeq import DifferenceEquation
from .ratpoly import Poly, RealRoot, RootList, count_roots_in, poly_gcd, poly_shift, real_roots

G = "G"
G_MINUS_HR = "G_MINUS_HR"


class Verdict(str, enum.Enum):
    T1 = "T1"
    T1_REMARK = "T1_REMARK"
    T2 = "T2"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class Member:
    root: RealRoot
    source: str
    index: int
    offset: int

    def to_json(self) -> dict:
        return {"source": self.source, "index": self.index, "offset": self.offset,
                "root": self.root.to_json()}


@dataclass(frozen=True)
class LatticeClass:
    """Roots lying on one h-lattice; ``offset`` counts steps of h above the anchor."""

    anchor: RealRoot
    members: tuple[Member, ...]

    def count(self, source: str, *, at_least: int | None = None, at_most: int | None = None) -> int:
        return sum(
            1
            for m in self.members
            if m.source == source
            and (at_least is None or m.offset >= at_least)
            and (at_most is None or m.offset <= at_most)
        )

    def to_json(self) -> dict:
        return {"anchor": self.anchor.to_json(), "members": [m.to_json() for m in self.members]}


@dataclass(frozen=True)
class UniquenessCertificate:
    verdict: Verdict
    roots_g: RootList
    roots_g_minus_hr: RootList
    kappa: Fraction
    witness: LatticeClass | None = None
    witness_root: Member | None = None
    direction: str | None = None
    collision_report: tuple[LatticeClass, ...] = field(default=())

    @property
    def certified(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE

    def to_json(self) -> dict:
        witness = None
        if self.witness is not None:
            witness = {
                "direction": self.direction,
                "root": self.witness_root.to_json(),
                "class": self.witness.to_json(),
            }
        return {
            "verdict": self.verdict.value,
            "kappa": str(self.kappa),
            "witness": witness,
            "roots_g": self.roots_g.to_json(),
            "roots_g_minus_hr": self.roots_g_minus_hr.to_json(),
            "collisions": [c.to_json() for c in self.collision_report if len(c.members) > 1],
        }


def _checked_roots(p: Poly, label: str) -> RootList:
    if p.is_zero():
        raise HypothesisViolation(f"{label} is the zero polynomial")
    roots = real_roots(p)
    if not roots.all_real:
        raise HypothesisViolation(f"{label} has non-real roots")
    if not roots.all_simple:
        raise HypothesisViolation(f"{label} has repeated roots")
    return roots


def _roots_hit(D: Poly, roots: RootList) -> list[int]:
    """Indices of the roots (of a multiple of D) that are roots of D."""
    hits = []
    for i, r in enumerate(roots):
        if r.is_exact:
            if D(r.lo) == 0:
                hits.append(i)
        elif count_roots_in(D, r.lo, r.hi) > 0:
            hits.append(i)
    return hits


def _collisions(P: Poly, Proots: RootList, Q: Poly, Qroots: RootList, h: Fraction, k: int):
    """Pairs (i, j) with Proots[i] + k h == Qroots[j], decided by a shifted gcd."""
    D = poly_gcd(P, poly_shift(Q, k * h))
    if D.degree < 1:
        return []
    src = _roots_hit(D, Proots)
    dst = _roots_hit(poly_shift(D, -k * h), Qroots)
    if len(src) != len(dst):
        raise HypothesisViolation("inconsistent lattice collision attribution")
    # translation preserves order, so sorted lists pair up elementwise
    return list(zip(src, dst))


def lattice_classes(eq: DifferenceEquation) -> list[LatticeClass]:
    """Partition the roots of g and g - hr into classes modulo translation by h."""
    return _lattice_data(eq)[0]


def _lattice_data(eq: DifferenceEquation):
    h = eq.h
    A = eq.g_minus_hr
    B = eq.g
    Aroots = _checked_roots(A, "g - h r")
    Broots = _checked_roots(B, "g")
    nodes = [(G_MINUS_HR, i) for i in range(len(Aroots))] + [(G, j) for j in range(len(Broots))]
    root_of = {(G_MINUS_HR, i): r for i, r in enumerate(Aroots)}
    root_of.update({(G, j): r for j, r in enumerate(Broots)})
    kappa = A.lc / B.lc
    if not nodes:
        return [], Aroots, Broots, kappa
    lo = min(r.lo for r in root_of.values())
    hi = max(r.hi for r in root_of.values())
    K = math.ceil((hi - lo) / h)

    # edges: (u, v, k) meaning root(v) = root(u) + k h
    edges = defaultdict(list)

    def add(u, v, k):
        edges[u].append((v, k))
        edges[v].append((u, -k))

    polys = {G_MINUS_HR: (A, Aroots), G: (B, Broots)}
    for sp, sq, ks in (
        (G_MINUS_HR, G_MINUS_HR, range(1, K + 1)),
        (G, G, range(1, K + 1)),
        (G_MINUS_HR, G, range(-K, K + 1)),
    ):
        P, Pr = polys[sp]
        Q, Qr = polys[sq]
        if not len(Pr) or not len(Qr):
            continue
        for k in ks:
            for i, j in _collisions(P, Pr, Q, Qr, h, k):
                add((sp, i), (sq, j), k)

    seen: dict = {}
    classes = []
    for start in nodes:
        if start in seen:
            continue
        comp = {start: 0}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v, k in edges[u]:
                if v not in comp:
                    comp[v] = comp[u] + k
                    queue.append(v)
        base = min(comp.values())
        members = sorted(
            (Member(root_of[n], n[0], n[1], off - base) for n, off in comp.items()),
            key=lambda m: (m.offset, m.source),
        )
        for n in comp:
            seen[n] = True
        anchor = next(m.root for m in members if m.offset == 0)
        classes.append(LatticeClass(anchor, tuple(members)))
    classes.sort(key=lambda c: float(c.anchor))
    return classes, Aroots, Broots, kappa


def _certificate(eq, verdict_fn) -> UniquenessCertificate:
    classes, Aroots, Broots, kappa = _lattice_data(eq)
    for cls in classes:
        hit = verdict_fn(cls)
        if hit is not None:
            verdict, member, direction = hit
            return UniquenessCertificate(verdict, Broots, Aroots, kappa, cls, member, direction,
                                         tuple(classes))
    return UniquenessCertificate(Verdict.INCONCLUSIVE, Broots, Aroots, kappa,
                                 collision_report=tuple(classes))


def _t1(cls: LatticeClass):
    for m in cls.members:
        if m.source == G_MINUS_HR and cls.count(G, at_least=m.offset) == 0:
            return Verdict.T1, m, "up"
    return None


def _t1_remark(cls: LatticeClass):
    for m in cls.members:
        if m.source == G and cls.count(G_MINUS_HR, at_most=m.offset) == 0:
            return Verdict.T1_REMARK, m, "down"
    return None


def _t2(cls: LatticeClass):
    for m in cls.members:
        if m.source == G_MINUS_HR and (
            cls.count(G_MINUS_HR, at_least=m.offset) > cls.count(G, at_least=m.offset)
        ):
            return Verdict.T2, m, "up"
    return None


def check_theorem1(eq: DifferenceEquation) -> UniquenessCertificate:
    return _certificate(eq, _t1)


def check_theorem1_remark(eq: DifferenceEquation) -> UniquenessCertificate:
    return _certificate(eq, _t1_remark)


def check_theorem2(eq: DifferenceEquation) -> UniquenessCertificate:
    return _certificate(eq, _t2)


def certify(eq: DifferenceEquation) -> UniquenessCertificate:
    """First applicable of T1, T1_REMARK, T2; otherwise INCONCLUSIVE with the collision report."""
    classes, Aroots, Broots, kappa = _lattice_data(eq)
    for rule in (_t1, _t1_remark, _t2):
        for cls in classes:
            hit = rule(cls)
            if hit is not None:
                verdict, member, direction = hit
                return UniquenessCertificate(verdict, Broots, Aroots, kappa, cls, member,
                                             direction, tuple(classes))
    return UniquenessCertificate(Verdict.INCONCLUSIVE, Broots, Aroots, kappa,
                                 collision_report=tuple(classes))
