"""Exact depth of S/I via multigraded Betti numbers.

Projective dimension is read off the multigraded Betti table: the
candidate multidegrees are the elements of the lcm lattice of the minimal
generators, and for each multidegree a the Betti number beta_{i,a}(S/I)
is the reduced homology rank, in dimension i-2 and characteristic 0, of
the Koszul strand complex at a.  That complex is homotopy equivalent to
the order complex of the open interval below a in the lcm lattice, which
is also implemented directly (and cross-checked in the tests) for small
inputs.  depth = n - pd by Auslander-Buchsbaum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .monomials import Monomial, MonomialIdeal

__all__ = [
    "UnitIdealError",
    "PolarizationCapError",
    "LcmLattice",
    "BettiTable",
    "DepthResult",
    "build_lcm_lattice",
    "open_interval_homology",
    "reduced_homology",
    "betti",
    "depth_quotient",
    "depth_via_polarization",
    "max_ideal_associated",
]


class UnitIdealError(ValueError):
    """S/I = 0 has no depth; the unit ideal is rejected."""


class PolarizationCapError(RuntimeError):
    """Polarized variable count exceeds the configured cap."""


# ---------------------------------------------------------------------
# exact linear algebra


def rank_exact(columns):
    """Rank over Q of a sparse integer matrix given as columns {row: coeff}.

    Exact rational elimination; characteristic 0 by construction.
    """
    pivots = {}
    rank = 0
    for col in columns:
        work = {r: Fraction(c) for r, c in col.items() if c}
        while work:
            r = min(work)
            if r in pivots:
                piv = pivots[r]
                factor = work[r] / piv[r]
                for pr, pc in piv.items():
                    val = work.get(pr, Fraction(0)) - factor * pc
                    if val:
                        work[pr] = val
                    else:
                        work.pop(pr, None)
            else:
                pivots[r] = work
                rank += 1
                break
    return rank


# ---------------------------------------------------------------------
# reduced simplicial homology


def reduced_homology(faces):
    """Reduced homology ranks (char 0) of a simplicial complex.

    `faces` holds the nonempty faces as iterables of vertices; the empty
    face is implicit.  Returns {dim: rank} with only nonzero ranks, where
    the complex {empty face} has rank 1 in dimension -1.
    """
    by_dim = {}
    for f in faces:
        tf = tuple(sorted(f))
        by_dim.setdefault(len(tf) - 1, set()).add(tf)
    if not by_dim:
        return {-1: 1}
    top = max(by_dim)
    index = {d: {f: i for i, f in enumerate(sorted(by_dim[d]))} for d in by_dim}
    # boundary_rank[d] = rank of the map from d-faces to (d-1)-faces,
    # with the empty face as the unique (-1)-face.
    boundary_rank = {}
    for d in range(0, top + 1):
        cols = []
        for f in sorted(by_dim.get(d, ())):
            if d == 0:
                cols.append({0: 1})
                continue
            col = {}
            for j in range(d + 1):
                sub = f[:j] + f[j + 1:]
                col[index[d - 1][sub]] = -1 if j % 2 else 1
            cols.append(col)
        boundary_rank[d] = rank_exact(cols)
    boundary_rank[top + 1] = 0
    ranks = {}
    h_minus1 = 1 - boundary_rank[0]
    if h_minus1:
        ranks[-1] = h_minus1
    for d in range(0, top + 1):
        r = len(by_dim.get(d, ())) - boundary_rank[d] - boundary_rank[d + 1]
        if r:
            ranks[d] = r
    return ranks


def _is_cone(faces, vertices):
    """True if some vertex v has f + {v} in the complex for every face f.

    Cones are contractible, so their reduced homology vanishes; this is a
    cheap skip, never a source of nonzero ranks.
    """
    face_set = {frozenset(f) for f in faces}
    for v in vertices:
        if all(f | {v} in face_set for f in face_set if v not in f):
            return True
    return False


# ---------------------------------------------------------------------
# lcm lattice


@dataclass(frozen=True)
class LcmLattice:
    """Divisibility poset of all lcms of nonempty generator subsets.

    The bottom element is formal (the unit monomial is not stored); the
    top is the lcm of all generators.
    """

    n_vars: int
    elements: tuple

    def below(self, top):
        """Elements strictly dividing `top`: the open interval (bottom, top)."""
        return [e for e in self.elements if e != top and e.divides(top)]

    @property
    def top(self):
        best = self.elements[0]
        for e in self.elements[1:]:
            best = best.lcm(e)
        return best


def build_lcm_lattice(ideal):
    """Closure of the minimal generators under pairwise lcm."""
    if ideal.is_zero() or ideal.is_whole_ring():
        raise ValueError("lcm lattice needs a proper nonzero ideal")
    gens = ideal.gens
    elements = set(gens)
    frontier = set(gens)
    while frontier:
        fresh = set()
        for a in frontier:
            for g in gens:
                m = a.lcm(g)
                if m not in elements:
                    elements.add(m)
                    fresh.add(m)
        frontier = fresh
    return LcmLattice(ideal.n_vars, tuple(sorted(elements)))


def open_interval_homology(lattice, top):
    """Reduced homology of the order complex of the open interval below top.

    Faces of the order complex are the chains of lattice elements strictly
    dividing top.  Exponential in the interval size; meant for desk-scale
    inputs and cross-checks.
    """
    if top not in set(lattice.elements):
        raise ValueError("top element not in lattice")
    elems = sorted(lattice.below(top), key=lambda m: (m.degree(), m.exponents))
    above = [
        [j for j in range(i + 1, len(elems)) if elems[i].divides(elems[j])]
        for i in range(len(elems))
    ]
    faces = []

    def grow(chain, last):
        faces.append(tuple(chain))
        for j in above[last]:
            chain.append(j)
            grow(chain, j)
            chain.pop()

    for i in range(len(elems)):
        grow([i], i)
    return reduced_homology(faces)


# ---------------------------------------------------------------------
# Betti numbers and depth


@dataclass(frozen=True)
class BettiTable:
    """Finitely supported map (homological index, multidegree) -> rank."""

    n_vars: int
    entries: dict

    def total(self, i):
        return sum(r for (j, _), r in self.entries.items() if j == i)

    def projective_dimension(self):
        return max(i for (i, _) in self.entries)

    def total_sum(self):
        return sum(self.entries.values())


def _koszul_faces(exponents, member):
    """Faces of the Koszul strand complex at multidegree `exponents`.

    A squarefree tau (subset of the support, 0-indexed) is a face iff
    x^(a - tau) lies in the ideal; `member` answers membership for
    exponent tuples.  The complex is closed under subsets, so the DFS
    only extends faces that are present.
    """
    support = [i for i, e in enumerate(exponents) if e > 0]
    faces = []

    def grow(face, start, current):
        for k in range(start, len(support)):
            i = support[k]
            nxt = current[:i] + (current[i] - 1,) + current[i + 1:]
            if member(nxt):
                face.append(i)
                faces.append(tuple(face))
                grow(face, k + 1, nxt)
                face.pop()

    if member(exponents):
        grow([], 0, exponents)
        return faces, support, True
    return faces, support, False


def _membership_oracle(ideal):
    gens = [g.exponents for g in ideal.gens]
    cache = {}

    def member(exps):
        hit = cache.get(exps)
        if hit is None:
            hit = any(all(a <= b for a, b in zip(g, exps)) for g in gens)
            cache[exps] = hit
        return hit

    return member


def betti(ideal):
    """Multigraded Betti table of S/I; beta_0 = 1 at the unit multidegree."""
    if not ideal.is_proper():
        raise UnitIdealError("Betti table of the zero module is undefined")
    n = ideal.n_vars
    entries = {(0, Monomial.unit(n)): 1}
    if ideal.is_zero():
        return BettiTable(n, entries)
    member = _membership_oracle(ideal)
    lattice = build_lcm_lattice(ideal)
    for a in lattice.elements:
        faces, support, in_ideal = _koszul_faces(a.exponents, member)
        if not in_ideal:
            continue
        if faces and _is_cone(faces, support):
            continue
        for d, r in reduced_homology(faces).items():
            entries[(d + 2, a)] = r
    return BettiTable(n, entries)


@dataclass(frozen=True)
class DepthResult:
    """depth + pd = n_vars (Auslander-Buchsbaum); method records the route."""

    depth: int
    pd: int
    n_vars: int
    method: str

    def __post_init__(self):
        assert self.depth + self.pd == self.n_vars
        assert 0 <= self.depth <= self.n_vars

    def as_dict(self):
        return {
            "depth": self.depth,
            "pd": self.pd,
            "n_vars": self.n_vars,
            "method": self.method,
        }


def depth_quotient(ideal):
    """Exact depth(S/I) from the Betti table; zero ideal has depth n."""
    if ideal.is_whole_ring():
        raise UnitIdealError("depth of S/S is undefined")
    n = ideal.n_vars
    if ideal.is_zero():
        return DepthResult(n, 0, n, "lattice")
    pd = betti(ideal).projective_dimension()
    return DepthResult(n - pd, pd, n, "lattice")


def depth_via_polarization(ideal, cap=14):
    """Cross-check oracle: pd of the polarized (squarefree) ideal.

    Polarization preserves projective dimension, so
    depth(S/I) = n_vars - pd(polarization).
    """
    if ideal.is_whole_ring():
        raise UnitIdealError("depth of S/S is undefined")
    n = ideal.n_vars
    if ideal.is_zero():
        return DepthResult(n, 0, n, "polarization")
    polarized, added = ideal.polarize()
    if polarized.n_vars > cap:
        raise PolarizationCapError(
            "polarized ring has %d variables, cap is %d" % (polarized.n_vars, cap)
        )
    pd = betti(polarized).projective_dimension()
    return DepthResult(n - pd, pd, n, "polarization")


def max_ideal_associated(ideal, box_cap=300000):
    """Whether the maximal ideal is associated to S/I, i.e. depth(S/I) = 0.

    When true, also searches the exponent box below lcm(G(I)) - (1,...,1)
    for an explicit witness w with w not in I and x_j*w in I for all j.
    The boolean derives from the depth; the witness is best-effort and may
    be None if the box is exhausted or exceeds box_cap.
    """
    if ideal.is_zero() or ideal.is_whole_ring():
        raise ValueError("needs a proper nonzero ideal")
    if depth_quotient(ideal).depth != 0:
        return False, None
    top = ideal.lcm_of_gens().exponents
    size = 1
    for e in top:
        size *= max(e, 1)
    if size > box_cap:
        return True, None
    n = ideal.n_vars
    candidates = sorted(
        _cartesian(*(range(max(e, 1)) for e in top)),
        key=lambda a: -sum(a),
    )
    for exps in candidates:
        w = Monomial(exps)
        if ideal.contains(w):
            continue
        if all(
            ideal.contains(w * Monomial.variable(j, n)) for j in range(1, n + 1)
        ):
            return True, w
    return True, None
