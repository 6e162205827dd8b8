"""Membership, extreme points, and vertices of the stochastic-cube polytopes.

``Omega_n`` is the set of n x n x n stochastic tensors, ``Delta_n`` the convex
hull of the permutation tensors.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import basis_scan, ddm
from ._exact import rank
from .errors import DimensionError, IntegrityError, NotStochasticError, ResourceGuardError
from .latin import DEFAULT_CAP, enumerate_latin_squares, latin_to_tensor
from .simplex import phase_one
from .stochastic import constraint_system, is_stochastic
from .tensor_core import Tensor3, serialize_tensor, to_rational, zeros

VERTEX_CAP = 3


@dataclass(frozen=True)
class DecompositionCertificate:
    """Convex weights over Latin squares, or an infeasibility verdict."""

    feasible: bool
    terms: tuple = ()

    def __post_init__(self):
        if not self.feasible and self.terms:
            raise ValueError("an infeasible certificate carries no terms")

    def recombine(self) -> Tensor3:
        """``sum(weight * P_L)`` over the terms."""
        if not self.terms:
            raise ValueError("empty certificate")
        n = self.terms[0][0].n
        acc = zeros(n)
        for square, weight in self.terms:
            acc = acc + latin_to_tensor(square).scale(weight)
        return acc

    def verify(self, T: Tensor3) -> bool:
        if not self.feasible:
            return False
        weights = [w for _, w in self.terms]
        return all(w > 0 for w in weights) and sum(weights) == 1 and self.recombine() == T

    def to_json(self) -> str:
        """A list of ``{"square", "weight"}`` objects, or ``{"feasible": false}``."""
        if not self.feasible:
            return json.dumps({"feasible": False})
        return json.dumps([{"square": sq.rows(), "weight": str(w)} for sq, w in self.terms])


def _require_stochastic(T):
    if not is_stochastic(T):
        raise NotStochasticError("input tensor is not stochastic")


def membership_delta(T: Tensor3, cap: int = DEFAULT_CAP) -> DecompositionCertificate:
    """Decide whether ``T`` is a convex combination of permutation tensors.

    Solves ``sum_L x_L P_L = T, sum_L x_L = 1, x >= 0`` exactly over all Latin
    squares ``L`` of order n.  The basic solution found becomes the certificate.
    """
    _require_stochastic(T)
    squares = enumerate_latin_squares(T.n, cap=cap)
    tensors = [latin_to_tensor(L).data for L in squares]
    m = T.n ** 3
    A = [[P[e] for P in tensors] for e in range(m)]
    A.append([1] * len(squares))
    b = list(T.data) + [1]
    x = phase_one(A, b)
    if x is None:
        return DecompositionCertificate(False)
    cert = DecompositionCertificate(True, tuple((L, w) for L, w in zip(squares, x) if w > 0))
    if not cert.verify(T):
        raise IntegrityError("decomposition does not reproduce the input")
    return cert


def active_constraints(T: Tensor3):
    """Rows of the full system that ``T`` makes tight: all line sums plus ``x_ijk = 0`` rows."""
    C = constraint_system(T.n, reduced=False)
    rows = list(C.equality_matrix)
    m = T.n ** 3
    for c, v in enumerate(T.data):
        if v == 0:
            rows.append(tuple(int(t == c) for t in range(m)))
    return rows


def active_hyperplane_count(T: Tensor3) -> int:
    """Tight rows among the reduced equalities and the ``n**3`` nonnegativities."""
    return constraint_system(T.n).num_rows + sum(1 for v in T.data if v == 0)


def is_extreme(T: Tensor3) -> bool:
    """Vertex test: the tight constraints at ``T`` have rank ``n**3``."""
    _require_stochastic(T)
    return rank(active_constraints(T)) == T.n ** 3


def is_relative_interior(T: Tensor3) -> bool:
    """Stochastic with every entry positive.

    The uniform tensor is strictly positive, so no nonnegativity is forced to
    hold with equality; the relative interior is therefore exactly the
    strictly positive stochastic tensors.
    """
    return is_stochastic(T) and all(v > 0 for v in T.data)


@dataclass(frozen=True)
class VertexSet:
    n: int
    vertices: tuple = field(repr=False)

    @property
    def count(self) -> int:
        return len(self.vertices)

    def permutation_count(self) -> int:
        return sum(1 for V in self.vertices if all(v in (0, 1) for v in V.data))

    def __contains__(self, T):
        return T in self.vertices

    def to_json_lines(self) -> str:
        body = "".join(serialize_tensor(V, "json") for V in self.vertices)
        summary = json.dumps({"n": self.n, "count": self.count,
                              "permutation_tensors": self.permutation_count()})
        return body + summary + "\n"


def _guard(n, cap):
    if n < 1:
        raise ValueError("n must be positive")
    if n > cap:
        raise ResourceGuardError(
            f"vertex enumeration for n={n} exceeds the cap {cap}; raise the cap to proceed "
            "(n=4 runs for a very long time)")


def enumerate_vertices(n: int, cap: int = VERTEX_CAP, method: str = "dd") -> VertexSet:
    """All vertices of ``Omega_n``, sorted lexicographically by storage-order entries.

    ``method="dd"`` runs the double description method on the reduced
    equality system; ``method="scan"`` is the independent brute-force tight
    set scan (n <= 3 only).
    """
    _guard(n, cap)
    if method == "dd":
        C = constraint_system(n, reduced=True)
        raw = ddm.vertices_of_system(C.equality_matrix, C.equality_rhs)
    elif method == "scan":
        raw = basis_scan.scan_vertices(n)
    else:
        raise ValueError(f"unknown method {method!r}")
    verts = tuple(Tensor3(n, tuple(v)) for v in sorted(set(raw)))
    if len(verts) != len(raw):
        raise IntegrityError("vertex enumeration produced duplicates")
    return VertexSet(n, verts)


def perturb_toward(P: Tensor3, Q: Tensor3, t) -> Tensor3:
    """``t P + (1 - t) Q`` for stochastic ``P, Q`` and ``0 <= t <= 1``."""
    t = to_rational(t)
    if P.n != Q.n:
        raise DimensionError(f"side lengths differ: {P.n} vs {Q.n}")
    if not 0 <= t <= 1:
        raise ValueError(f"t must lie in [0, 1], got {t}")
    _require_stochastic(P)
    _require_stochastic(Q)
    return P.scale(t) + Q.scale(1 - t)


def dimension(n: int) -> int:
    """Dimension of ``Omega_n``: ``n^3 - (3n^2 - 3n + 1) = (n - 1)^3``."""
    if n < 1:
        raise ValueError("n must be positive")
    return n ** 3 - (3 * n * n - 3 * n + 1)


def affine_hull_dimension(points) -> int:
    """Rank of the differences from the first point."""
    points = list(points)
    if not points:
        raise ValueError("no points")
    base = points[0].data
    return rank([[a - b for a, b in zip(p.data, base)] for p in points[1:]]) if len(points) > 1 else 0


def random_convex_combination(tensors, rng: random.Random, terms=None, denominator=1000) -> Tensor3:
    """Random rational convex combination of some of ``tensors``.

    ``terms`` members are drawn (all of them when ``None``); weights are
    random positive integers up to ``denominator``, normalised.
    """
    tensors = list(tensors)
    chosen = tensors if terms is None else rng.sample(tensors, min(terms, len(tensors)))
    raw = [rng.randint(1, denominator) for _ in chosen]
    total = sum(raw)
    acc = zeros(chosen[0].n)
    for w, T in zip(raw, chosen):
        acc = acc + T.scale(Fraction(w, total))
    return acc


def random_omega(n: int, rng: random.Random, terms=None, vertices=None) -> Tensor3:
    """A random member of ``Omega_n`` drawn from the convex hull of its vertices."""
    if vertices is None:
        vertices = enumerate_vertices(n).vertices
    return random_convex_combination(vertices, rng, terms)


def random_delta(n: int, rng: random.Random, terms=None) -> Tensor3:
    """A random member of ``Delta_n`` (combination of permutation tensors)."""
    return random_convex_combination(
        [latin_to_tensor(L) for L in enumerate_latin_squares(n)], rng, terms)

