"""Root system of the star-shaped graph attached to a weight list.

The graph has a centre ``*`` and one arm per weight ``r_i`` with vertices
``(i, 1), ..., (i, r_i - 1)``; ``*`` is joined to ``(i, 1)`` and ``(i, j)``
to ``(i, j + 1)``.  The Cartan matrix is ``2E - A``.

Vectors are stored flat: coordinate 0 is the centre, then the arms in
order.  Arm and flag indices in the public API are 1-based to match the
usual ``alpha_ij`` notation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .errors import GraphMismatch, NotFiniteType, ZeroVector

log = logging.getLogger(__name__)

REAL = "real"
IMAGINARY = "imaginary"
NOT_ROOT = "not_root"


def _arms(W) -> tuple:
    r = getattr(W, "r", W)
    return tuple(int(x) for x in r)


@dataclass(frozen=True)
class StarGraph:
    arms: tuple

    @property
    def vertices(self) -> list:
        out = ["*"]
        for i, r in enumerate(self.arms, start=1):
            out.extend((i, j) for j in range(1, r))
        return out

    @property
    def size(self) -> int:
        return 1 + sum(r - 1 for r in self.arms)

    def index(self, vertex) -> int:
        if vertex == "*":
            return 0
        i, j = vertex
        if not (1 <= i <= len(self.arms) and 1 <= j < self.arms[i - 1]):
            raise KeyError(vertex)
        return 1 + sum(r - 1 for r in self.arms[: i - 1]) + (j - 1)

    @property
    def edges(self) -> list:
        return _edges(self.arms)

    def neighbours(self, k: int) -> tuple:
        return _neighbours(self.arms)[k]


@lru_cache(maxsize=None)
def _edges(arms: tuple) -> list:
    edges = []
    start = 1
    for r in arms:
        if r >= 2:
            edges.append((0, start))
            for j in range(r - 2):
                edges.append((start + j, start + j + 1))
        start += r - 1
    return edges


@lru_cache(maxsize=None)
def _neighbours(arms: tuple) -> tuple:
    size = 1 + sum(r - 1 for r in arms)
    nb = [[] for _ in range(size)]
    for u, v in _edges(arms):
        nb[u].append(v)
        nb[v].append(u)
    return tuple(tuple(x) for x in nb)


def star_graph(W) -> StarGraph:
    return StarGraph(_arms(W))


@dataclass(frozen=True, order=True)
class LatticeVector:
    """Element of ``Z alpha_* + sum Z alpha_ij`` (optionally ``+ Z delta``).

    ``dhat`` is ``None`` for plain lattice vectors and an integer for the
    extended lattice, where the vector may also be read as the type
    ``(rank, flag dimensions, degree)`` of a sheaf.
    """

    arms: tuple
    coords: tuple
    dhat: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "arms", _arms(self.arms))
        coords = tuple(int(x) for x in self.coords)
        if len(coords) != 1 + sum(r - 1 for r in self.arms):
            raise GraphMismatch(f"{len(coords)} coordinates for arms {self.arms}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def from_parts(cls, W, rho: int, flags, dhat: Optional[int] = None) -> "LatticeVector":
        """``flags[i]`` lists the coefficients of ``alpha_{i+1, 1..r-1}``."""
        arms = _arms(W)
        coords = [rho]
        for r, f in zip(arms, flags, strict=True):
            f = list(f)
            if len(f) != r - 1:
                raise GraphMismatch(f"arm of weight {r} needs {r - 1} entries, got {len(f)}")
            coords.extend(f)
        return cls(arms, tuple(coords), dhat)

    @property
    def rho(self) -> int:
        return self.coords[0]

    @property
    def flags(self) -> tuple:
        out = []
        start = 1
        for r in self.arms:
            out.append(self.coords[start : start + r - 1])
            start += r - 1
        return tuple(out)

    @property
    def c(self) -> dict:
        return {
            (i, j): f[j - 1]
            for i, f in enumerate(self.flags, start=1)
            for j in range(1, len(f) + 1)
        }

    @property
    def height(self) -> int:
        return sum(self.coords)

    def drop_hat(self) -> "LatticeVector":
        return LatticeVector(self.arms, self.coords)

    def with_hat(self, dhat: int) -> "LatticeVector":
        return LatticeVector(self.arms, self.coords, dhat)

    def _check(self, other):
        if self.arms != other.arms:
            raise GraphMismatch(f"{self.arms} vs {other.arms}")

    def __add__(self, other):
        self._check(other)
        dh = None
        if self.dhat is not None or other.dhat is not None:
            dh = (self.dhat or 0) + (other.dhat or 0)
        return LatticeVector(self.arms, tuple(x + y for x, y in zip(self.coords, other.coords)), dh)

    def __neg__(self):
        return LatticeVector(self.arms, tuple(-x for x in self.coords),
                             None if self.dhat is None else -self.dhat)

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return LatticeVector(self.arms, tuple(k * x for x in self.coords),
                             None if self.dhat is None else k * self.dhat)

    def __str__(self):
        parts = []
        if self.rho:
            parts.append(f"{self.rho}a*")
        for (i, j), v in sorted(self.c.items()):
            if v:
                parts.append(f"{v}a{i}{j}")
        if self.dhat:
            parts.append(f"{self.dhat}d")
        return " + ".join(parts).replace("+ -", "- ") or "0"


def simple_root(W, vertex) -> LatticeVector:
    g = star_graph(W)
    coords = [0] * g.size
    coords[g.index(vertex)] = 1
    return LatticeVector(g.arms, tuple(coords))


def null_vector(W) -> LatticeVector:
    """Zero vector of the lattice."""
    g = star_graph(W)
    return LatticeVector(g.arms, (0,) * g.size)


def _pair(arms, u, v) -> int:
    total = 2 * sum(x * y for x, y in zip(u, v))
    for s, t in _edges(arms):
        total -= u[s] * v[t] + u[t] * v[s]
    return total


def _pair_simple(arms, k, v) -> int:
    return 2 * v[k] - sum(v[t] for t in _neighbours(arms)[k])


def cartan_pairing(u: LatticeVector, v: LatticeVector) -> int:
    """``u^T C v``; the delta coordinate is ignored."""
    if u.arms != v.arms:
        raise GraphMismatch(f"{u.arms} vs {v.arms}")
    return _pair(u.arms, u.coords, v.coords)


def _reflect(arms, v: tuple, k: int) -> tuple:
    a = _pair_simple(arms, k, v)
    if a == 0:
        return v
    out = list(v)
    out[k] -= a
    return tuple(out)


def reflect(v: LatticeVector, s) -> LatticeVector:
    """Simple reflection ``v - (alpha_s, v) alpha_s``; ``s`` is a vertex or flat index."""
    k = s if isinstance(s, int) else star_graph(v.arms).index(s)
    return LatticeVector(v.arms, _reflect(v.arms, v.coords, k), v.dhat)


def is_finite_type(W) -> bool:
    """Dynkin test on the star: A_n for at most two arms, D/E for three."""
    arms = [r for r in _arms(W) if r >= 2]
    if len(arms) <= 2:
        return True
    if len(arms) > 3:
        return False
    return sum(Fraction(1, r) for r in arms) > 1


def ade_type(W):
    """Dynkin label ``(letter, rank)`` of a finite-type star, read off its arms."""
    arms = sorted(r for r in _arms(W) if r >= 2)
    rank = 1 + sum(r - 1 for r in arms)
    if len(arms) <= 2:
        return ("A", rank)
    if not is_finite_type(W):
        raise NotFiniteType(f"arms {tuple(arms)}")
    if arms[0] == 2 and arms[1] == 2:
        return ("D", rank)
    return ("E", rank)


def classical_positive_root_count(letter: str, rank: int) -> int:
    if letter == "A":
        return rank * (rank + 1) // 2
    if letter == "D":
        return rank * (rank - 1)
    if letter == "E":
        return {6: 36, 7: 63, 8: 120}[rank]
    raise ValueError(letter)


def support_connected(v: LatticeVector) -> bool:
    arms = v.arms
    supp = {k for k, x in enumerate(v.coords) if x}
    if not supp:
        return False
    start = next(iter(supp))
    seen = {start}
    stack = [start]
    nb = _neighbours(arms)
    while stack:
        k = stack.pop()
        for t in nb[k]:
            if t in supp and t not in seen:
                seen.add(t)
                stack.append(t)
    return seen == supp


def in_fundamental_set(v: LatticeVector) -> bool:
    if any(x < 0 for x in v.coords) or not any(v.coords):
        return False
    if any(_pair_simple(v.arms, k, v.coords) > 0 for k in range(len(v.coords))):
        return False
    return support_connected(v)


def classify_root(v: LatticeVector, max_steps: Optional[int] = None) -> str:
    """``real``, ``imaginary`` or ``not_root`` by height descent.

    A positive vector that pairs positively with some simple root is
    reflected there, which strictly lowers its height.  The descent stops
    at a simple root, at a member of the fundamental set, or when a
    coordinate turns negative.
    """
    coords = v.coords
    arms = v.arms
    if not any(coords):
        raise ZeroVector("the zero vector is not classified")
    if all(x <= 0 for x in coords):
        coords = tuple(-x for x in coords)
    elif not all(x >= 0 for x in coords):
        return NOT_ROOT
    size = len(coords)
    if max_steps is None:
        # height drops by >= 1 per step, so the height itself bounds the descent
        max_steps = 10 * size * size + sum(coords)
    for _ in range(max_steps):
        if sum(coords) == 1:
            return REAL
        for k in range(size):
            a = _pair_simple(arms, k, coords)
            if a > 0:
                coords = _reflect(arms, coords, k)
                break
        else:
            w = LatticeVector(arms, coords)
            return IMAGINARY if support_connected(w) else NOT_ROOT
        if any(x < 0 for x in coords):
            return NOT_ROOT
    log.warning("classify_root: descent bound %d exhausted for %s", max_steps, v)
    return NOT_ROOT


@lru_cache(maxsize=None)
def _positive_roots(arms: tuple) -> tuple:
    size = 1 + sum(r - 1 for r in arms)
    simple = [tuple(1 if t == k else 0 for t in range(size)) for k in range(size)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for k in range(size):
                w = _reflect(arms, v, k)
                if w != v and all(x >= 0 for x in w) and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return tuple(sorted(seen, key=lambda c: (sum(c), c)))


def enumerate_positive_roots(W) -> list:
    """All positive roots of a finite-type star, sorted by height then coordinates."""
    if not is_finite_type(W):
        raise NotFiniteType(f"star {tuple(_arms(W))} is not of finite type")
    arms = _arms(W)
    return [LatticeVector(arms, c) for c in _positive_roots(arms)]


def rmax(W) -> int:
    """Largest centre coefficient among positive roots: the maximal rank of an indecomposable bundle."""
    return max(v.rho for v in enumerate_positive_roots(W))


def hat_cone_witness(t: LatticeVector):
    """Minimal ``k_i`` certifying ``t`` in the positive cone of the extended lattice, or ``None``.

    The cone is generated by ``alpha_* + m delta`` (any m), ``delta``,
    ``alpha_ij`` and ``delta - sum_j alpha_ij``.  Using ``k_i`` copies of the
    last generator on arm ``i`` clears negative flag entries; when ``rho = 0``
    the remaining delta coefficient must stay non-negative.
    """
    if t.rho < 0:
        return None
    ks = tuple(max(0, -min(f, default=0)) for f in t.flags)
    if t.rho == 0 and (t.dhat or 0) - sum(ks) < 0:
        return None
    return ks


def in_hat_positive_cone(t: LatticeVector) -> bool:
    return hat_cone_witness(t) is not None


def is_root_hat(t: LatticeVector) -> bool:
    if not any(t.coords):
        return (t.dhat or 0) != 0
    return classify_root(t.drop_hat()) != NOT_ROOT


def is_positive_root_hat(t: LatticeVector) -> bool:
    return is_root_hat(t) and in_hat_positive_cone(t)
