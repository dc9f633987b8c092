"""Simplicial complexes as normalized facet families over an indexed vertex set.

A complex is stored as the antichain of its facets, each facet a bitmask over
vertex indices 0..n-1, kept in canonical (lexicographic-by-member-list) order
so equal complexes compare equal.  Complexes are immutable; every operation
here is a pure function and safe to call concurrently on shared objects.

``from_facets`` is the strict public constructor: it enforces that every
declared vertex occurs in some facet.  Operations whose results may legally
drop vertices (Alexander dual, facet complementation, skeletons) build their
output through the relaxed internal path instead; such complexes still live
on the ambient vertex set and all downstream computations (faces, homology)
handle them uniformly.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from . import config
from ._bits import bits_of, iter_bits, mask_of, popcount, submasks
from .errors import (
    DimensionOutOfRange,
    EmptyInput,
    FullSimplex,
    IndexOutOfRange,
    NotAFace,
    SizeLimit,
    UnusedVertex,
)

VertexSet = tuple[int, ...]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def _canonical_antichain(masks) -> tuple[int, ...]:
    """Drop dominated sets, deduplicate, sort lexicographically by member list."""
    unique = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in unique:
        if not any(m | k == k for k in kept):
            kept.append(m)
    kept.sort(key=bits_of)
    return tuple(kept)


@dataclass(frozen=True)
class SimplicialComplex:
    """Facet family on vertices 0..n-1; construct via :func:`from_facets`."""

    n: int
    facets: tuple[int, ...]
    labels: tuple[str, ...] = field(compare=False, default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", default_labels(self.n))

    # -- basic structure -------------------------------------------------

    @property
    def dim(self) -> int:
        return max(popcount(f) for f in self.facets) - 1

    @property
    def facet_members(self) -> tuple[VertexSet, ...]:
        return tuple(bits_of(f) for f in self.facets)

    @property
    def used_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def covers_all_vertices(self) -> bool:
        return self.used_mask == (1 << self.n) - 1

    @property
    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    @property
    def is_full_simplex(self) -> bool:
        return self.facets == ((1 << self.n) - 1,)

    def label_set(self, mask_or_members) -> tuple[str, ...]:
        members = bits_of(mask_or_members) if isinstance(mask_or_members, int) else tuple(mask_or_members)
        return tuple(self.labels[i] for i in members)

    def contains(self, face) -> bool:
        """Is the given vertex set (mask or iterable) a face?"""
        m = face if isinstance(face, int) else mask_of(face)
        return any(m | f == f for f in self.facets)

    def __repr__(self):
        parts = ",".join("{" + ",".join(self.label_set(f)) + "}" for f in self.facets)
        return f"SimplicialComplex(n={self.n}, <{parts}>)"


def _build(masks, n: int, labels: tuple[str, ...] | None = None) -> SimplicialComplex:
    """Relaxed constructor: normalizes but allows unused ambient vertices."""
    return SimplicialComplex(n, _canonical_antichain(masks), labels or ())


def from_facets(facet_lists, n: int, labels: tuple[str, ...] | None = None) -> SimplicialComplex:
    """Strict constructor from vertex-index sets.

    Dominated sets are removed and facets stored canonically.  Raises
    EmptyInput on no/empty facets, IndexOutOfRange on indices >= n or < 0,
    and UnusedVertex when some index in 0..n-1 appears in no facet (add the
    singleton explicitly if an isolated vertex is intended).
    """
    facet_lists = list(facet_lists)
    if not facet_lists:
        raise EmptyInput("a complex needs at least one facet")
    masks = []
    for fl in facet_lists:
        members = tuple(fl)
        if not members:
            raise EmptyInput("empty facet given")
        if any(i < 0 or i >= n for i in members):
            raise IndexOutOfRange(f"facet {sorted(members)} has an index outside 0..{n - 1}")
        masks.append(mask_of(members))
    cx = _build(masks, n, labels)
    if not cx.covers_all_vertices:
        missing = [i for i in range(n) if not (cx.used_mask >> i) & 1]
        raise UnusedVertex(f"vertices {missing} occur in no facet")
    return cx


def cone(cx: SimplicialComplex, label: str | None = None) -> SimplicialComplex:
    """Add a fresh apex vertex to every facet."""
    apex = 1 << cx.n
    return _build(
        [f | apex for f in cx.facets],
        cx.n + 1,
        cx.labels + ((label or f"x{cx.n + 1}"),),
    )


# -- face enumeration ---------------------------------------------------


@functools.lru_cache(maxsize=4096)
def _face_masks(cx: SimplicialComplex, limit: int) -> tuple[int, ...]:
    seen: set[int] = set()
    for f in cx.facets:
        for sub in submasks(f):
            seen.add(sub)
            if len(seen) > limit:
                raise SizeLimit(f"face count exceeds limit {limit}")
    return tuple(sorted(seen, key=lambda m: (popcount(m), bits_of(m))))


def face_masks(cx: SimplicialComplex, limit: int | None = None) -> tuple[int, ...]:
    """Every face as a bitmask (empty face included), sorted by (size, members)."""
    return _face_masks(cx, config.face_limit(limit))


def all_faces(cx: SimplicialComplex, limit: int | None = None) -> dict[int, list[VertexSet]]:
    """Faces grouped by dimension, -1 (the empty face) upward."""
    grouped: dict[int, list[VertexSet]] = {d: [] for d in range(-1, cx.dim + 1)}
    for m in face_masks(cx, limit):
        grouped[popcount(m) - 1].append(bits_of(m))
    return grouped


# -- f- and h-vectors ---------------------------------------------------


@dataclass(frozen=True)
class FVector:
    """Face counts (f_0, ..., f_{d-1}); f_{-1} = 1 is implicit."""

    entries: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.entries)

    @property
    def f_top(self) -> int:
        return self.entries[-1] if self.entries else 1

    def __getitem__(self, i: int) -> int:
        if i == -1:
            return 1
        return self.entries[i]


@dataclass(frozen=True)
class HVector:
    """Coefficients (h_0, ..., h_d); trailing zeros kept up to index d."""

    entries: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.entries) - 1

    @property
    def degree(self) -> int:
        """Degree of the h-polynomial after stripping trailing zeros."""
        for i in range(len(self.entries) - 1, -1, -1):
            if self.entries[i] != 0:
                return i
        return 0

    def stripped(self) -> tuple[int, ...]:
        return self.entries[: self.degree + 1]

    def __getitem__(self, i: int) -> int:
        return self.entries[i]


def f_vector(cx: SimplicialComplex, limit: int | None = None) -> FVector:
    counts = [0] * (cx.dim + 1)
    for m in face_masks(cx, limit):
        if m:
            counts[popcount(m) - 1] += 1
    return FVector(tuple(counts))


def h_vector(f: FVector) -> HVector:
    """Transform f to h: the coefficients of sum_i f_{i-1} t^i (1-t)^(d-i).

    Checks the defining identities h_0 = 1, h_1 = f_0 - d, sum h_i = f_{d-1}.
    """
    d = f.d
    coeffs = [0] * (d + 1)
    for i in range(d + 1):
        fi = f[i - 1]
        # expand fi * t^i * (1-t)^(d-i)
        binom = 1
        for j in range(d - i + 1):
            coeffs[i + j] += fi * binom * (-1) ** j
            binom = binom * (d - i - j) // (j + 1)
    h = HVector(tuple(coeffs))
    assert h[0] == 1
    assert sum(coeffs) == f.f_top
    if d >= 1:
        assert h[1] == f[0] - d
    return h


def h_vector_of(cx: SimplicialComplex) -> HVector:
    return h_vector(f_vector(cx))


# -- skeletons, links, deletions ----------------------------------------


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Complex generated by the faces of dimension exactly i."""
    if i < -1 or i > cx.dim:
        raise DimensionOutOfRange(f"i={i} outside -1..{cx.dim}")
    gens = [m for m in face_masks(cx) if popcount(m) == i + 1]
    return _build(gens, cx.n, cx.labels)


def _renormalize(masks, cx: SimplicialComplex) -> tuple[SimplicialComplex, VertexSet]:
    """Shrink to the used vertex set; returns (complex, new-index -> old-index)."""
    used = 0
    for m in masks:
        used |= m
    vmap = bits_of(used)
    lookup = {old: new for new, old in enumerate(vmap)}
    remapped = [mask_of(lookup[v] for v in iter_bits(m)) for m in masks]
    labels = tuple(cx.labels[old] for old in vmap)
    return _build(remapped, len(vmap), labels), vmap


def link(cx: SimplicialComplex, face) -> tuple[SimplicialComplex, VertexSet]:
    """Link of a face: {G : G disjoint from F, G union F a face}.

    The result is renormalized to its used vertices; the second component
    maps new indices back to the original ones.
    """
    fm = face if isinstance(face, int) else mask_of(face)
    if not cx.contains(fm):
        raise NotAFace(f"{bits_of(fm)} is not a face")
    gens = [m & ~fm for m in cx.facets if m | fm == m]
    return _renormalize(gens, cx)


def deletion(cx: SimplicialComplex, v: int) -> tuple[SimplicialComplex, VertexSet]:
    """Faces avoiding vertex v, renormalized with an index map."""
    if v < 0 or v >= cx.n:
        raise IndexOutOfRange(f"vertex {v}")
    bit = 1 << v
    gens = [m & ~bit for m in cx.facets]
    return _renormalize(gens, cx)


# -- nonfaces, duals, flagness -------------------------------------------


def minimal_nonfaces(cx: SimplicialComplex, limit: int | None = None) -> list[VertexSet]:
    """Inclusion-minimal subsets of the ambient vertex set that are not faces.

    These index the minimal monomial generators of the face ideal.
    """
    lim = config.face_limit(limit)
    if 1 << cx.n > lim:
        raise SizeLimit(f"2^{cx.n} subsets exceed limit {lim}")
    faces = set(face_masks(cx, limit))
    out: list[int] = []
    for k in range(1, cx.n + 1):
        for combo in itertools.combinations(range(cx.n), k):
            m = mask_of(combo)
            if m in faces:
                continue
            if all((m & ~(1 << v)) in faces for v in combo):
                out.append(m)
    return [bits_of(m) for m in sorted(out, key=lambda m: (popcount(m), bits_of(m)))]


def is_flag(cx: SimplicialComplex) -> tuple[bool, VertexSet | None]:
    """True iff every minimal nonface is an edge; else a witness of size >= 3."""
    for nf in minimal_nonfaces(cx):
        if len(nf) >= 3:
            return False, nf
    return True, None


def alexander_dual(cx: SimplicialComplex) -> SimplicialComplex:
    """Dual complex: complements of nonfaces; facets = complements of minimal nonfaces."""
    if cx.is_full_simplex:
        raise FullSimplex("the full simplex has no nonfaces; its dual is void")
    full = (1 << cx.n) - 1
    gens = [full & ~mask_of(nf) for nf in minimal_nonfaces(cx)]
    return _build(gens, cx.n, cx.labels)


def complement_complex(cx: SimplicialComplex) -> SimplicialComplex:
    """Complex generated by the complements of the facets."""
    full = (1 << cx.n) - 1
    if any(f == full for f in cx.facets):
        raise FullSimplex("a facet equals the whole vertex set")
    return _build([full & ~f for f in cx.facets], cx.n, cx.labels)
