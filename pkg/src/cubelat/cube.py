"""Faces of the 0-1 d-cube as ternary words over ``0``, ``1`` and ``*``.

Letter ``i`` of a word constrains coordinate ``x_{i+1}``; ``*`` leaves it
free.  A vertex word is read as a binary number (first letter most
significant) to give its integer vertex id, so sorting vertex words
lexicographically sorts them by id.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

ZERO, ONE, FREE = "0", "1", "*"
ALPHABET = ZERO + ONE + FREE


class _Empty:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __bool__(self):
        return False


EMPTY = _Empty()


@dataclass(frozen=True, order=True)
class CubeWord:
    letters: str

    def __post_init__(self):
        if not self.letters or any(c not in ALPHABET for c in self.letters):
            raise ValueError(f"invalid cube word {self.letters!r}")

    @property
    def d(self) -> int:
        return len(self.letters)

    @property
    def dim(self) -> int:
        return self.letters.count(FREE)

    def __str__(self):
        return self.letters


WordLike = Union[CubeWord, str]


def as_word(w: WordLike) -> CubeWord:
    return w if isinstance(w, CubeWord) else CubeWord(w)


def _same_d(w1: CubeWord, w2: CubeWord) -> None:
    if w1.d != w2.d:
        raise ValueError(f"dimension mismatch: {w1} has d={w1.d}, {w2} has d={w2.d}")


def word_dimension(w: WordLike) -> int:
    return as_word(w).dim


def vertex_id(w: WordLike) -> int:
    w = as_word(w)
    if w.dim:
        raise ValueError(f"{w} is not a vertex word")
    return int(w.letters, 2)


def vertex_word(v: int, d: int) -> CubeWord:
    if not 0 <= v < 1 << d:
        raise ValueError(f"vertex {v} out of range for d={d}")
    return CubeWord(format(v, f"0{d}b"))


def face_vertices(w: WordLike) -> tuple[CubeWord, ...]:
    """Vertex words of the face, in binary order.

    The position of a vertex in this tuple, written in binary over the free
    letters (first free letter most significant), is its coordinate inside
    the face, so the tuple doubles as the face's cube coordinatization.
    """
    w = as_word(w)
    free = [i for i, c in enumerate(w.letters) if c == FREE]
    out = []
    letters = list(w.letters)
    for bits in itertools.product(ZERO + ONE, repeat=len(free)):
        for i, b in zip(free, bits):
            letters[i] = b
        out.append(CubeWord("".join(letters)))
    return tuple(out)


def face_vertex_ids(w: WordLike) -> tuple[int, ...]:
    return tuple(int(v.letters, 2) for v in face_vertices(w))


def face_meet(w1: WordLike, w2: WordLike):
    """Intersection of two faces: a word, or ``EMPTY`` when they are disjoint."""
    w1, w2 = as_word(w1), as_word(w2)
    _same_d(w1, w2)
    out = []
    for a, b in zip(w1.letters, w2.letters):
        if a == FREE:
            out.append(b)
        elif b == FREE or a == b:
            out.append(a)
        else:
            return EMPTY
    return CubeWord("".join(out))


def face_leq(w1: WordLike, w2: WordLike) -> bool:
    """True iff ``w1`` is a face of ``w2``."""
    w1, w2 = as_word(w1), as_word(w2)
    _same_d(w1, w2)
    return all(b == FREE or a == b for a, b in zip(w1.letters, w2.letters))


def enumerate_faces(d: int, k: int) -> list[CubeWord]:
    """All faces of Q_d with exactly ``k`` free letters, lexicographically sorted."""
    if d < 1:
        raise ValueError("d must be positive")
    if k > d or k < -1:
        raise ValueError(f"face dimension {k} out of range for d={d}")
    if k == -1:
        return []
    words = []
    for free in itertools.combinations(range(d), k):
        fixed = [i for i in range(d) if i not in free]
        for bits in itertools.product(ZERO + ONE, repeat=d - k):
            letters = [FREE] * d
            for i, b in zip(fixed, bits):
                letters[i] = b
            words.append("".join(letters))
    return [CubeWord(s) for s in sorted(words)]


def all_faces(d: int) -> list[CubeWord]:
    return [w for k in range(d + 1) for w in enumerate_faces(d, k)]


@lru_cache(maxsize=None)
def subface_positions(k: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Every nonempty face of a coordinatized k-cube as (dim, ordered positions)."""
    if k == 0:
        return ((0, (0,)),)
    return tuple((w.dim, face_vertex_ids(w)) for w in all_faces(k))


def cube_closure(ordered: Iterable[int]) -> list[tuple[tuple[int, ...], int]]:
    """All nonempty faces of a coordinatized cube as (ordered vertex ids, dim).

    ``ordered`` has length ``2**k``; position ``p`` holds the vertex whose
    cube coordinates are the binary digits of ``p``.
    """
    ordered = tuple(ordered)
    k = len(ordered).bit_length() - 1
    if len(ordered) != 1 << k:
        raise ValueError(f"cube cell needs 2^k vertices, got {len(ordered)}")
    return [(tuple(ordered[p] for p in pos), dim) for dim, pos in subface_positions(k)]


def cube_cell(w: WordLike) -> tuple[int, ...]:
    """Ordered vertex ids of a cube face, usable as a cell for ``build_complex``."""
    return face_vertex_ids(w)


def facet_words(d: int) -> list[CubeWord]:
    return enumerate_faces(d, d - 1)


def boundary_complex(d: int):
    from .complex import build_complex

    if d == 1:
        return build_complex([(0,), (1,)])
    return build_complex(cube_cell(w) for w in facet_words(d))


def cube_antistar_complex(d: int, F: WordLike):
    """Union of the facets opposite to each constraint of ``F``.

    Flipping every fixed letter of ``F`` in turn gives the facets that miss
    ``F``; their face complexes together are exactly the faces of Q_d
    disjoint from ``F``.
    """
    from .complex import build_complex

    F = as_word(F)
    if F.d != d:
        raise ValueError(f"{F} is not a face of Q_{d}")
    if F.dim == d:
        raise ValueError("the whole cube is not a proper face")
    cells = []
    for i, c in enumerate(F.letters):
        if c != FREE:
            letters = [FREE] * d
            letters[i] = ONE if c == ZERO else ZERO
            cells.append(cube_cell("".join(letters)))
    return build_complex(cells)


@dataclass(frozen=True)
class CubeCutsetSpec:
    d: int
    y: CubeWord
    Y: tuple[CubeWord, ...]

    def __post_init__(self):
        object.__setattr__(self, "y", as_word(self.y))
        object.__setattr__(self, "Y", tuple(sorted(set(as_word(w) for w in self.Y))))
        if self.y.d != self.d or self.y.dim:
            raise ValueError(f"apex {self.y} is not a vertex of Q_{self.d}")
        for w in self.Y:
            if w.d != self.d or w.dim:
                raise ValueError(f"{w} is not a vertex of Q_{self.d}")
            if sum(a != b for a, b in zip(w.letters, self.y.letters)) != 1:
                raise ValueError(f"{w} is not a neighbour of {self.y}")

    @property
    def positions(self) -> list[int]:
        """Coordinates in which the members of Y differ from y, ascending."""
        return sorted(
            next(i for i, (a, b) in enumerate(zip(w.letters, self.y.letters)) if a != b)
            for w in self.Y
        )


def _ridge(d: int, constraints: dict[int, str], perm: list[int], flip: str) -> tuple[int, ...]:
    # constraints are in canonical coordinates (y = 0, Y = e_1..e_k);
    # canonical coordinate j lives at actual position perm[j]
    letters = [FREE] * d
    for j, c in constraints.items():
        pos = perm[j]
        letters[pos] = c if flip[pos] == ZERO else (ONE if c == ZERO else ZERO)
    return cube_cell("".join(letters))


def cube_cutset_complex(spec: CubeCutsetSpec):
    """Return ``(C, C')`` for an apex ``y`` and neighbour set ``Y``.

    ``C`` is the subcomplex of Q_d induced by the vertices outside
    ``{y} | Y``.  ``C'`` is the union of the ridges ``{x_1=0, x_i=1}``
    (``i`` outside Y) and ``{x_i=1, x_j=1}`` in canonical coordinates.
    With ``Y`` empty the ridge ``{x_1=0, x_1=1}`` is void, so vertex
    ``e_1`` is covered by ``{x_1=1, x_2=0}`` instead.
    """
    from .complex import build_complex

    d = spec.d
    if d < 2:
        raise ValueError("cutset complex needs d >= 2")
    inside = spec.positions
    perm = inside + [i for i in range(d) if i not in inside]
    flip = spec.y.letters
    k = len(inside)

    cells = []
    for i in range(max(k, 1), d):
        cells.append(_ridge(d, {0: ZERO, i: ONE}, perm, flip))
    if k == 0:
        cells.append(_ridge(d, {0: ONE, 1: ZERO}, perm, flip))
    for i, j in itertools.combinations(range(d), 2):
        cells.append(_ridge(d, {i: ONE, j: ONE}, perm, flip))
    c_prime = build_complex(cells)

    removed = {vertex_id(spec.y)} | {vertex_id(w) for w in spec.Y}
    full = boundary_complex(d)
    C = full.induced(set(full.vertices) - removed)
    return C, c_prime
