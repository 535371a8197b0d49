"""Stanley spaces, Stanley decompositions of J/I, and their verification.

Verification is done on a finite box.  With cap g_j = 1 + (largest exponent
of x_j among the generators of I, J and the space monomials), membership of a
monomial m in any of these ideals or spaces depends only on min(m, g), so
checking every m in [0, g] decides the decomposition for all monomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .errors import AmbientDimensionError, DomainError, SizeBudgetExceeded
from .monomials import (Monomial, QuotientModule, divides, is_squarefree_monomial,
                        render_monomial, support)

MAX_VERIFY_POINTS = 4_000_000


class StanleySpace(NamedTuple):
    """u·K[Z]; ``Z`` is a frozenset of 0-based variable indices."""

    u: Monomial
    Z: frozenset

    def contains(self, m: Monomial) -> bool:
        return divides(self.u, m) and all(
            a == b for j, (a, b) in enumerate(zip(self.u, m)) if j not in self.Z)

    def __str__(self):
        vars_ = ",".join(f"x{j + 1}" for j in sorted(self.Z))
        return f"{render_monomial(self.u)}K[{vars_}]"


def space(u, Z) -> StanleySpace:
    return StanleySpace(tuple(u), frozenset(Z))


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    counterexample: Optional[Monomial] = None
    kind: Optional[str] = None  # "uncovered" | "doubly_covered" | "outside_module"
    covering: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class StanleyDecomposition:
    module: QuotientModule
    spaces: tuple

    def __post_init__(self):
        spaces = tuple(s if isinstance(s, StanleySpace) else space(*s) for s in self.spaces)
        n = self.module.n
        for s in spaces:
            if len(s.u) != n or any(j < 0 or j >= n for j in s.Z):
                raise AmbientDimensionError(f"space {s} does not live in {n} variables")
        object.__setattr__(self, "spaces", spaces)

    def __len__(self):
        return len(self.spaces)

    def __iter__(self):
        return iter(self.spaces)

    @property
    def length(self) -> int:
        return len(self.spaces)

    @property
    def sdepth(self) -> int:
        return measure(self)[1]

    def verify(self, extra: int = 0) -> VerifyResult:
        return verify(self, extra)

    def __str__(self):
        return " ⊕ ".join(str(s) for s in self.spaces)


def truncation_box(D: StanleyDecomposition) -> tuple:
    caps = list(D.module.max_exponents())
    for s in D.spaces:
        caps = [max(c, a) for c, a in zip(caps, s.u)]
    return tuple(c + 1 for c in caps)


def _box_points(caps) -> np.ndarray:
    total = int(np.prod([c + 1 for c in caps], dtype=object))
    if total > MAX_VERIFY_POINTS:
        raise SizeBudgetExceeded(f"verification box has {total} points")
    grids = np.indices(tuple(c + 1 for c in caps), dtype=np.int32)
    return grids.reshape(len(caps), -1).T  # C order == lexicographic order


def _ideal_mask(pts: np.ndarray, gens) -> np.ndarray:
    mask = np.zeros(len(pts), dtype=bool)
    for u in gens:
        mask |= (pts >= np.asarray(u)).all(axis=1)
    return mask


def _space_mask(pts: np.ndarray, s: StanleySpace) -> np.ndarray:
    u = np.asarray(s.u)
    mask = (pts >= u).all(axis=1)
    pinned = [j for j in range(len(s.u)) if j not in s.Z]
    if pinned:
        mask &= (pts[:, pinned] == u[pinned]).all(axis=1)
    return mask


def verify(D: StanleyDecomposition, extra: int = 0) -> VerifyResult:
    """Check that the spaces of D partition the monomials of J \\ I.

    ``extra`` enlarges every cap (used to test that the verdict is stable).
    On failure the lexicographically smallest bad monomial is reported.
    """
    caps = tuple(g + extra for g in truncation_box(D))
    pts = _box_points(caps)
    in_module = _ideal_mask(pts, D.module.J.gens) & ~_ideal_mask(pts, D.module.I.gens)
    count = np.zeros(len(pts), dtype=np.int32)
    for s in D.spaces:
        count += _space_mask(pts, s)
    bad = np.where(in_module, count != 1, count > 0)
    if not bad.any():
        return VerifyResult(True)
    i = int(np.argmax(bad))
    m = tuple(int(a) for a in pts[i])
    if not in_module[i]:
        kind = "outside_module"
    elif count[i] == 0:
        kind = "uncovered"
    else:
        kind = "doubly_covered"
    covering = tuple(k for k, s in enumerate(D.spaces) if s.contains(m))
    return VerifyResult(False, m, kind, covering)


def measure(D: StanleyDecomposition) -> tuple:
    """(length, sdepth) of a decomposition."""
    if not D.spaces:
        raise DomainError("empty decomposition has no Stanley depth")
    return len(D.spaces), min(len(s.Z) for s in D.spaces)


def squarefree_normalize(D: StanleyDecomposition) -> StanleyDecomposition:
    """Keep the squarefree spaces, each with Z enlarged by supp(u)."""
    if not D.module.is_squarefree:
        raise DomainError("squarefree_normalize needs squarefree I and J")
    return StanleyDecomposition(D.module, tuple(
        StanleySpace(s.u, s.Z | support(s.u))
        for s in D.spaces if is_squarefree_monomial(s.u)))


def to_json(D: StanleyDecomposition) -> list:
    """Witness wire format: ``[{"u": [exps], "Z": [1-based indices]}]``."""
    return [{"u": list(s.u), "Z": sorted(j + 1 for j in s.Z)} for s in D.spaces]


def from_json(module: QuotientModule, data: list) -> StanleyDecomposition:
    return StanleyDecomposition(module, tuple(
        space(item["u"], (j - 1 for j in item["Z"])) for item in data))
