"""Exact Stanley length of squarefree quotients and certified bounds in general.

The exact solver works on a finite grid of exponent vectors.  A point set
(the monomials of J \\ I, truncated) is stored as one Python int used as a
bitmap over the grid, with mixed-radix indices; shifting the bitmap by the
stride of variable j moves every point one step along x_j.  An admissible
interval [a, b] pins each coordinate (b_j = a_j) or frees it up to the cap
(b_j = g_j) and corresponds to the Stanley space x^a K[free coordinates].
For a squarefree module the grid with every cap equal to 1 is the Boolean
lattice and admissible intervals are the ordinary set intervals [F, G].

Branch and bound: pick a point p with no lower neighbour left uncovered (it
must be the bottom of its interval), branch over every admissible interval
with bottom p inside the uncovered set, and prune with

    placed + max(#points with no uncovered upper neighbour,
                 #points with no uncovered lower neighbour) >= incumbent.

Points of either kind need pairwise distinct intervals, so both counts are
valid lower bounds for the residual problem.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from .constructions import (ci3_decomposition, ci_decomposition, formula_m2,
                            formula_n2, janet, prime_decomposition, principal_quotient,
                            _pure_power_degrees)
from .decomposition import StanleyDecomposition, StanleySpace
from .errors import DomainError, SizeBudgetExceeded, TrivialQuotient
from .monomials import (MonomialIdeal, QuotientModule, colon, common_divisor, degree,
                        mul, support)
from .transforms import polarize, radical_module

log = logging.getLogger(__name__)

FACE_BUDGET = 5000
MAX_SQUAREFREE_VARS = 20
POINT_BUDGET = 40000
MAX_GRID_BOX = 1 << 22
NODE_BUDGET = 2_000_000


def _popcount(x: int) -> int:
    return x.bit_count()


def _bits(x: int) -> list:
    s = bin(x)[:1:-1]
    return [i for i, c in enumerate(s) if c == "1"]


def _repeat(pattern: int, period: int, count: int) -> int:
    # `count` copies of `pattern`, spaced `period` bits apart (no overlaps)
    return pattern * (((1 << (period * count)) - 1) // ((1 << period) - 1))


class Grid:
    """The box prod_j {0..caps_j} with mixed-radix point indices."""

    def __init__(self, caps):
        self.caps = tuple(caps)
        self.n = len(self.caps)
        strides = [1]
        for c in self.caps:
            strides.append(strides[-1] * (c + 1))
        self.size = strides.pop()
        self.strides = tuple(strides)
        if self.size > MAX_GRID_BOX:
            raise SizeBudgetExceeded(f"grid box has {self.size} points")
        self.full = (1 << self.size) - 1
        self.below_top = []
        self.above_bottom = []
        self._top_layer = []
        for j in range(self.n):
            top = self.layer(j, self.caps[j])
            self._top_layer.append(top)
            self.below_top.append(self.full & ~top)
            self.above_bottom.append(self.full & ~self.layer(j, 0))
        self._low = {}

    def layer(self, j: int, v: int) -> int:
        """Bitmap of the points with c_j == v."""
        stride = self.strides[j]
        period = stride * (self.caps[j] + 1)
        block = ((1 << stride) - 1) << (v * stride)
        return _repeat(block, period, self.size // period)

    def index(self, c) -> int:
        return sum(a * s for a, s in zip(c, self.strides))

    def point(self, idx: int) -> tuple:
        out = []
        for c in self.caps:
            idx, r = divmod(idx, c + 1)
            out.append(r)
        return tuple(out)

    def extend(self, bitmap: int, j: int, steps: int) -> int:
        out = bitmap
        for t in range(1, steps + 1):
            out |= bitmap << (t * self.strides[j])
        return out

    def upset(self, u) -> int:
        """Bitmap of the points >= u (u clipped to the caps)."""
        u = [min(a, c) for a, c in zip(u, self.caps)]
        bm = 1 << self.index(u)
        for j in range(self.n):
            bm = self.extend(bm, j, self.caps[j] - u[j])
        return bm

    def ideal(self, gens) -> int:
        bm = 0
        for u in gens:
            bm |= self.upset(u)
        return bm

    def low(self, s: int) -> int:
        """Bitmap of points with fewer than s coordinates at their cap."""
        if s not in self._low:
            counts = [self.full]
            for top in self._top_layer:
                nxt = [0] * (len(counts) + 1)
                for k, bm in enumerate(counts):
                    nxt[k] |= bm & ~top
                    nxt[k + 1] |= bm & top
                counts = nxt
            bm = 0
            for k in range(min(s, len(counts))):
                bm |= counts[k]
            self._low[s] = bm
        return self._low[s]


class IntervalSearch:
    """Minimum partition of a grid point set into admissible intervals.

    ``min_free`` requires every interval to free at least that many
    coordinates (a floor on the Stanley depth of the decomposition).
    """

    def __init__(self, grid: Grid, points: int, min_free: int = 0,
                 max_nodes: int = NODE_BUDGET):
        self.grid = grid
        self.points = points
        self.min_free = min_free
        self.max_nodes = max_nodes
        self.nodes = 0
        self._low = grid.low(min_free) if min_free else 0

    def _extremes(self, U: int):
        g = self.grid
        up = down = 0
        for j, s in enumerate(g.strides):
            up |= (U >> s) & g.below_top[j]
            down |= (U << s) & g.above_bottom[j]
        return U & ~up, U & ~down

    def intervals_from(self, p: int, U: int) -> list:
        """All admissible intervals with bottom p contained in U, largest first."""
        g = self.grid
        a = g.point(p)
        forced = [j for j in range(g.n) if a[j] == g.caps[j]]
        cand = [j for j in range(g.n)
                if a[j] < g.caps[j] and (U >> (p + g.strides[j])) & 1]
        need = self.min_free - len(forced)
        out = []

        def dfs(i, bm, chosen):
            if len(chosen) + len(cand) - i < need:
                return
            if i == len(cand):
                out.append((bm, frozenset(forced) | frozenset(chosen)))
                return
            j = cand[i]
            ext = g.extend(bm, j, g.caps[j] - a[j])
            if not ext & ~U:
                dfs(i + 1, ext, chosen + (j,))
            dfs(i + 1, bm, chosen)

        dfs(0, 1 << p, ())
        out.sort(key=lambda t: -_popcount(t[0]))
        return out

    def _pick(self, M: int) -> int:
        return (M & -M).bit_length() - 1

    def greedy(self) -> Optional[list]:
        U, chosen = self.points, []
        while U:
            _, M = self._extremes(U)
            p = self._pick(M)
            ivs = self.intervals_from(p, U)
            if not ivs:
                return None
            chosen.append((p, ivs[0][1]))
            U &= ~ivs[0][0]
        return chosen

    def solve(self, first: bool = False) -> Optional[list]:
        """Optimal list of (bottom index, free coordinates), or None if infeasible.

        With ``first`` the search stops at the first complete partition.
        """
        best = None
        bound = float("inf")
        if not first and not self.min_free:
            best = self.greedy()
            bound = len(best)
        memo = {}
        stack = []
        done = False

        def rec(U):
            nonlocal best, bound, done
            self.nodes += 1
            if self.nodes > self.max_nodes:
                raise SizeBudgetExceeded(f"search exceeded {self.max_nodes} nodes")
            if not U:
                best, bound = list(stack), len(stack)
                done = first
                return
            L, M = self._extremes(U)
            if self._low and L & self._low:
                return
            depth = len(stack)
            if depth + max(_popcount(L), _popcount(M)) >= bound:
                return
            seen = memo.get(U)
            if seen is not None and seen <= depth:
                return
            memo[U] = depth
            p = self._pick(M)
            for bm, free in self.intervals_from(p, U):
                stack.append((p, free))
                rec(U & ~bm)
                stack.pop()
                if done:
                    return

        rec(self.points)
        return best


# -- module reduction -------------------------------------------------------

@dataclass
class _Reduced:
    """J/I = v · (J'/I') with J', I' supported on the variables in ``keep``."""

    module: QuotientModule
    shift: tuple
    keep: tuple
    J: list
    I: list

    @property
    def n_free(self) -> int:
        return self.module.n - len(self.keep)

    def lift(self, grid: Grid, intervals) -> StanleyDecomposition:
        n = self.module.n
        dropped = frozenset(range(n)) - set(self.keep)
        spaces = []
        for p, free in intervals:
            a = grid.point(p)
            u = [0] * n
            for i, k in enumerate(self.keep):
                u[k] = a[i]
            Z = frozenset(self.keep[i] for i in free) | dropped
            spaces.append(StanleySpace(mul(tuple(u), self.shift), Z))
        return StanleyDecomposition(self.module, tuple(spaces))


def _reduce(Q: QuotientModule) -> _Reduced:
    v = common_divisor(Q.J)
    J, I = colon(Q.J, v), colon(Q.I, v)
    used = set()
    for u in J.gens + I.gens:
        used |= support(u)
    keep = tuple(sorted(used))
    return _Reduced(Q, v, keep, [tuple(u[k] for k in keep) for u in J.gens],
                    [tuple(u[k] for k in keep) for u in I.gens])


def _squarefree_problem(Q: QuotientModule, face_budget: int):
    if not Q.is_squarefree:
        raise DomainError("the module is not squarefree")
    red = _reduce(Q)
    if len(red.keep) > MAX_SQUAREFREE_VARS:
        raise SizeBudgetExceeded(f"{len(red.keep)} variables after reduction")
    grid = Grid((1,) * len(red.keep))
    points = grid.ideal(red.J) & ~grid.ideal(red.I)
    if _popcount(points) > face_budget:
        raise SizeBudgetExceeded(f"relative complex has {_popcount(points)} faces")
    return red, grid, points


def _grid_problem(Q: QuotientModule, point_budget: int):
    red = _reduce(Q)
    caps = [1 + max((u[i] for u in red.J + red.I), default=0)
            for i in range(len(red.keep))]
    grid = Grid(caps)
    points = grid.ideal(red.J) & ~grid.ideal(red.I)
    if _popcount(points) > point_budget:
        raise SizeBudgetExceeded(f"characteristic grid has {_popcount(points)} points")
    return red, grid, points


# -- relative complexes -----------------------------------------------------

@dataclass(frozen=True)
class RelativeComplex:
    """Δ(J/I) = {F : x_F ∈ J \\ I}; faces are bitmasks over 0-based variables.

    Such a family is convex (F ⊆ H ⊆ G with F, G faces makes H a face) but
    need not be closed under subsets.
    """

    n: int
    faces: frozenset

    def __len__(self):
        return len(self.faces)

    def as_sets(self) -> list:
        return sorted((frozenset(j for j in range(self.n) if F >> j & 1)
                       for F in self.faces), key=lambda s: (len(s), sorted(s)))


def relative_complex(Q: QuotientModule) -> RelativeComplex:
    if not Q.is_squarefree:
        raise DomainError("relative complexes need squarefree ideals")
    if Q.n > MAX_SQUAREFREE_VARS:
        raise SizeBudgetExceeded(f"{Q.n} variables")
    grid = Grid((1,) * Q.n)
    points = grid.ideal(Q.J.gens) & ~grid.ideal(Q.I.gens)
    return RelativeComplex(Q.n, frozenset(_bits(points)))


def facets(delta: RelativeComplex) -> frozenset:
    """Inclusion-maximal faces (by convexity: no one-element extension is a face)."""
    if not delta.faces:
        raise DomainError("empty complex")
    return frozenset(F for F in delta.faces
                     if not any((F | 1 << j) in delta.faces
                                for j in range(delta.n) if not F >> j & 1))


# -- reports ----------------------------------------------------------------

@dataclass(frozen=True)
class Bound:
    value: int
    method: str


@dataclass
class SlengthReport:
    """Certified bounds lower <= slength <= upper, with a witness of length upper."""

    module: QuotientModule
    lower: Optional[Bound]
    upper: Optional[Bound]
    witness: Optional[StanleyDecomposition] = None
    feasible: bool = True
    sources: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return (self.lower is not None and self.upper is not None
                and self.lower.value == self.upper.value)

    @property
    def value(self) -> Optional[int]:
        return self.upper.value if self.exact else None


def _exact_report(Q, value, witness, method):
    b = Bound(value, method)
    return SlengthReport(Q, b, b, witness, sources=[("lower", b), ("upper", b)])


def exact_slength_squarefree(Q: QuotientModule, face_budget: int = FACE_BUDGET,
                             max_nodes: int = NODE_BUDGET) -> SlengthReport:
    """slength(J/I) = minimum size of an interval partition of Δ(J/I)."""
    red, grid, points = _squarefree_problem(Q, face_budget)
    sol = IntervalSearch(grid, points, max_nodes=max_nodes).solve()
    return _exact_report(Q, len(sol), red.lift(grid, sol), "squarefree-exact")


def constrained_min_length(Q: QuotientModule, s: int, face_budget: int = FACE_BUDGET,
                           max_nodes: int = NODE_BUDGET) -> SlengthReport:
    """Shortest squarefree decomposition with every |Z_i| >= s.

    Returns a report with ``feasible=False`` when s exceeds sdepth(J/I).
    """
    red, grid, points = _squarefree_problem(Q, face_budget)
    floor = max(s - red.n_free, 0)
    sol = IntervalSearch(grid, points, min_free=floor, max_nodes=max_nodes).solve()
    if sol is None:
        return SlengthReport(Q, None, None, feasible=False)
    return _exact_report(Q, len(sol), red.lift(grid, sol), f"squarefree-exact-sdepth>={s}")


def sdepth_squarefree(Q: QuotientModule, face_budget: int = FACE_BUDGET,
                      max_nodes: int = NODE_BUDGET):
    """Stanley depth of a squarefree J/I; returns ``(sdepth, witness)``."""
    red, grid, points = _squarefree_problem(Q, face_budget)
    search = IntervalSearch(grid, points)
    L, _ = search._extremes(points)
    # every facet tops some interval, so sdepth <= the smallest facet size
    top = min(sum(grid.point(p)) for p in _bits(L))
    for s in range(top, -1, -1):
        sol = IntervalSearch(grid, points, min_free=s, max_nodes=max_nodes).solve(first=True)
        if sol is not None:
            return s + red.n_free, red.lift(grid, sol)
    raise AssertionError("the singleton partition always has depth >= 0")


def grid_partition(Q: QuotientModule, point_budget: int = POINT_BUDGET,
                   exact: bool = True, max_nodes: int = NODE_BUDGET) -> StanleyDecomposition:
    """A decomposition read off a partition of the characteristic grid.

    ``exact=True`` returns the minimum over grid partitions (an upper bound on
    slength in general, and slength itself for squarefree modules); otherwise
    the greedy partition.
    """
    red, grid, points = _grid_problem(Q, point_budget)
    search = IntervalSearch(grid, points, max_nodes=max_nodes)
    sol = search.solve() if exact else search.greedy()
    return red.lift(grid, sol)


def best_witness(Q: QuotientModule) -> StanleyDecomposition:
    """The shortest decomposition the solver can certify within budget."""
    if Q.is_squarefree:
        try:
            return exact_slength_squarefree(Q).witness
        except SizeBudgetExceeded:
            pass
    try:
        return grid_partition(Q)
    except SizeBudgetExceeded:
        return grid_partition(Q, point_budget=MAX_GRID_BOX, exact=False)


def _restrict_support(I: MonomialIdeal):
    keep = sorted(set().union(*(support(u) for u in I.gens)))
    return keep, MonomialIdeal(len(keep), tuple(tuple(u[k] for k in keep) for u in I.gens))


def _embed(D: StanleyDecomposition, keep, Q: QuotientModule) -> StanleyDecomposition:
    n = Q.n
    others = frozenset(range(n)) - set(keep)
    spaces = []
    for s in D.spaces:
        u = [0] * n
        for i, k in enumerate(keep):
            u[k] = s.u[i]
        spaces.append(StanleySpace(tuple(u), frozenset(keep[i] for i in s.Z) | others))
    return StanleyDecomposition(Q, tuple(spaces))


def slength_report(Q: QuotientModule, face_budget: int = FACE_BUDGET,
                   point_budget: int = POINT_BUDGET,
                   max_nodes: int = NODE_BUDGET) -> SlengthReport:
    """Collect every applicable bound on slength(J/I).

    Lower bounds: the generator count (ideals), the exact value of the
    polarization and of √J/√I, and the exact formulas.  Upper bounds: the
    constructions, linear quotients, and the characteristic-grid optimum.
    """
    from .linquot import decomposition_from_order, find_linear_order

    lowers, uppers, skipped = [], [], []

    def lower(value, method):
        lowers.append(Bound(value, method))

    def upper(D, method):
        uppers.append((Bound(len(D), method), D))

    def exact(value, D, method):
        lower(value, method)
        upper(D, method)

    def attempt(label, fn):
        try:
            fn()
        except SizeBudgetExceeded as e:
            skipped.append(f"{label}: {e}")
            log.info("skipped %s: %s", label, e)

    lower(1, "nonzero-module")
    if Q.is_ideal:
        I = Q.J
        lower(len(I.gens), "generator-count")
        keep, small = _restrict_support(I)
        if len(keep) == 2:
            v, D = formula_n2(small)
            exact(v, _embed(D, keep, Q), "two-variable-formula")
        if len(I.gens) == 2:
            v, D = formula_m2(I)
            exact(v, D, "two-generator-formula")
        order = find_linear_order(I)
        if order is not None:
            exact(len(I.gens), decomposition_from_order(I, order), "linear-quotients")
        if all(degree(u) == 1 for u in I.gens):
            upper(prime_decomposition(I), "prime")
        if I.is_complete_intersection and not I.is_unit:
            upper(ci_decomposition(I), "complete-intersection")
            if _pure_power_degrees(I) is not None:
                upper(ci3_decomposition(I), "three-generated-ci")
        upper(janet(I), "janet")
        upper(janet(I, widest_last=True), "janet-widest-last")
    if Q.is_cyclic and Q.I.is_principal:
        D = principal_quotient(Q.I.gens[0])
        exact(len(D), D, "principal-quotient")

    if Q.is_squarefree:
        def run_exact():
            r = exact_slength_squarefree(Q, face_budget, max_nodes)
            exact(r.lower.value, r.witness, "squarefree-exact")
        attempt("squarefree-exact", run_exact)
    else:
        def run_polar():
            Qp, _ = polarize(Q)
            lower(exact_slength_squarefree(Qp, face_budget, max_nodes).lower.value,
                  "polarization")

        def run_radical():
            try:
                Qr = radical_module(Q)
            except TrivialQuotient:
                return
            lower(exact_slength_squarefree(Qr, face_budget, max_nodes).lower.value,
                  "radical")

        def run_grid():
            upper(grid_partition(Q, point_budget, max_nodes=max_nodes), "grid-partition")

        attempt("polarization", run_polar)
        attempt("radical", run_radical)
        attempt("grid-partition", run_grid)
        if not uppers:
            attempt("grid-greedy", lambda: upper(
                grid_partition(Q, MAX_GRID_BOX, exact=False), "grid-greedy"))

    lo = max(lowers, key=lambda b: b.value)
    up, witness = (min(uppers, key=lambda t: t[0].value) if uppers else (None, None))
    sources = [("lower", b) for b in lowers] + [("upper", b) for b, _ in uppers]
    return SlengthReport(Q, lo, up, witness, sources=sources, skipped=skipped)


# -- the three-generator experiment -----------------------------------------

def conjecture_experiment(d1: int, d2: int, d3: int, n: Optional[int] = None,
                          face_budget: int = FACE_BUDGET) -> dict:
    """Exact slength of (x_1..x_{d1}, next d2 variables, next d3 variables)
    next to the conjectured min(d1 + d1·d2, n) + 1 (degrees sorted).

    Records the outcome only; nothing is asserted about the conjecture.
    """
    d = sorted((d1, d2, d3))
    if d[0] < 1:
        raise ValueError("degrees must be positive")
    n = sum(d) if n is None else n
    if n < sum(d):
        raise ValueError("n must be at least d1 + d2 + d3")
    if n > MAX_SQUAREFREE_VARS:
        raise SizeBudgetExceeded(f"n = {n} exceeds {MAX_SQUAREFREE_VARS} variables")
    gens, start = [], 0
    for k in d:
        gens.append(tuple(1 if start <= j < start + k else 0 for j in range(n)))
        start += k
    Q = QuotientModule.of_ideal(MonomialIdeal(n, tuple(gens)))
    report = exact_slength_squarefree(Q, face_budget)
    from .constructions import ci_bound
    conjectured = min(d[0] + d[0] * d[1], n) + 1
    return {
        "degrees": d,
        "n": n,
        "exact": report.lower.value,
        "conjectured": conjectured,
        "agrees": report.lower.value == conjectured,
        "ci_bound": ci_bound(d),
        "three_generator_bound": n + 1,
        "witness": report.witness,
    }
