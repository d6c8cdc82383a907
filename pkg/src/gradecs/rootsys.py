"""Analysis of root subsystems: irreducible components, simple systems,
marks, induced diagram automorphisms, and Weyl-subgroup membership by the
descent algorithm.

A `SubSystem` is a subset of the ambient datum's roots, viewed either on
the root side or (for the dual group) on the coroot side; all algorithms
are written against the view's pairing so the same code serves both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CycloNum
from .intlinalg import mat_inverse_fraction, mat_mul, mat_vec, rational_kernel_basis
from .rootdata import LatticeMap, RootDatum

_WEYL_ORDER_BY_LABEL = {
    "A": lambda k: _fact(k + 1),
    "B": lambda k: 2**k * _fact(k),
    "C": lambda k: 2**k * _fact(k),
    "D": lambda k: 2 ** (k - 1) * _fact(k),
    "G2": lambda k: 12,
    "F4": lambda k: 1152,
    "E6": lambda k: 51840,
    "E7": lambda k: 2903040,
    "E8": lambda k: 696729600,
}


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@dataclass
class SubSystem:
    """A root subsystem of the ambient datum, closed under negation.

    With dual=True the roles of roots and coroots are exchanged, giving the
    root system of the dual group on the same index set.
    """

    datum: RootDatum
    indices: tuple[int, ...]
    dual: bool = False
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.indices = tuple(sorted(self.indices))

    def fvec(self, i: int) -> tuple[int, ...]:
        return self.datum.coroots[i] if self.dual else self.datum.roots[i]

    def cvec(self, i: int) -> tuple[int, ...]:
        return self.datum.roots[i] if self.dual else self.datum.coroots[i]

    def pair(self, i: int, j: int) -> int:
        """<root_i, coroot_j> in this view."""
        p = self.datum.pairings
        return p[j][i] if self.dual else p[i][j]

    @property
    def index_set(self) -> frozenset:
        if "iset" not in self._cache:
            self._cache["iset"] = frozenset(self.indices)
        return self._cache["iset"]

    def is_empty(self) -> bool:
        return not self.indices

    # -- positivity and simple system --------------------------------------

    @property
    def positive(self) -> tuple[int, ...]:
        if "pos" not in self._cache:
            self._cache["pos"] = self._choose_positive()
        return self._cache["pos"]

    def _choose_positive(self) -> tuple[int, ...]:
        if not self.indices:
            return ()
        dim = len(self.fvec(self.indices[0]))
        maxabs = max(abs(x) for i in self.indices for x in self.fvec(i))
        base = 2 * maxabs * dim + 3
        h = [base**k for k in range(dim)]
        vals = {}
        for i in self.indices:
            v = sum(a * b for a, b in zip(self.fvec(i), h))
            assert v != 0, "functional not generic (impossible for base choice)"
            vals[i] = v
        return tuple(i for i in self.indices if vals[i] > 0)

    @property
    def simples(self) -> tuple[int, ...]:
        """Indices of the simple roots for the chosen positive system."""
        if "simp" not in self._cache:
            pos = self.positive
            fset = {self.fvec(i): i for i in pos}
            simple = []
            for i in pos:
                fi = self.fvec(i)
                is_sum = False
                for j in pos:
                    if j == i:
                        continue
                    fj = self.fvec(j)
                    rest = tuple(a - b for a, b in zip(fi, fj))
                    if rest in fset:
                        is_sum = True
                        break
                if not is_sum:
                    simple.append(i)
            self._cache["simp"] = tuple(simple)
        return self._cache["simp"]

    @property
    def rank(self) -> int:
        return len(self.simples)

    @property
    def expansion(self) -> dict[int, tuple[int, ...]]:
        """Coefficients of each positive root in the simple roots."""
        if "exp" not in self._cache:
            simples = self.simples
            k = len(simples)
            fset = {self.fvec(i): i for i in self.positive}
            coeffs: dict[int, list[int]] = {}
            for t, s in enumerate(simples):
                coeffs[s] = [1 if u == t else 0 for u in range(k)]
            todo = [i for i in self.positive if i not in coeffs]
            guard = 0
            while todo:
                guard += 1
                assert guard < 10000, "expansion did not converge"
                rest = []
                for i in todo:
                    fi = self.fvec(i)
                    done = False
                    for t, s in enumerate(simples):
                        fs = self.fvec(s)
                        down = tuple(a - b for a, b in zip(fi, fs))
                        j = fset.get(down)
                        if j is not None and j in coeffs:
                            c = list(coeffs[j])
                            c[t] += 1
                            coeffs[i] = c
                            done = True
                            break
                    if not done:
                        rest.append(i)
                todo = rest
            self._cache["exp"] = {i: tuple(c) for i, c in coeffs.items()}
        return self._cache["exp"]

    def height(self, i: int) -> int:
        return sum(self.expansion[i])

    @property
    def highest(self) -> int:
        return max(self.positive, key=self.height)

    @property
    def marks(self) -> tuple[int, ...]:
        """Expansion coefficients of the highest root."""
        return self.expansion[self.highest]

    @property
    def cartan(self) -> list[list[int]]:
        s = self.simples
        return [[self.pair(a, b) for b in s] for a in s]

    # -- components ---------------------------------------------------------

    def components(self) -> list["SubSystem"]:
        """Irreducible components via non-orthogonality connectivity."""
        if "comp" in self._cache:
            return self._cache["comp"]
        idx = list(self.indices)
        parent = {i: i for i in idx}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in idx:
            for b in idx:
                if a < b and self.pair(a, b) != 0:
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[ra] = rb
        groups: dict[int, list[int]] = {}
        for i in idx:
            groups.setdefault(find(i), []).append(i)
        comps = [SubSystem(self.datum, tuple(g), self.dual) for g in groups.values()]
        comps.sort(key=lambda s: s.indices)
        self._cache["comp"] = comps
        return comps

    # -- type identification ------------------------------------------------

    @property
    def cartan_label(self) -> str:
        """Cartan type of an irreducible subsystem ('A', ..., 'G2')."""
        if "label" in self._cache:
            return self._cache["label"]
        k = self.rank
        count = len(self.indices)
        if count == k * (k + 1):
            label = "A"
        elif k >= 3 and count == 2 * k * (k - 1):
            label = "D"
        elif count == 2 * k * k:
            # Distinguish B/C: short roots pair to +-2 against another root.
            short = 0
            for i in self.indices:
                if any(abs(self.pair(j, i)) == 2 and j != i and self.fvec(j) != tuple(-x for x in self.fvec(i))
                       for j in self.indices):
                    short += 1
            label = "B" if short == 2 * k else "C"
        elif (k, count) == (2, 12):
            label = "G2"
        elif (k, count) == (4, 48):
            label = "F4"
        elif (k, count) == (6, 72):
            label = "E6"
        elif (k, count) == (7, 126):
            label = "E7"
        elif (k, count) == (8, 240):
            label = "E8"
        else:
            raise AssertionError(f"unrecognized system rank={k} count={count}")
        self._cache["label"] = label
        return label

    @property
    def weyl_order(self) -> int:
        total = 1
        for c in self.components():
            total *= _WEYL_ORDER_BY_LABEL[c.cartan_label](c.rank)
        return total

    def coxeter_number(self) -> int:
        """h = |roots| / rank for an irreducible system."""
        assert len(self.components()) == 1
        return len(self.indices) // self.rank

    # -- reflections as index permutations -----------------------------------

    def reflection_perm(self, i: int) -> tuple[int, ...]:
        """t_{root i} as a permutation of all ambient root indices."""
        key = ("refl", i)
        if key not in self._cache:
            d = self.datum
            n_roots = len(d.roots)
            fmap = {d.coroots[t]: t for t in range(n_roots)}
            # On the coroot vectors: v -> v - <root_i-functional-ish...,
            # reflections act the same on both sides, so use the primal map.
            from .rootdata import reflection_map

            self._cache[key] = reflection_map(d, i).root_perm
        return self._cache[key]


def descent_membership(system: SubSystem, perm: tuple[int, ...]) -> bool:
    """Is the lattice automorphism with root permutation `perm` in W(system)?

    `perm` permutes all roots of the ambient datum. The test reduces by
    simple reflections of the subsystem; membership holds iff the residual
    is the identity permutation of the full root set.
    """
    n = len(perm)
    ident = tuple(range(n))
    if perm == ident:
        return not system.is_empty() or True
    iset = system.index_set
    if any(perm[i] not in iset for i in iset):
        return False
    pos = set(system.positive)
    simples = system.simples
    w = perm
    guard = len(system.positive) + 2
    for _ in range(guard * 2 + 4):
        if w == ident:
            return True
        step = None
        for s in simples:
            if w[s] not in pos:
                step = s
                break
        if step is None:
            return False
        t = system.reflection_perm(step)
        w = tuple(w[t[i]] for i in range(n))
    return w == ident


def diagram_automorphism(system: SubSystem, perm: tuple[int, ...]):
    """For `perm` stabilizing the system, the induced diagram automorphism.

    Returns the permutation of `system.simples` induced after correcting by
    an element of W(system), or None if `perm` does not stabilize the system.
    """
    n = len(perm)
    iset = system.index_set
    if any(perm[i] not in iset for i in iset):
        return None
    pos = set(system.positive)
    simples = system.simples
    w = perm
    guard = 2 * len(system.positive) + 4
    for _ in range(guard):
        step = None
        for s in simples:
            if w[s] not in pos:
                step = s
                break
        if step is None:
            break
        t = system.reflection_perm(step)
        w = tuple(w[t[i]] for i in range(n))
    image = {s: w[s] for s in simples}
    assert set(image.values()) == set(simples), "descent did not reach the chamber"
    return image


def twist_order(system: SubSystem, perm) -> int:
    """Order of the induced diagram automorphism (1 if inner)."""
    image = diagram_automorphism(system, perm)
    assert image is not None
    simples = system.simples
    e = 1
    cur = dict(image)
    while any(cur[s] != s for s in simples):
        cur = {s: image[cur[s]] for s in simples}
        e += 1
        assert e <= 6
    return e


def orbit_of_components(comps: list[SubSystem], perm) -> list[list[SubSystem]]:
    """Group components into orbits of the root permutation `perm`."""
    remaining = list(comps)
    orbits = []
    while remaining:
        first = remaining.pop(0)
        orbit = [first]
        cur = frozenset(perm[i] for i in first.index_set)
        while cur != first.index_set:
            nxt = next(c for c in remaining if c.index_set == cur)
            remaining.remove(nxt)
            orbit.append(nxt)
            cur = frozenset(perm[i] for i in cur)
        orbits.append(orbit)
    return orbits


class SpanSolver:
    """Coordinates in the span of a fixed list of rational vectors."""

    def __init__(self, vectors) -> None:
        self.basis: list[list[Fraction]] = []
        reduced: list[list[Fraction]] = []
        pivots: list[int] = []
        for v in vectors:
            r = [Fraction(x) for x in v]
            for red, p in zip(reduced, pivots):
                if r[p]:
                    f = r[p]
                    r = [a - f * b for a, b in zip(r, red)]
            p = next((i for i, x in enumerate(r) if x != 0), None)
            if p is not None:
                f = r[p]
                reduced.append([x / f for x in r])
                pivots.append(p)
                self.basis.append([Fraction(x) for x in v])
        self.rows = pivots
        k = len(self.basis)
        sel = [[self.basis[j][i] for j in range(k)] for i in pivots]
        self.sel_inv = mat_inverse_fraction(sel) if k else []

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, v):
        """Coordinates of v in the basis; raises if v is outside the span."""
        rhs = [Fraction(v[i]) for i in self.rows]
        c = mat_vec(self.sel_inv, rhs)
        recon = [Fraction(0)] * len(v)
        for ci, b in zip(c, self.basis):
            recon = [a + ci * bb for a, bb in zip(recon, b)]
        if recon != [Fraction(x) for x in v]:
            raise ValueError("vector outside span")
        return c


def matrix_order(M) -> int:
    dim = len(M)
    ident = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    cur = [[Fraction(x) for x in row] for row in M]
    order = 1
    while cur != ident:
        cur = mat_mul(cur, M)
        order += 1
        assert order < 2000, "runaway matrix order"
    return order


def eigen_multiplicities(M, m: int) -> list[int]:
    """Multiplicity of e^(2*pi*i*k/m) as an eigenvalue of M, for each k.

    M is a finite-order rational matrix; multiplicities come from the trace
    formula over the cyclic group generated by M.
    """
    dim = len(M)
    if dim == 0:
        return [0] * m
    ident = [[Fraction(1 if i == j else 0) for j in range(dim)] for i in range(dim)]
    traces = []
    cur = ident
    order = matrix_order(M)
    for _ in range(order):
        traces.append(sum(cur[i][i] for i in range(dim)))
        cur = mat_mul(cur, M)
    out = []
    for k in range(m):
        if (k * order) % m != 0:
            out.append(0)
            continue
        total = CycloNum.from_rational(0, 1)
        for j, tr in enumerate(traces):
            if tr:
                total = total + CycloNum.from_exponent(Fraction(-k * j, m) % 1) * Fraction(tr)
        val = total * Fraction(1, order)
        assert val.is_rational()
        q = val.rational_value()
        assert q.denominator == 1 and q >= 0
        out.append(int(q))
    return out


def theta_matrix_on_span(datum: RootDatum, indices, theta: LatticeMap):
    """Matrix of theta restricted to span(coroots[indices]), in a span basis."""
    vectors = [list(datum.coroots[i]) for i in indices]
    solver = SpanSolver(vectors)
    cols = [solver.coords(theta.apply(b)) for b in solver.basis]
    k = solver.dim
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def span_rank_of_eigenvalue(datum: RootDatum, indices, theta: LatticeMap, m: int) -> int:
    """dim of the e^(2*pi*i/m)-eigenspace of theta on span(coroots[indices])."""
    M = theta_matrix_on_span(datum, indices, theta)
    mults = eigen_multiplicities(M, m)
    return mults[1 % m]
