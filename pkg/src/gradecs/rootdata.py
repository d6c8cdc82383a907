"""Root systems of types A-G with explicit epsilon-coordinate conventions,
integral lattice automorphisms, tori as rational points mod the cocharacter
lattice, and Smith-normal-form fixed-point groups.

Coordinate conventions for the classical types (matching the usual
epsilon-basis simple roots, alpha_i = e_i - e_{i+1} etc.):

  * the ambient space is Q^N (N = n+1 for type A_n, N = n otherwise);
  * roots are stored as *functionals* (integer ambient vectors paired with
    cocharacters by the dot product) together with their coroots as
    integer ambient vectors;
  * the cocharacter lattice of the simply connected group is the coroot
    lattice, with the simple coroots as basis.

Torus elements are represented in basis coordinates: T = Q^n / Z^n via
x = sum x_i * (simple coroot_i). All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import InfiniteFixedGroup, InvalidType, OracleBoundExceeded
from .intlinalg import (
    identity_matrix,
    mat_inverse_fraction,
    mat_mul,
    mat_vec,
    smith_normal_form,
)

CLASSICAL = ("A", "B", "C", "D")
EXCEPTIONAL = ("E6", "E7", "E8", "F4", "G2")

_EXCEPTIONAL_CARTAN = {
    # Rows i: <alpha_i, alpha_j-check>; Bourbaki numbering, branch node alpha_2
    # attached to alpha_4 in the E series.
    "G2": [[2, -1], [-3, 2]],
    "F4": [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]],
    "E6": None,
    "E7": None,
    "E8": None,
}
# Root-length halves d_i = (alpha_i, alpha_i)/2 for the non simply-laced types.
_EXCEPTIONAL_DI = {
    "G2": [1, 3],
    "F4": [2, 2, 1, 1],
}


def _e_cartan(n: int) -> list[list[int]]:
    """Cartan matrix of E_n (n = 6, 7, 8), Bourbaki numbering."""
    # Chain alpha_1 - alpha_3 - alpha_4 - alpha_5 - ... - alpha_n,
    # with alpha_2 attached to alpha_4.
    edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)]
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        A[i - 1][j - 1] = -1
        A[j - 1][i - 1] = -1
    return A


for _n in (6, 7, 8):
    _EXCEPTIONAL_CARTAN[f"E{_n}"] = _e_cartan(_n)


@dataclass(frozen=True)
class RootDatum:
    """A root datum with the simply connected cocharacter lattice."""

    label: str
    rank: int
    ambient_dim: int
    roots: tuple[tuple[int, ...], ...]        # functionals
    coroots: tuple[tuple[int, ...], ...]      # ambient vectors
    simple_idx: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]        # X_* basis = simple coroots
    cartan: tuple[tuple[int, ...], ...]
    marks: tuple[int, ...]
    highest_root_idx: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    # -- derived tables ---------------------------------------------------

    @property
    def basis_left_inverse(self) -> list[list[Fraction]]:
        """L with L @ B = identity on basis coordinates (B columns = basis)."""
        if "L" not in self._cache:
            B_cols = [[Fraction(b[i]) for b in self.basis] for i in range(self.ambient_dim)]
            BtB = mat_mul(mat_transpose_f(B_cols), B_cols)
            L = mat_mul(mat_inverse_fraction(BtB), mat_transpose_f(B_cols))
            self._cache["L"] = L
        return self._cache["L"]

    @property
    def root_index(self) -> dict[tuple[int, ...], int]:
        if "ri" not in self._cache:
            self._cache["ri"] = {cr: i for i, cr in enumerate(self.coroots)}
        return self._cache["ri"]

    @property
    def neg_index(self) -> tuple[int, ...]:
        if "neg" not in self._cache:
            ri = self.root_index
            self._cache["neg"] = tuple(
                ri[tuple(-x for x in cr)] for cr in self.coroots
            )
        return self._cache["neg"]

    @property
    def pairings(self) -> list[list[int]]:
        """pairings[i][j] = <alpha_i, alpha_j-check>."""
        if "pair" not in self._cache:
            self._cache["pair"] = [
                [sum(f * c for f, c in zip(self.roots[i], self.coroots[j]))
                 for j in range(len(self.roots))]
                for i in range(len(self.roots))
            ]
        return self._cache["pair"]

    @property
    def root_pair_basis(self) -> list[tuple[int, ...]]:
        """Per root, the tuple of pairings with the X_* basis vectors."""
        if "rpb" not in self._cache:
            self._cache["rpb"] = [
                tuple(sum(f * b for f, b in zip(self.roots[i], bv)) for bv in self.basis)
                for i in range(len(self.roots))
            ]
        return self._cache["rpb"]

    @property
    def coroot_basis_coords(self) -> list[tuple[int, ...]]:
        """Per root, the basis coordinates of its coroot (integers)."""
        if "cbc" not in self._cache:
            L = self.basis_left_inverse
            out = []
            for cr in self.coroots:
                c = mat_vec(L, [Fraction(x) for x in cr])
                assert all(x.denominator == 1 for x in c)
                out.append(tuple(int(x) for x in c))
            self._cache["cbc"] = out
        return self._cache["cbc"]

    @property
    def fundamental_coweights(self) -> list[tuple[Fraction, ...]]:
        """Ambient rational vectors omega-check_i with <omega-check_i, alpha_j> = delta_ij."""
        if "fcw" not in self._cache:
            Ainv = mat_inverse_fraction([list(r) for r in self.cartan])
            out = []
            for i in range(self.rank):
                v = [Fraction(0)] * self.ambient_dim
                for k in range(self.rank):
                    c = Ainv[k][i]
                    if c:
                        cr = self.coroots[self.simple_idx[k]]
                        v = [a + c * b for a, b in zip(v, cr)]
                out.append(tuple(v))
            self._cache["fcw"] = out
        return self._cache["fcw"]

    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra."""
        return self.rank + len(self.roots)


def mat_transpose_f(A):
    return [list(col) for col in zip(*A)]


def _classical_roots(label: str, n: int):
    """(roots-as-functionals, coroots, simple functional list, simple coroot list)."""
    def e(i, N, c=1):
        v = [0] * N
        v[i] = c
        return v

    roots: list[tuple[int, ...]] = []
    coroots: list[tuple[int, ...]] = []

    def add(f, c):
        roots.append(tuple(f))
        coroots.append(tuple(c))

    if label == "A":
        N = n + 1
        for i in range(N):
            for j in range(N):
                if i != j:
                    v = [0] * N
                    v[i], v[j] = 1, -1
                    add(v, v)
        simple_f = [[0] * N for _ in range(n)]
        for i in range(n):
            simple_f[i][i], simple_f[i][i + 1] = 1, -1
        simple_c = [list(v) for v in simple_f]
        return roots, coroots, simple_f, simple_c, N
    N = n
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * N
                    v[i], v[j] = si, sj
                    add(v, v)
    if label == "B":
        for i in range(n):
            for s in (1, -1):
                add(e(i, N, s), e(i, N, 2 * s))
    elif label == "C":
        for i in range(n):
            for s in (1, -1):
                add(e(i, N, 2 * s), e(i, N, s))
    elif label != "D":
        raise InvalidType(label)
    simple_f = [[0] * N for _ in range(n)]
    for i in range(n - 1):
        simple_f[i][i], simple_f[i][i + 1] = 1, -1
    simple_c = [list(v) for v in simple_f]
    if label == "B":
        simple_f[n - 1] = e(n - 1, N)
        simple_c[n - 1] = e(n - 1, N, 2)
    elif label == "C":
        simple_f[n - 1] = e(n - 1, N, 2)
        simple_c[n - 1] = e(n - 1, N)
    else:
        v = [0] * N
        v[n - 2], v[n - 1] = 1, 1
        simple_f[n - 1] = v
        simple_c[n - 1] = list(v)
    return roots, coroots, simple_f, simple_c, N


def _exceptional_roots(label: str):
    A = _EXCEPTIONAL_CARTAN[label]
    n = len(A)
    di = _EXCEPTIONAL_DI.get(label, [1] * n)

    def norm_half(c):
        # (beta, beta)/2 for beta = sum c_i alpha_i with (alpha_i, alpha_j) = di_j * a_ij.
        tot = 0
        for i in range(n):
            for j in range(n):
                tot += c[i] * c[j] * di[j] * A[i][j]
        assert tot % 2 == 0
        return tot // 2

    # Generate all roots as coefficient vectors via simple reflections.
    start = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    seen = set(start)
    frontier = list(start)
    while frontier:
        nxt = []
        for c in frontier:
            for j in range(n):
                pairing = sum(c[i] * A[i][j] for i in range(n))
                img = list(c)
                img[j] -= pairing
                t = tuple(img)
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    all_coeffs = sorted(seen)
    roots = []
    coroots = []
    for c in all_coeffs:
        # functional: f_j = <sum c_i alpha_i, alpha_j-check> ... stored as
        # the vector pairing against basis coords; ambient = coroot coords,
        # so the functional of beta is (sum_i c_i a_ij)_j.
        f = tuple(sum(c[i] * A[i][j] for i in range(n)) for j in range(n))
        db = norm_half(list(c))
        cr = tuple(c[i] * di[i] // db if c[i] * di[i] % db == 0 else None for i in range(n))
        if any(x is None for x in cr):
            raise AssertionError("non-integral coroot (bug in length data)")
        roots.append(f)
        coroots.append(cr)
    simple_f = []
    simple_c = []
    for i in range(n):
        c = tuple(1 if k == i else 0 for k in range(n))
        idx = all_coeffs.index(c)
        simple_f.append(list(roots[idx]))
        simple_c.append(list(coroots[idx]))
    return roots, coroots, simple_f, simple_c, n, all_coeffs


_EXPECTED_ROOT_COUNT = {
    "G2": 12, "F4": 48, "E6": 72, "E7": 126, "E8": 240,
}


@lru_cache(maxsize=None)
def build_root_datum(label: str, rank: int) -> RootDatum:
    """Construct the root datum for the given type and rank.

    >>> build_root_datum("A", 3).marks
    (1, 1, 1)
    """
    label = label.upper() if len(label) == 1 else label
    if label in CLASSICAL:
        if label == "A" and rank < 1:
            raise InvalidType("A_n needs n >= 1")
        if label in ("B", "C") and rank < 2:
            raise InvalidType(f"{label}_n needs n >= 2")
        if label == "D" and rank < 3:
            raise InvalidType("D_n needs n >= 3")
        roots, coroots, simple_f, simple_c, N = _classical_roots(label, rank)
        coeffs = None
    elif label in EXCEPTIONAL:
        expected_rank = int(label[1]) if label[0] == "E" else (4 if label == "F4" else 2)
        if rank != expected_rank:
            raise InvalidType(f"{label} has rank {expected_rank}")
        roots, coroots, simple_f, simple_c, N, coeffs = _exceptional_roots(label)
        assert len(roots) == _EXPECTED_ROOT_COUNT[label]
    else:
        raise InvalidType(label)

    root_index = {tuple(c): i for i, c in enumerate(coroots)}
    simple_idx = tuple(root_index[tuple(c)] for c in simple_c)
    cartan = tuple(
        tuple(sum(f * c for f, c in zip(simple_f[i], simple_c[j])) for j in range(rank))
        for i in range(rank)
    )

    # Highest root: maximal height in the simple-root expansion.
    if coeffs is None:
        expansions = _expand_all_in_simples(roots, simple_f)
    else:
        expansions = coeffs
    heights = [sum(c) for c in expansions]
    hi = max(range(len(roots)), key=lambda i: heights[i])
    marks = tuple(expansions[hi])

    return RootDatum(
        label=label,
        rank=rank,
        ambient_dim=N,
        roots=tuple(tuple(r) for r in roots),
        coroots=tuple(tuple(c) for c in coroots),
        simple_idx=simple_idx,
        basis=tuple(tuple(c) for c in simple_c),
        cartan=cartan,
        marks=marks,
        highest_root_idx=hi,
    )


def _expand_all_in_simples(roots, simple_f):
    """Expansion coefficients of each root functional in the simple ones."""
    n = len(simple_f)
    dim = len(simple_f[0])
    # Select n independent coordinates of the simple functionals.
    M = [[Fraction(simple_f[j][i]) for j in range(n)] for i in range(dim)]
    # Row-reduce to find pivot rows.
    pivots = []
    work = [row[:] for row in M]
    col = 0
    for r in range(dim):
        if col >= n:
            break
        if work[r][col] == 0:
            swap = next((i for i in range(r + 1, dim) if work[i][col] != 0), None)
            if swap is None:
                continue
            work[r], work[swap] = work[swap], work[r]
        pv = work[r][col]
        work[r] = [x / pv for x in work[r]]
        for i in range(dim):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(r)
        col += 1
    sel = [[M[p][j] for j in range(n)] for p in pivots]
    sel_inv = mat_inverse_fraction(sel)
    out = []
    for root in roots:
        rhs = [Fraction(root[p]) for p in pivots]
        c = mat_vec(sel_inv, rhs)
        assert all(x.denominator == 1 for x in c)
        out.append(tuple(int(x) for x in c))
    return out


def center_structure(datum: RootDatum) -> list[int]:
    """Invariant factors of Z(G) = P-check/Q-check via the Cartan matrix."""
    from .intlinalg import invariant_factors

    return [d for d in invariant_factors([list(r) for r in datum.cartan]) if d != 1]


# ---------------------------------------------------------------------------
# Signed permutations and lattice maps
# ---------------------------------------------------------------------------


class SignedPerm:
    """A signed permutation of the ambient coordinates: e_i -> sign * e_j.

    Stored as a tuple p with p[i] = +-(j+1). These are exactly the lattice
    maps arising from classical Weyl elements and the stable automorphisms
    in the epsilon coordinates.
    """

    __slots__ = ("p",)

    def __init__(self, p) -> None:
        self.p = tuple(p)

    @staticmethod
    def identity(n: int) -> "SignedPerm":
        return SignedPerm(range(1, n + 1))

    @staticmethod
    def transposition(n: int, i: int, j: int) -> "SignedPerm":
        """t_{ij}: swap e_i and e_j (1-based)."""
        p = list(range(1, n + 1))
        p[i - 1], p[j - 1] = j, i
        return SignedPerm(p)

    @staticmethod
    def sign_flip(n: int, i: int) -> "SignedPerm":
        """t_i: e_i -> -e_i (1-based)."""
        p = list(range(1, n + 1))
        p[i - 1] = -i
        return SignedPerm(p)

    def __mul__(self, other: "SignedPerm") -> "SignedPerm":
        """Composition self o other (apply other first)."""
        sp = self.p
        out = []
        for v in other.p:
            if v > 0:
                out.append(sp[v - 1])
            else:
                out.append(-sp[-v - 1])
        return SignedPerm(out)

    def inverse(self) -> "SignedPerm":
        out = [0] * len(self.p)
        for i, v in enumerate(self.p):
            if v > 0:
                out[v - 1] = i + 1
            else:
                out[-v - 1] = -(i + 1)
        return SignedPerm(out)

    def __pow__(self, k: int) -> "SignedPerm":
        if k < 0:
            return self.inverse() ** (-k)
        result = SignedPerm.identity(len(self.p))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def apply(self, v):
        """Apply to an ambient vector."""
        out = [0] * len(self.p)
        for i, pi in enumerate(self.p):
            if pi > 0:
                out[pi - 1] = v[i]
            else:
                out[-pi - 1] = -v[i]
        return out

    def order(self) -> int:
        k = 1
        cur = self
        ident = SignedPerm.identity(len(self.p))
        while cur != ident:
            cur = cur * self
            k += 1
            if k > 4 * len(self.p) ** 2 + 16:
                raise AssertionError("runaway order computation")
        return k

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.p))

    def num_sign_flips(self) -> int:
        return sum(1 for v in self.p if v < 0)

    def matrix(self) -> list[list[int]]:
        n = len(self.p)
        M = [[0] * n for _ in range(n)]
        for i, pi in enumerate(self.p):
            if pi > 0:
                M[pi - 1][i] = 1
            else:
                M[-pi - 1][i] = -1
        return M

    def __eq__(self, other):
        return isinstance(other, SignedPerm) and self.p == other.p

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"SignedPerm({list(self.p)})"


class LatticeMap:
    """An integral automorphism of the ambient lattice attached to a datum."""

    __slots__ = ("datum", "mat", "_cache")

    def __init__(self, datum: RootDatum, mat) -> None:
        self.datum = datum
        self.mat = tuple(tuple(int(x) for x in row) for row in mat)
        self._cache: dict = {}

    @staticmethod
    def from_signed_perm(datum: RootDatum, sp: SignedPerm) -> "LatticeMap":
        return LatticeMap(datum, sp.matrix())

    @staticmethod
    def identity(datum: RootDatum) -> "LatticeMap":
        return LatticeMap(datum, identity_matrix(datum.ambient_dim))

    def __mul__(self, other: "LatticeMap") -> "LatticeMap":
        return LatticeMap(self.datum, mat_mul(self.mat, other.mat))

    def __pow__(self, k: int) -> "LatticeMap":
        if k < 0:
            return self.inverse() ** (-k)
        result = LatticeMap.identity(self.datum)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LatticeMap":
        if "inv" not in self._cache:
            inv = mat_inverse_fraction([list(r) for r in self.mat])
            assert all(x.denominator == 1 for row in inv for x in row)
            self._cache["inv"] = LatticeMap(self.datum, [[int(x) for x in row] for row in inv])
        return self._cache["inv"]

    def apply(self, v):
        return mat_vec(self.mat, v)

    def is_identity(self) -> bool:
        return self.mat == tuple(tuple(r) for r in identity_matrix(self.datum.ambient_dim))

    def order(self) -> int:
        k = 1
        cur = self
        while not cur.is_identity():
            cur = cur * self
            k += 1
            if k > 10000:
                raise AssertionError("runaway order computation")
        return k

    @property
    def basis_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Matrix on X_* basis coordinates (must be integral)."""
        if "bm" not in self._cache:
            d = self.datum
            cols = []
            for b in d.basis:
                img = self.apply(list(b))
                c = mat_vec(d.basis_left_inverse, [Fraction(x) for x in img])
                assert all(x.denominator == 1 for x in c), "map does not preserve X_*"
                cols.append([int(x) for x in c])
            self._cache["bm"] = tuple(tuple(cols[j][i] for j in range(d.rank)) for i in range(d.rank))
        return self._cache["bm"]

    @property
    def root_perm(self) -> tuple[int, ...]:
        """Index permutation of the root list (via coroot vectors)."""
        if "rp" not in self._cache:
            d = self.datum
            idx = d.root_index
            perm = []
            for cr in d.coroots:
                img = tuple(self.apply(list(cr)))
                perm.append(idx[img])
            self._cache["rp"] = tuple(perm)
        return self._cache["rp"]

    def __eq__(self, other):
        return isinstance(other, LatticeMap) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __repr__(self):
        return f"LatticeMap({[list(r) for r in self.mat]})"


def reflection_map(datum: RootDatum, root_idx: int) -> LatticeMap:
    """The reflection t_alpha as a lattice map: v -> v - <v, alpha> alpha-check."""
    n = datum.ambient_dim
    f = datum.roots[root_idx]
    cr = datum.coroots[root_idx]
    M = [[(1 if i == j else 0) - cr[i] * f[j] for j in range(n)] for i in range(n)]
    return LatticeMap(datum, M)


# ---------------------------------------------------------------------------
# Torus points and fixed-point groups
# ---------------------------------------------------------------------------


def canon_coords(coords) -> tuple[Fraction, ...]:
    """Reduce rational basis coordinates mod Z^n to representatives in [0,1)."""
    return tuple(Fraction(x) % 1 for x in coords)


def coords_of_ambient(datum: RootDatum, v) -> tuple[Fraction, ...]:
    """Basis coordinates of an ambient rational vector (must lie in the span)."""
    c = mat_vec(datum.basis_left_inverse, [Fraction(x) for x in v])
    # Validate the vector is in the span of the basis.
    back = [Fraction(0)] * datum.ambient_dim
    for ci, b in zip(c, datum.basis):
        back = [a + ci * bi for a, bi in zip(back, b)]
    if back != [Fraction(x) for x in v]:
        raise ValueError("vector not in the cocharacter span")
    return tuple(c)


def torus_element_from_ambient(datum: RootDatum, v) -> tuple[Fraction, ...]:
    return canon_coords(coords_of_ambient(datum, v))


def root_value(datum: RootDatum, root_idx: int, coords) -> Fraction:
    """alpha(t) in Q/Z for t given by basis coordinates."""
    pair = datum.root_pair_basis[root_idx]
    return sum((Fraction(p) * c for p, c in zip(pair, coords)), Fraction(0)) % 1


def act_on_torus(map_or_mat, coords) -> tuple[Fraction, ...]:
    """Apply a lattice map (basis-coordinate action) to a torus element."""
    bm = map_or_mat.basis_matrix if isinstance(map_or_mat, LatticeMap) else map_or_mat
    return canon_coords(mat_vec([list(r) for r in bm], list(coords)))


class FiniteAbelianGroup:
    """T^theta presented by Smith normal form, with generator witnesses.

    Elements are canonical torus coordinate tuples. `orders` lists the
    nontrivial invariant factors d_1 | d_2 | ...; `generators` are matching
    torus elements.
    """

    def __init__(self, datum: RootDatum, theta_basis_matrix) -> None:
        self.datum = datum
        A = [list(r) for r in theta_basis_matrix]
        n = datum.rank
        C = [[A[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        from .intlinalg import det

        if det(C) == 0:
            raise InfiniteFixedGroup("theta has fixed vectors on the torus")
        D, U, V = smith_normal_form(C)
        self._C = C
        self._U = U
        self._Cinv = mat_inverse_fraction(C)
        Uinv = mat_inverse_fraction(U)
        self._diag = [D[i][i] for i in range(n)]
        self.orders: list[int] = []
        self.generators: list[tuple[Fraction, ...]] = []
        self._gen_slots: list[int] = []
        for i, d in enumerate(self._diag):
            if d > 1:
                gen = canon_coords(mat_vec(self._Cinv, [Uinv[k][i] for k in range(n)]))
                self.orders.append(d)
                self.generators.append(gen)
                self._gen_slots.append(i)
        self.named_generators: dict[str, tuple[Fraction, ...]] = {}

    @property
    def order(self) -> int:
        result = 1
        for d in self.orders:
            result *= d
        return result

    def contains(self, coords) -> bool:
        y = mat_vec(self._C, list(coords))
        return all(Fraction(x).denominator == 1 for x in y)

    def coords_of(self, coords) -> tuple[int, ...]:
        """Exponent tuple of a fixed point in the invariant-factor basis."""
        y = mat_vec(self._C, list(coords))
        assert all(Fraction(v).denominator == 1 for v in y), "not a fixed point"
        z = mat_vec(self._U, [int(v) for v in y])
        return tuple(int(z[slot]) % d for slot, d in zip(self._gen_slots, self.orders))

    def element(self, exps) -> tuple[Fraction, ...]:
        out = [Fraction(0)] * self.datum.rank
        for e, g in zip(exps, self.generators):
            out = [a + e * b for a, b in zip(out, g)]
        return canon_coords(out)

    def elements(self):
        for exps in itertools.product(*(range(d) for d in self.orders)):
            yield self.element(exps)

    def subgroup_closure(self, gens) -> set[tuple[Fraction, ...]]:
        """All elements of the subgroup generated by the given elements."""
        zero = canon_coords([0] * self.datum.rank)
        seen = {zero}
        frontier = [zero]
        gens = [canon_coords(g) for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = canon_coords([a + b for a, b in zip(x, g)])
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def subgroup_invariants(self, gens) -> list[int]:
        """Invariant factors of the subgroup generated by `gens`."""
        if not self.orders:
            return []
        rows = [list(self.coords_of(g)) for g in gens]
        t = len(self.orders)
        for i, d in enumerate(self.orders):
            rows.append([d if j == i else 0 for j in range(t)])
        # Subgroup = Lambda / diag(d) Z^t where Lambda is spanned by rows.
        lam = _lattice_basis(rows, t)
        M = mat_mul(mat_inverse_fraction(lam), [[self.orders[j] if i == j else 0 for j in range(t)] for i in range(t)])
        assert all(x.denominator == 1 for row in M for x in row)
        from .intlinalg import invariant_factors

        return sorted(d for d in invariant_factors([[int(x) for x in row] for row in M]) if d > 1)


def _lattice_basis(rows, n):
    """A basis (as rows) of the lattice spanned by integer rows in Z^n."""
    # Column lattice of A^T is U^{-1} D Z^k for the SNF of A^T.
    At = [list(col) for col in zip(*rows)]
    D2, U2, _ = smith_normal_form(At)
    U2inv = mat_inverse_fraction(U2)
    k = min(len(D2), len(D2[0]))
    cols = []
    for j in range(k):
        if D2[j][j] != 0:
            cols.append([int(U2inv[i][j]) * D2[j][j] for i in range(n)])
    assert len(cols) == n, "generators do not span a finite-index lattice"
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def smith_fixed_points(datum: RootDatum, theta: LatticeMap) -> FiniteAbelianGroup:
    """The fixed-point group T^theta on T = X_* (x) Q/Z; must be finite."""
    return FiniteAbelianGroup(datum, theta.basis_matrix)


# ---------------------------------------------------------------------------
# Brute-force Weyl enumeration (the oracle)
# ---------------------------------------------------------------------------

WEYL_ORDER = {
    "A": lambda n: _factorial(n + 1),
    "B": lambda n: 2**n * _factorial(n),
    "C": lambda n: 2**n * _factorial(n),
    "D": lambda n: 2 ** (n - 1) * _factorial(n),
    "G2": lambda n: 12,
    "F4": lambda n: 1152,
    "E6": lambda n: 51840,
    "E7": lambda n: 2903040,
    "E8": lambda n: 696729600,
}


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def weyl_order(label: str, rank: int) -> int:
    return WEYL_ORDER[label](rank)


def enumerate_weyl_signed_perms(label: str, n: int, bound: int):
    """Yield all Weyl elements of a classical type as SignedPerm tuples."""
    order = weyl_order(label, n)
    if order > bound:
        raise OracleBoundExceeded(f"|W({label}{n})| = {order} > {bound}")
    if label == "A":
        N = n + 1
        for perm in itertools.permutations(range(1, N + 1)):
            yield perm
        return
    if label in ("B", "C"):
        signs_iter = itertools.product((1, -1), repeat=n)
        all_signs = list(signs_iter)
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in all_signs:
                yield tuple(s * p for s, p in zip(signs, perm))
        return
    if label == "D":
        all_signs = [s for s in itertools.product((1, -1), repeat=n)
                     if s.count(-1) % 2 == 0]
        for perm in itertools.permutations(range(1, n + 1)):
            for signs in all_signs:
                yield tuple(s * p for s, p in zip(signs, perm))
        return
    raise InvalidType(label)


def _compose_sp(a, b):
    """Signed-perm tuple composition a o b."""
    out = []
    for v in b:
        if v > 0:
            out.append(a[v - 1])
        else:
            out.append(-a[-v - 1])
    return tuple(out)


def weyl_centralizer_oracle(datum: RootDatum, theta: LatticeMap, bound: int) -> list:
    """All Weyl elements commuting with theta on the lattice, by brute force.

    Classical types return SignedPerm objects; exceptional types return
    LatticeMap objects. Deterministic (sorted) output.
    """
    label = datum.label
    if label in CLASSICAL:
        # theta as a signed-perm tuple (all our stable automorphisms are).
        th = _matrix_to_signed_perm(theta.mat)
        out = []
        for w in enumerate_weyl_signed_perms(label, datum.rank, bound):
            if _compose_sp(w, th) == _compose_sp(th, w):
                out.append(w)
        out.sort()
        return [SignedPerm(w) for w in out]
    order = weyl_order(label, datum.rank)
    if order > bound:
        raise OracleBoundExceeded(f"|W({label})| = {order} > {bound}")
    # Enumerate W as root-index permutations by BFS over simple reflections.
    gens = [reflection_map(datum, i).root_perm for i in datum.simple_idx]
    ident = tuple(range(len(datum.roots)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                c = tuple(w[g[i]] for i in range(len(g)))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    assert len(seen) == order
    th = theta.root_perm
    matches = sorted(
        w for w in seen
        if tuple(w[th[i]] for i in range(len(th))) == tuple(th[w[i]] for i in range(len(th)))
    )
    return [_root_perm_to_map(datum, w) for w in matches]


def _matrix_to_signed_perm(mat) -> tuple[int, ...]:
    n = len(mat)
    out = [0] * n
    for j in range(n):
        hits = [(i, mat[i][j]) for i in range(n) if mat[i][j] != 0]
        if len(hits) != 1 or abs(hits[0][1]) != 1:
            raise ValueError("matrix is not a signed permutation")
        i, s = hits[0]
        out[j] = s * (i + 1)
    return tuple(out)


def _root_perm_to_map(datum: RootDatum, perm) -> LatticeMap:
    """Reconstruct the lattice map from its action on coroot indices."""
    n = datum.ambient_dim
    # Solve M * coroot_i = coroot_{perm(i)} using a spanning subset.
    idxs = list(datum.simple_idx)
    B = [[Fraction(datum.coroots[i][k]) for i in idxs] for k in range(n)]
    # For non-square (type A ambient), extend by nothing: classical never here.
    Binv = mat_inverse_fraction(B)
    C = [[Fraction(datum.coroots[perm[i]][k]) for i in idxs] for k in range(n)]
    M = mat_mul(C, Binv)
    assert all(x.denominator == 1 for row in M for x in row)
    return LatticeMap(datum, [[int(x) for x in row] for row in M])
