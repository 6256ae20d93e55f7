"""Chevalley-basis construction of a simply-laced simple Lie algebra.

Basis: one root vector X_a per root a, plus the simple coroots H_1..H_r.
Normalizations enforced (exactly, over Q):

  * [X_a, X_{-a}] = H_a, where H_a is the coordinate combination of the H_i;
  * [H, X_b] = (b, a) X_b for H = H_a;
  * the invariant form B with B(X_a, X_{-a}) = 1, B(H_a, H_b) = (a, b);
  * all root-root structure constants are +-1.

Signs come from a bimultiplicative +-1 two-cocycle on the root lattice
("asymmetry function"), gauged so that [X_a, X_{-a}] = +H_a; the build then
re-verifies the normalizations and (for moderate dimensions) the full Jacobi
identity rather than trusting the construction.

The basis is ordered so that the centrally-extended abelian radical opposite
to the Heisenberg parabolic (X_{-gamma} and the grade -1 root vectors) forms
a prefix; Poincare-Birkhoff-Witt monomials over that prefix then model the
generalized Verma module directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from functools import cached_property

from .roots import Root, RootSystem, root_str

BracketRow = tuple[tuple[int, Q], ...]


def _eps_exponent(gram: tuple[tuple[int, ...], ...], x: Root, y: Root) -> int:
    """Exponent of -1 in the asymmetry cocycle eps(x, y).

    eps is bimultiplicative with eps(a_i, a_i) = -1, eps(a_i, a_j) = (-1)^(a_i, a_j)
    for i < j and +1 for i > j; then eps(x, y) eps(y, x) = (-1)^(x, y) and
    eps(x, x) = (-1)^((x, x)/2).
    """
    total = 0
    r = len(x)
    for i in range(r):
        if not x[i]:
            continue
        total += x[i] * y[i]  # diagonal: eps(a_i, a_i) = -1
        for j in range(i + 1, r):
            if y[j] and gram[i][j] % 2:
                total += x[i] * y[j]
    return total


@dataclass(frozen=True)
class LieAlgebra:
    rs: RootSystem
    names: tuple[str, ...]
    root_of: tuple[Root | None, ...]       # None for Cartan generators
    index_of_root: dict[Root, int]
    cartan_index: tuple[int, ...]           # index of H_i for each simple i
    table: tuple[tuple[BracketRow, ...], ...]
    grade: tuple[int, ...]                  # ad(H_gamma) eigenvalue per index

    # ------------------------------------------------------------------ core

    @property
    def dim(self) -> int:
        return len(self.names)

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def gamma(self) -> Root:
        return self.rs.highest

    def bracket(self, i: int, j: int) -> BracketRow:
        return self.table[i][j]

    def bracket_elem(self, a: dict[int, object], b: dict[int, object]) -> dict[int, object]:
        """Bracket of two elements; coefficients may be Fraction or Poly."""
        out: dict[int, object] = {}
        for i, ci in a.items():
            for j, cj in b.items():
                for k, n in self.table[i][j]:
                    c = ci * cj * n
                    if k in out:
                        out[k] = out[k] + c
                    else:
                        out[k] = c
        return {k: v for k, v in out.items() if v}

    def ad_basis(self, i: int, elem: dict[int, object]) -> dict[int, object]:
        """[X_i, elem] for a basis index i."""
        out: dict[int, object] = {}
        for j, cj in elem.items():
            for k, n in self.table[i][j]:
                c = cj * n
                if k in out:
                    out[k] = out[k] + c
                else:
                    out[k] = c
        return {k: v for k, v in out.items() if v}

    def h_of(self, a: Root) -> dict[int, Q]:
        """H_a as a combination of the simple coroots."""
        return {self.cartan_index[i]: Q(c) for i, c in enumerate(a) if c}

    def killing(self, i: int, j: int) -> Q:
        """The invariant form normalized by B(X_a, X_{-a}) = 1."""
        ri, rj = self.root_of[i], self.root_of[j]
        if ri is None and rj is None:
            si = self.cartan_index.index(i)
            sj = self.cartan_index.index(j)
            return Q(self.rs.gram[si][sj])
        if ri is None or rj is None:
            return Q(0)
        return Q(1) if tuple(x + y for x, y in zip(ri, rj)) == (0,) * self.rank else Q(0)

    def killing_elem(self, a: dict[int, Q], b: dict[int, Q]) -> Q:
        return sum((ca * cb * self.killing(i, j) for i, ca in a.items() for j, cb in b.items()), Q(0))

    # ------------------------------------------------- Heisenberg structure

    @cached_property
    def nbar_dim(self) -> int:
        """Size of the prefix spanning X_{-gamma} and the grade -1 vectors."""
        return 1 + len(self.v_minus)

    @cached_property
    def x_minus_gamma(self) -> int:
        return 0

    @cached_property
    def x_gamma(self) -> int:
        return self.dim - 1

    @cached_property
    def v_minus(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grade) if g == -1)

    @cached_property
    def v_plus(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grade) if g == 1)

    @cached_property
    def l_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grade) if g == 0)

    @cached_property
    def n_indices(self) -> tuple[int, ...]:
        return tuple(i for i, g in enumerate(self.grade) if g > 0)

    @cached_property
    def q_indices(self) -> tuple[int, ...]:
        return self.l_indices + self.n_indices

    @cached_property
    def graded_dims(self) -> tuple[int, int, int, int, int]:
        dims = [0] * 5
        for g in self.grade:
            dims[g + 2] += 1
        return tuple(dims)

    @cached_property
    def deleted_components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the simple roots orthogonal to gamma (0-based)."""
        nodes = [i for i in range(self.rank)
                 if self.rs.pairing(self.rs.simple(i), self.gamma) == 0]
        seen: set[int] = set()
        comps = []
        for start in nodes:
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in nodes:
                    if v not in seen and self.rs.gram[u][v] != 0:
                        seen.add(v)
                        stack.append(v)
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))

    # ------------------------------------------------------------- character

    def dchi_index(self, i: int) -> Q | None:
        """Value of the parabolic character on basis index i.

        The character is the unique one on the Levi factor that vanishes on
        its derived algebra and takes the value 2 on H_gamma: it restricts to
        the highest root on the Cartan and to 0 on every root vector, and is
        extended by 0 on the nilradical.  Returns None outside the parabolic.
        """
        if self.grade[i] < 0:
            return None
        r = self.root_of[i]
        if r is not None:
            return Q(0)
        si = self.cartan_index.index(i)
        return Q(self.rs.pairing(self.gamma, self.rs.simple(si)))

    def dchi(self, elem: dict[int, Q], *, on_q: bool = False) -> Q:
        total = Q(0)
        for i, c in elem.items():
            v = self.dchi_index(i)
            if v is None:
                raise ValueError(f"element not in the parabolic: {self.names[i]}")
            if not on_q and self.grade[i] > 0:
                raise ValueError(f"element not in the Levi factor: {self.names[i]}")
            total += c * v
        return total

    @cached_property
    def h_gamma(self) -> dict[int, Q]:
        return self.h_of(self.gamma)

    # ---------------------------------------------------------- verification

    def verify_normalizations(self) -> None:
        """Check the four Chevalley normalizations and +-1 structure constants."""
        zero = (0,) * self.rank
        for i, a in enumerate(self.root_of):
            if a is None:
                continue
            neg = tuple(-x for x in a)
            j = self.index_of_root[neg]
            got = dict(self.table[i][j])
            want = self.h_of(a)
            if got != want:
                raise AssertionError(f"[X_a, X_-a] != H_a at a={root_str(a)}: {got} vs {want}")
            if self.killing(i, j) != 1:
                raise AssertionError(f"B(X_a, X_-a) != 1 at a={root_str(a)}")
            for si in range(self.rank):
                h = self.cartan_index[si]
                got_h = dict(self.table[h][i])
                want_c = Q(self.rs.pairing(a, self.rs.simple(si)))
                want_h = {i: want_c} if want_c else {}
                if got_h != want_h:
                    raise AssertionError(f"[H, X_a] wrong at a={root_str(a)}, H_{si+1}")
            for j2, b in enumerate(self.root_of):
                if b is None or b == neg:
                    continue
                s = tuple(x + y for x, y in zip(a, b))
                row = self.table[i][j2]
                if s != zero and self.rs.is_root(s):
                    if len(row) != 1 or row[0][0] != self.index_of_root[s] or abs(row[0][1]) != 1:
                        raise AssertionError(f"structure constant not +-1 at {root_str(a)},{root_str(b)}")
                elif s != zero and row:
                    raise AssertionError(f"unexpected bracket at {root_str(a)},{root_str(b)}")

    def verify_jacobi(self) -> None:
        """Exhaustive Jacobi check over basis triples i < j < k."""
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                bij = dict(self.table[i][j])
                for k in range(j + 1, n):
                    # cyclic form: [k,[i,j]] + [i,[j,k]] + [j,[k,i]] = 0
                    acc = self.ad_basis(k, bij) if bij else {}
                    for t, c in self.ad_basis(i, dict(self.table[j][k])).items():
                        acc[t] = acc.get(t, Q(0)) + c
                    for t, c in self.ad_basis(j, dict(self.table[k][i])).items():
                        acc[t] = acc.get(t, Q(0)) + c
                    if any(c for c in acc.values()):
                        raise AssertionError(f"Jacobi fails at triple {i},{j},{k}")

    def format_elem(self, elem: dict[int, object]) -> str:
        if not elem:
            return "0"
        return " + ".join(f"({elem[i]})*{self.names[i]}" for i in sorted(elem))


def build_lie_algebra(rs: RootSystem, *, check: bool = True) -> LieAlgebra:
    """Construct the algebra with its bracket table from a root system."""
    r = rs.rank
    gamma = rs.highest
    zero = (0,) * r

    pos_sorted = sorted(rs.positive, key=lambda t: (sum(t), t))
    v_plus_roots = [a for a in pos_sorted if rs.pairing(a, gamma) == 1]
    l_pos_roots = [a for a in pos_sorted if rs.pairing(a, gamma) == 0]

    order: list[tuple[str, Root | None, int]] = []  # (name, root, simple-index)
    order.append((f"Y[{root_str(gamma)}]", tuple(-x for x in gamma), -1))
    for a in v_plus_roots:
        order.append((f"Y[{root_str(a)}]", tuple(-x for x in a), -1))
    for a in l_pos_roots:
        order.append((f"X[-{root_str(a)}]", tuple(-x for x in a), -1))
    for i in range(r):
        order.append((f"H{i + 1}", None, i))
    for a in l_pos_roots:
        order.append((f"X[{root_str(a)}]", a, -1))
    for a in v_plus_roots:
        order.append((f"X[{root_str(a)}]", a, -1))
    order.append((f"X[{root_str(gamma)}]", gamma, -1))

    names = tuple(t[0] for t in order)
    root_of = tuple(t[1] for t in order)
    cartan_index = tuple(i for i, t in enumerate(order) if t[1] is None)
    index_of_root = {t[1]: i for i, t in enumerate(order) if t[1] is not None}
    dim = len(order)
    grade = tuple(0 if a is None else rs.pairing(a, gamma) for a in root_of)

    def sigma(a: Root) -> int:
        return 1 if sum(a) > 0 else -1

    def pair_bracket(i: int, j: int) -> BracketRow:
        a, b = root_of[i], root_of[j]
        if a is None and b is None:
            return ()
        if a is None or b is None:
            h_simple = order[i][2] if a is None else order[j][2]
            vec = b if a is None else a
            sign = 1 if a is None else -1
            c = rs.pairing(vec, rs.simple(h_simple)) * sign
            target = j if a is None else i
            return ((target, Q(c)),) if c else ()
        s = tuple(x + y for x, y in zip(a, b))
        if s == zero:
            return tuple(sorted({cartan_index[k]: Q(c) for k, c in enumerate(a) if c}.items()))
        if rs.is_root(s):
            n = sigma(a) * sigma(b) * sigma(s) * (-1) ** _eps_exponent(rs.gram, a, b)
            # pre-gauge cocycle bracket [x_a, x_b] = eps(a,b) x_{a+b}
            return ((index_of_root[s], Q(n)),)
        return ()

    table = tuple(tuple(pair_bracket(i, j) for j in range(dim)) for i in range(dim))
    alg = LieAlgebra(rs, names, root_of, index_of_root, cartan_index, table, grade)
    if check:
        alg.verify_normalizations()
        if dim <= 150:
            alg.verify_jacobi()
    return alg
