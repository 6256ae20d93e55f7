"""Polynomial-coefficient differential operators on the opposite nilradical.

Exponential coordinates: the group element is nbar(x, z) =
exp(z X_{-gamma} + sum_e x_e X_{-e}) over the basis of the opposite Heisenberg
radical, so coordinate number g matches Lie algebra basis index g (the central
coordinate z is number 0).  Polynomial coefficients live in
Q[z, x_1..x_m, s]: the induced-family parameter s is the last variable and is
never differentiated.

The right regular action R sends the enveloping algebra of the opposite
nilradical to constant-plus-linear-coefficient operators; the induced family
pi is realized through the twisted adjoint series Ad(nbar^{-1}) = exp(-ad W),
which terminates because W is nilpotent of depth at most four.
"""

from __future__ import annotations

from fractions import Fraction as Q
from math import comb

from .liealg import LieAlgebra
from .pbw import Elt, Mono, mono_word
from .poly import Poly

Der = tuple[int, ...]
PointFunctional = dict[Der, Poly]


def op_commutator(a: "PolyDiffOp", b: "PolyDiffOp") -> "PolyDiffOp":
    return a.commutator(b)


def eval_at_identity(a: "PolyDiffOp") -> PointFunctional:
    return a.at_identity()


class PolyDiffOp:
    """Differential operator sum_d coeff_d * (d/dcoords)^d with Poly coeffs."""

    __slots__ = ("ncoords", "terms")

    def __init__(self, ncoords: int, terms: dict[Der, Poly] | None = None):
        self.ncoords = ncoords
        self.terms: dict[Der, Poly] = {}
        if terms:
            for d, c in terms.items():
                if not c.is_zero():
                    self.terms[d] = c

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def order(self) -> int:
        return max((sum(d) for d in self.terms), default=-1)

    def _check(self, other: "PolyDiffOp") -> None:
        if self.ncoords != other.ncoords:
            raise ValueError("coordinate count mismatch")

    def __add__(self, other: "PolyDiffOp") -> "PolyDiffOp":
        self._check(other)
        out = dict(self.terms)
        for d, c in other.terms.items():
            v = out.get(d)
            v = c if v is None else v + c
            if v.is_zero():
                out.pop(d, None)
            else:
                out[d] = v
        return PolyDiffOp(self.ncoords, out)

    def __neg__(self) -> "PolyDiffOp":
        return PolyDiffOp(self.ncoords, {d: -c for d, c in self.terms.items()})

    def __sub__(self, other: "PolyDiffOp") -> "PolyDiffOp":
        return self + (-other)

    def scale(self, c: Poly | Q | int) -> "PolyDiffOp":
        """Left multiplication by a function (or scalar)."""
        return PolyDiffOp(self.ncoords,
                          {d: v * c for d, v in self.terms.items()})

    def compose(self, other: "PolyDiffOp") -> "PolyDiffOp":
        """self applied after other, as operators (Leibniz expansion)."""
        self._check(other)
        out: dict[Der, Poly] = {}
        for da, ca in self.terms.items():
            for db, cb in other.terms.items():
                # distribute each partial of da over cb or past it
                for dk, mult, cb_k in _leibniz(da, cb):
                    d = tuple(x + y for x, y in zip(dk, db))
                    c = ca * cb_k if mult == 1 else ca * cb_k * mult
                    v = out.get(d)
                    v = c if v is None else v + c
                    if v.is_zero():
                        out.pop(d, None)
                    else:
                        out[d] = v
        return PolyDiffOp(self.ncoords, out)

    def commutator(self, other: "PolyDiffOp") -> "PolyDiffOp":
        return self.compose(other) - other.compose(self)

    def apply(self, f: Poly) -> Poly:
        out = Poly(f.nvars)
        for d, c in self.terms.items():
            g = f
            for i, k in enumerate(d):
                for _ in range(k):
                    g = g.diff(i)
                if g.is_zero():
                    break
            if not g.is_zero():
                out = out + c * g
        return out

    def subs_param(self, i: int, value: Q) -> "PolyDiffOp":
        return PolyDiffOp(self.ncoords,
                          {d: c.subs(i, value) for d, c in self.terms.items()})

    def at_identity(self) -> dict[Der, Poly]:
        """The functional f -> (D f)(e) as derivative-coefficients at 0.

        Coefficients keep only the parameter variable (coords are set to 0);
        they are returned as univariate polynomials in s.
        """
        out: dict[Der, Poly] = {}
        for d, c in self.terms.items():
            for i in range(self.ncoords):
                c = c.subs(i, 0)
            if not c.is_zero():
                out[d] = _compress_to_param(c, self.ncoords)
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PolyDiffOp) and self.ncoords == other.ncoords
                and self.terms == other.terms)

    def format(self, names: list[str]) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for d in sorted(self.terms, key=lambda t: (sum(t), t)):
            ds = "".join(
                (f"D{names[i]}" if k == 1 else f"D{names[i]}^{k}")
                for i, k in enumerate(d) if k
            )
            cs = self.terms[d].format(names + ["s"])
            pieces.append(f"({cs})" + (f"*{ds}" if ds else ""))
        return " + ".join(pieces)


def _leibniz(da: Der, cb: Poly):
    """Expand (d^da) o (cb * .) = sum over splits: (partials of cb) * d^rest.

    Yields (rest_der, multinomial, derived_cb) triples with derived_cb nonzero.
    """
    items: list[tuple[Der, int, Poly]] = [(da, 1, cb)]
    for i in range(len(da)):
        nxt: list[tuple[Der, int, Poly]] = []
        for d, mult, c in items:
            k = d[i]
            g = c
            for j in range(k + 1):
                if g.is_zero():
                    break
                nxt.append((d[:i] + (k - j,) + d[i + 1:], mult * comb(k, j), g))
                g = g.diff(i)
        items = nxt
    return items


def _compress_to_param(c: Poly, ncoords: int) -> Poly:
    out: dict[tuple[int, ...], Q] = {}
    for e, v in c.terms.items():
        assert all(x == 0 for x in e[:ncoords])
        out[(e[ncoords],)] = v
    return Poly(1, out)


class OperatorCalculus:
    """R and the induced family pi for one algebra, plus shared rings."""

    def __init__(self, alg: LieAlgebra):
        self.alg = alg
        self.ncoords = alg.nbar_dim           # z plus one x per V- vector
        self.nvars = self.ncoords + 1         # trailing parameter s
        self.s_var = self.ncoords
        self.coord_names = [alg.names[g] for g in range(self.ncoords)]
        self._r_gen: dict[int, PolyDiffOp] = {}
        self._r_mono: dict[Mono, PolyDiffOp] = {}
        self._pi_basis: dict[int, PolyDiffOp] = {}

    # -- ring helpers --------------------------------------------------------

    def const(self, c: Q | int) -> Poly:
        return Poly.constant(self.nvars, c)

    def var(self, i: int) -> Poly:
        return Poly.variable(self.nvars, i)

    def s_poly(self) -> Poly:
        return self.var(self.s_var)

    def zero_op(self) -> PolyDiffOp:
        return PolyDiffOp(self.ncoords)

    def identity_op(self) -> PolyDiffOp:
        return PolyDiffOp(self.ncoords, {(0,) * self.ncoords: self.const(1)})

    def mult_op(self, f: Poly) -> PolyDiffOp:
        return PolyDiffOp(self.ncoords, {(0,) * self.ncoords: f})

    def _der(self, i: int) -> Der:
        return tuple(1 if j == i else 0 for j in range(self.ncoords))

    # -- the adjoint series ---------------------------------------------------

    def w_element(self) -> dict[int, Poly]:
        """W with nbar(x, z) = exp(W): coordinate g times basis vector g."""
        return {g: self.var(g) for g in range(self.ncoords)}

    def ad_exp_inverse(self, y: dict[int, Poly | Q]) -> dict[int, Poly]:
        """Ad(nbar(x,z)^{-1}) Y = exp(-ad W) Y with polynomial coefficients."""
        cur: dict[int, Poly] = {}
        for i, c in y.items():
            p = c if isinstance(c, Poly) else self.const(c)
            if not p.is_zero():
                cur[i] = p
        out = dict(cur)
        w = self.w_element()
        sign, fact = -1, 1
        for k in range(1, 6):
            cur = self.alg.bracket_elem(w, cur)
            if not cur:
                break
            fact *= k
            for i, c in cur.items():
                add = c * Q(sign, fact)
                v = out.get(i)
                v = add if v is None else v + add
                if v.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = v
            sign = -sign
        else:
            raise AssertionError("adjoint series failed to terminate")
        return out

    def dchi_ext(self, y: dict[int, Poly]) -> Poly:
        """Function-linear extension of the character derivative to q."""
        out = self.const(0)
        for i, c in y.items():
            v = self.alg.dchi_index(i)
            if v is None:
                raise ValueError(f"basis index {i} is outside the parabolic")
            if v:
                out = out + c * v
        return out

    # -- the right regular action ---------------------------------------------

    def r_gen(self, g: int) -> PolyDiffOp:
        """R of the g-th basis vector of the opposite nilradical."""
        cached = self._r_gen.get(g)
        if cached is not None:
            return cached
        alg = self.alg
        if not 0 <= g < self.ncoords:
            raise ValueError(f"basis index {g} is not in the opposite nilradical")
        terms = {self._der(g): self.const(1)}
        if g != alg.x_minus_gamma:
            delta = tuple(-c for c in alg.root_of[g])
            comp = tuple(gc - dc for gc, dc in zip(alg.rs.highest, delta))
            j = alg.index_of_root[tuple(-c for c in comp)]
            br = dict(alg.bracket(j, g))
            n = br[alg.x_minus_gamma]
            zder = self._der(alg.x_minus_gamma)
            terms[zder] = terms.get(zder, self.const(0)) + self.var(j) * (n / 2)
        op = PolyDiffOp(self.ncoords, terms)
        self._r_gen[g] = op
        return op

    def r_mono(self, m: Mono) -> PolyDiffOp:
        cached = self._r_mono.get(m)
        if cached is not None:
            return cached
        word = mono_word(m)
        if not word:
            op = self.identity_op()
        else:
            op = self.r_mono(m[:-1] if m[-1][1] == 1
                             else m[:-1] + ((m[-1][0], m[-1][1] - 1),))
            op = op.compose(self.r_gen(word[-1]))
        self._r_mono[m] = op
        return op

    def r_op(self, u: Elt) -> PolyDiffOp:
        """R of an enveloping-algebra element (coefficients may involve s)."""
        out = self.zero_op()
        for m, c in u.items():
            out = out + self.r_mono(m).scale(c.extend(self.nvars, self.s_var))
        return out

    def r_ext(self, y: dict[int, Poly]) -> PolyDiffOp:
        """Function-linear extension of R to nilradical-valued functions."""
        out = self.zero_op()
        for i, c in y.items():
            out = out + self.r_gen(i).scale(c)
        return out

    # -- the induced family ----------------------------------------------------

    def pi_basis(self, i: int) -> PolyDiffOp:
        cached = self._pi_basis.get(i)
        if cached is None:
            cached = self._pi({i: Q(1)})
            self._pi_basis[i] = cached
        return cached

    def pi_op(self, y: dict[int, Q]) -> PolyDiffOp:
        out = self.zero_op()
        for i, c in y.items():
            if c:
                out = out + self.pi_basis(i).scale(c)
        return out

    def _pi(self, y: dict[int, Q]) -> PolyDiffOp:
        """pi_s(Y) = -s dchi((Ad(nbar^{-1})Y)_q) - R((Ad(nbar^{-1})Y)_nbar)."""
        w = self.ad_exp_inverse(y)
        nbar_part: dict[int, Poly] = {}
        q_part: dict[int, Poly] = {}
        for i, c in w.items():
            (nbar_part if i < self.ncoords else q_part)[i] = c
        out = self.mult_op(-(self.s_poly() * self.dchi_ext(q_part)))
        return out - self.r_ext(nbar_part)

    def pi_word(self, idxs: list[int]) -> PolyDiffOp:
        """pi of a product of basis vectors (left factor applied last)."""
        out = self.identity_op()
        for i in idxs:
            out = out.compose(self.pi_basis(i))
        return out
