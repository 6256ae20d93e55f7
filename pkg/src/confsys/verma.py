"""Generalized Verma module induced from the character family s*dchi.

The module is U(g) tensored over the parabolic with the one-dimensional
character s*dchi; as a vector space it is U(nbar) for the opposite Heisenberg
radical nbar, realized here as PBW elements supported on the nbar prefix of
the basis.  The parameter s stays symbolic: acting by a basis element yields
coefficients in Q[s], and stability questions become polynomial conditions
on s solved exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from . import linalg
from .pbw import Elt, Enveloping, Mono, elt_add, elt_scale, mono_degree, spoly, S
from .poly import Poly, poly_gcd, rational_roots


@dataclass(frozen=True)
class StabilityResult:
    """Outcome of the q-stability analysis of a finite span."""

    all_s: bool
    values: tuple[Q, ...]
    levi_stable_all_s: bool         # did the Levi action stay in the span identically?
    constraint_count: int

    @property
    def is_empty(self) -> bool:
        return not self.all_s and not self.values


class VermaModule:
    def __init__(self, env: Enveloping):
        self.env = env
        self.alg = env.alg

    # -- the action ----------------------------------------------------------

    def _reduce(self, raw: Elt) -> Elt:
        """Project a normal-ordered U(g) element onto U(nbar) x character line.

        A normal-ordered monomial factors as (nbar part)(parabolic part); the
        parabolic part acts on the character line: root vectors give 0 and
        each Cartan factor H contributes the scalar s*dchi(H).
        """
        alg = self.alg
        cut = alg.nbar_dim
        out: Elt = {}
        for m, c in raw.items():
            body: Mono = ()
            scalar = None
            dead = False
            for i, e in m:
                if i < cut:
                    body = body + ((i, e),)
                    continue
                if alg.root_of[i] is not None:
                    dead = True
                    break
                v = alg.dchi_index(i)
                factor = (S * spoly(v)) ** e
                scalar = factor if scalar is None else scalar * factor
            if dead:
                continue
            coeff = c if scalar is None else c * scalar
            if coeff.is_zero():
                continue
            prev = out.get(body)
            coeff = coeff if prev is None else prev + coeff
            if coeff.is_zero():
                out.pop(body, None)
            else:
                out[body] = coeff
        return out

    def act_basis(self, i: int, v: Elt) -> Elt:
        """Action of the basis element X_i on a module element."""
        self._require_module(v)
        return self._reduce(self.env.gen_lmul(i, v))

    def act(self, x: dict[int, Q], v: Elt) -> Elt:
        self._require_module(v)
        out: Elt = {}
        for i, c in x.items():
            out = elt_add(out, elt_scale(self.act_basis(i, v), c))
        return out

    def highest(self) -> Elt:
        """The generator 1 tensor 1."""
        return self.env.one()

    def _require_module(self, v: Elt) -> None:
        cut = self.alg.nbar_dim
        for m in v:
            if any(i >= cut for i, _ in m):
                raise ValueError("element is not supported on the nbar prefix")

    # -- exact stability analysis ---------------------------------------------

    def _span_matrix(self, gens: list[Elt]) -> tuple[list[Mono], list[list[Q]]]:
        """Rational span matrix (rows = monomials, cols = generators)."""
        rows: list[Mono] = sorted({m for g in gens for m in g},
                                  key=lambda t: (mono_degree(t), t))
        index = {m: k for k, m in enumerate(rows)}
        mat = [[Q(0)] * len(gens) for _ in rows]
        for j, g in enumerate(gens):
            for m, c in g.items():
                if not c.is_constant():
                    raise NotImplementedError("span generators must not depend on s")
                mat[index[m]][j] = c.constant_value()
        return rows, mat

    def stability_constraints(self, gens: list[Elt]) -> tuple[list[Poly], list[Poly]]:
        """Polynomial conditions in s for q-stability of the span of gens.

        Returns (levi_constraints, nilradical_constraints): the span is stable
        under a basis element x at s = s0 iff every constraint from x vanishes
        at s0.  Constraints are inner products of the acted generators with a
        basis of the orthogonal complement of the span, plus any coefficient
        landing outside the span's monomial support.
        """
        for g in gens:
            if not g:
                raise ValueError("zero generator in candidate span")
        rows, mat = self._span_matrix(gens)
        index = {m: k for k, m in enumerate(rows)}
        complement = linalg.left_nullspace(mat)
        levi: list[Poly] = []
        nil: list[Poly] = []
        for part, out in ((self.alg.l_indices, levi), (self.alg.n_indices, nil)):
            for x in part:
                for g in gens:
                    w = self.act_basis(x, g)
                    inside: dict[int, Poly] = {}
                    for m, c in w.items():
                        k = index.get(m)
                        if k is None:
                            out.append(c)  # support outside the span: must vanish
                        else:
                            inside[k] = c
                    for u in complement:
                        dot = Poly(1)
                        for k, c in inside.items():
                            if u[k]:
                                dot = dot + c * u[k]
                        if not dot.is_zero():
                            out.append(dot)
        return levi, nil

    def singular_values(self, gens: list[Elt]) -> StabilityResult:
        """Exactly the rational s0 at which the span of gens is q-stable."""
        levi, nil = self.stability_constraints(gens)
        constraints = levi + nil
        if not constraints:
            return StabilityResult(True, (), True, 0)
        g = Poly.constant(1, 0)
        for p in constraints:
            g = poly_gcd(g, p)
            if g.degree() == 0:
                return StabilityResult(False, (), not levi, len(constraints))
        roots = rational_roots(g)
        return StabilityResult(False, tuple(roots), not levi, len(constraints))

    def module_action_matrix(self, gens: list[Elt], x: dict[int, Q], s0: Q) -> list[list[Q]]:
        """Matrix a with act(x, gens[i]) = sum_j a[j][i] gens[j] at s = s0.

        Raises ValueError with a residual witness when the span is not
        stable under x at s0.
        """
        rows, mat = self._span_matrix(gens)
        index = {m: k for k, m in enumerate(rows)}
        cols: list[list[Q]] = []
        for i, g in enumerate(gens):
            w = self.act(x, g)
            vec = [Q(0)] * len(rows)
            bad: Elt = {}
            for m, c in w.items():
                val = c.subs(0, s0).constant_value()
                k = index.get(m)
                if k is None:
                    if val:
                        bad[m] = Poly.constant(1, val)
                else:
                    vec[k] = val
            if bad:
                raise ValueError(
                    f"span is not stable: generator {i} leaves support; "
                    f"residual {self.env.format(bad)}")
            sol = linalg.solve(mat, vec)
            if sol is None:
                raise ValueError(f"span is not stable under x={x} at s={s0} "
                                 f"(generator {i} has residual outside the span)")
            cols.append(sol)
        return [[cols[i][j] for i in range(len(gens))] for j in range(len(gens))]

    def generic_rank(self, gens: list[Elt], samples: tuple[Q, ...] = (Q(7, 3), Q(-5, 2))) -> int:
        """Rank of the span at generic s, via random rational substitutions."""
        ranks = []
        for s0 in samples:
            rows = sorted({m for g in gens for m in g})
            index = {m: k for k, m in enumerate(rows)}
            mat = [[Q(0)] * len(gens) for _ in rows]
            for j, g in enumerate(gens):
                for m, c in g.items():
                    mat[index[m]][j] = c.subs(0, s0).constant_value()
            ranks.append(linalg.rank(mat))
        return max(ranks)
