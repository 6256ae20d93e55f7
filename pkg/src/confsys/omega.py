"""Candidate invariant systems attached to the Heisenberg parabolic.

For Z in the Levi factor l, the quadratic map produces a degree-2 element of
U(nbar) built from the symplectic pairing on V+ (the bracket into the grade-2
line) and the half-twisted action of Z on V-.  The cubic system attaches to
each Y in V- the degree-3 element obtained by contracting the quadratic map
against the V+/V- duality.  Both maps are linear and exact over Q.

Normalization: the quadratic map is fixed only up to a global nonzero scalar
by the identities it must satisfy (all of them are homogeneous in it); the
scale chosen here is -1/2 times the double sum over root pairs, matching the
classical normalization.
"""

from __future__ import annotations

from fractions import Fraction as Q

from .liealg import LieAlgebra
from .pbw import Elt, Enveloping, elt_add, elt_scale
from .roots import Root


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


class OmegaSystem:
    """The quadratic and cubic maps for one algebra, Verma-module side."""

    def __init__(self, env: Enveloping):
        self.env = env
        self.alg: LieAlgebra = env.alg
        rs = self.alg.rs
        gamma = rs.highest
        # For each root b of V+: (index of X_b, index of X_{-(gamma-b)},
        # index of X_{-b}, pairing constant N with [X_b, X_{gamma-b}] = N X_gamma).
        self._legs: list[tuple[int, int, int, Q]] = []
        for b_idx in self.alg.v_plus:
            b = self.alg.root_of[b_idx]
            assert b is not None
            comp = tuple(g - c for g, c in zip(gamma, b))
            comp_idx = self.alg.index_of_root[comp]
            br = dict(self.alg.bracket(b_idx, comp_idx))
            assert set(br) == {self.alg.x_gamma}, "V+ pairing must hit the center"
            self._legs.append((
                b_idx,
                self.alg.index_of_root[negate(comp)],
                self.alg.index_of_root[negate(b)],
                br[self.alg.x_gamma],
            ))
        self._omega2_cache: dict[int, Elt] = {}

    # -- degree 2 -------------------------------------------------------------

    def _require_levi(self, z: dict[int, Q]) -> None:
        allowed = set(self.alg.l_indices)
        for i in z:
            if i not in allowed:
                raise ValueError(f"basis index {i} is not in the Levi factor")

    def dchi(self, z: dict[int, Q]) -> Q:
        out = Q(0)
        for i, c in z.items():
            v = self.alg.dchi_index(i)
            if v is None:
                raise ValueError(f"basis index {i} is outside the parabolic")
            out += c * v
        return out

    def omega2_basis(self, i: int) -> Elt:
        """Quadratic element for the i-th Lie algebra basis vector (in l)."""
        cached = self._omega2_cache.get(i)
        if cached is None:
            cached = self._omega2({i: Q(1)})
            self._omega2_cache[i] = cached
        return cached

    def omega2(self, z: dict[int, Q]) -> Elt:
        """Quadratic element for Z in l; linear in Z; rejects Z outside l."""
        self._require_levi(z)
        out: Elt = {}
        for i, c in z.items():
            if c:
                out = elt_add(out, elt_scale(self.omega2_basis(i), c))
        return out

    def _omega2(self, z: dict[int, Q]) -> Elt:
        env, alg = self.env, self.alg
        half_dchi = self.dchi(z) / 2
        out: Elt = {}
        for _, mcomp_idx, mb_idx, pair_n in self._legs:
            # twisted action of Z on the complementary V- vector
            t: dict[int, Q] = dict(alg.bracket_elem(z, {mcomp_idx: Q(1)}))
            if half_dchi:
                t[mcomp_idx] = t.get(mcomp_idx, Q(0)) + half_dchi
            for j, cj in t.items():
                if not cj:
                    continue
                term = env.mono_mul(((j, 1),), ((mb_idx, 1),))
                out = elt_add(out, elt_scale(term, Q(-1, 2) * pair_n * cj))
        return out

    # -- degree 3 -------------------------------------------------------------

    def omega3_basis(self, y_idx: int) -> Elt:
        """Cubic element for the basis vector X at index y_idx in V-."""
        if y_idx not in self.alg.v_minus:
            raise ValueError(f"basis index {y_idx} is not in V-")
        env, alg = self.env, self.alg
        out: Elt = {}
        for plus_idx, _, minus_idx, _ in self._legs:
            br = dict(alg.bracket(plus_idx, y_idx))
            if not br:
                continue
            w2 = self.omega2(br)
            if w2:
                out = elt_add(out, env.gen_lmul(minus_idx, w2))
        return out

    def omega3(self, y: dict[int, Q]) -> Elt:
        allowed = set(self.alg.v_minus)
        for i in y:
            if i not in allowed:
                raise ValueError(f"basis index {i} is not in V-")
        out: Elt = {}
        for i, c in y.items():
            if c:
                out = elt_add(out, elt_scale(self.omega3_basis(i), c))
        return out

    def omega3_system(self) -> list[Elt]:
        """The full cubic system, one element per basis vector of V-."""
        return [self.omega3_basis(i) for i in self.alg.v_minus]

    def omega3_from_basis(self, w_basis: list[dict[int, Q]],
                          w_dual: list[dict[int, Q]], y_idx: int) -> Elt:
        """Recompute the cubic element from any basis of V+ and its dual.

        w_basis spans V+; w_dual must be the dual basis of V- under the
        invariant form.  Used to confirm basis independence.
        """
        env, alg = self.env, self.alg
        out: Elt = {}
        for w, wstar in zip(w_basis, w_dual):
            br: dict[int, Q] = {}
            for i, c in w.items():
                for j, d in alg.bracket(i, y_idx):
                    v = br.get(j, Q(0)) + c * d
                    if v:
                        br[j] = v
                    else:
                        del br[j]
            if not br:
                continue
            w2 = self.omega2(br)
            if not w2:
                continue
            acc: Elt = {}
            for i, c in wstar.items():
                acc = elt_add(acc, elt_scale(env.gen_lmul(i, w2), c))
            out = elt_add(out, acc)
        return out
