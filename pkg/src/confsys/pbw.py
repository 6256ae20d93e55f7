"""Poincare-Birkhoff-Witt calculus in the universal enveloping algebra.

Monomials are sorted (basis-index, exponent) tuples over the fixed ordered
basis of the Lie algebra; elements carry coefficients in Q[s], where s is the
formal parameter of the induced-character family.  Products are normal
ordered with the rewriting rule  x y = y x + [x, y]  and never increase the
filtration degree.
"""

from __future__ import annotations

from fractions import Fraction as Q
from itertools import combinations_with_replacement

from .liealg import LieAlgebra
from .poly import Poly

Mono = tuple[tuple[int, int], ...]
Elt = dict[Mono, Poly]

ONE_MONO: Mono = ()


def spoly(c: Q | int) -> Poly:
    return Poly.constant(1, c)


S = Poly.variable(1, 0)  # the parameter s


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_word(m: Mono) -> tuple[int, ...]:
    out: list[int] = []
    for i, e in m:
        out.extend([i] * e)
    return tuple(out)


def _mono_append(m: Mono, g: int) -> Mono:
    """Append generator g to a monomial whose largest index is <= g."""
    if m and m[-1][0] == g:
        return m[:-1] + ((g, m[-1][1] + 1),)
    return m + ((g, 1),)


def elt_add(a: Elt, b: Elt) -> Elt:
    out = dict(a)
    for m, c in b.items():
        v = out.get(m)
        v = c if v is None else v + c
        if v.is_zero():
            out.pop(m, None)
        else:
            out[m] = v
    return out


def elt_scale(a: Elt, c: Poly | Q | int) -> Elt:
    if not isinstance(c, Poly):
        c = spoly(c)
    if c.is_zero():
        return {}
    return {m: v * c for m, v in a.items()}


def elt_sub(a: Elt, b: Elt) -> Elt:
    return elt_add(a, elt_scale(b, -1))


def elt_degree(a: Elt) -> int:
    return max((mono_degree(m) for m in a), default=-1)


def elt_equal(a: Elt, b: Elt) -> bool:
    return elt_sub(a, b) == {}


class Enveloping:
    """Multiplication engine for U(g) over a fixed LieAlgebra basis order."""

    def __init__(self, alg: LieAlgebra):
        self.alg = alg
        self._rmul_memo: dict[tuple[Mono, int], dict[Mono, Q]] = {}

    # -- basic constructors -------------------------------------------------

    def one(self) -> Elt:
        return {ONE_MONO: spoly(1)}

    def gen(self, i: int) -> Elt:
        return {((i, 1),): spoly(1)}

    def from_lie(self, elem: dict[int, Q]) -> Elt:
        return {((i, 1),): spoly(c) for i, c in elem.items() if c}

    def normal_order(self, word: list[int]) -> Elt:
        """Normal-ordered image of a left-to-right product of basis vectors."""
        out = self.one()
        for g in word:
            out = self.mul(out, self.gen(g))
        return out

    # -- normal ordering ----------------------------------------------------

    def mono_times_gen(self, m: Mono, g: int) -> dict[Mono, Q]:
        """Normal-ordered product (monomial) * X_g with rational coefficients."""
        if not m or m[-1][0] <= g:
            return {_mono_append(m, g): Q(1)}
        key = (m, g)
        cached = self._rmul_memo.get(key)
        if cached is not None:
            return cached
        last, exp = m[-1]
        head = m[:-1] if exp == 1 else m[:-1] + ((last, exp - 1),)
        # (head * last) * g = (head * g) * last + head * [last, g]
        out: dict[Mono, Q] = {}
        for m2, c2 in self.mono_times_gen(head, g).items():
            for m3, c3 in self.mono_times_gen(m2, last).items():
                v = out.get(m3, Q(0)) + c2 * c3
                if v:
                    out[m3] = v
                else:
                    del out[m3]
        for k, n in self.alg.table[last][g]:
            for m3, c3 in self.mono_times_gen(head, k).items():
                v = out.get(m3, Q(0)) + n * c3
                if v:
                    out[m3] = v
                else:
                    del out[m3]
        self._rmul_memo[key] = out
        return out

    def mono_mul(self, a: Mono, b: Mono) -> dict[Mono, Q]:
        cur: dict[Mono, Q] = {a: Q(1)}
        for g in mono_word(b):
            nxt: dict[Mono, Q] = {}
            for m, c in cur.items():
                for m2, c2 in self.mono_times_gen(m, g).items():
                    v = nxt.get(m2, Q(0)) + c * c2
                    if v:
                        nxt[m2] = v
                    else:
                        del nxt[m2]
            cur = nxt
        return cur

    def mul(self, a: Elt, b: Elt) -> Elt:
        out: Elt = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                cab = ca * cb
                for m, c in self.mono_mul(ma, mb).items():
                    v = out.get(m)
                    v = cab * c if v is None else v + cab * c
                    if v.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = v
        return out

    def gen_lmul(self, g: int, a: Elt) -> Elt:
        """Normal-ordered product X_g * a."""
        return self.mul(self.gen(g), a)

    def lie_lmul(self, x: dict[int, Q], a: Elt) -> Elt:
        out: Elt = {}
        for i, c in x.items():
            out = elt_add(out, elt_scale(self.gen_lmul(i, a), c))
        return out

    # -- misc ----------------------------------------------------------------

    def weight(self, m: Mono) -> tuple[Q, ...]:
        """h-weight of a monomial (sum of the root weights of its factors)."""
        acc = [Q(0)] * self.alg.rank
        for i, e in m:
            r = self.alg.root_of[i]
            if r is not None:
                for k, x in enumerate(r):
                    acc[k] += e * x
        return tuple(acc)

    def format(self, a: Elt) -> str:
        if not a:
            return "0"
        names = self.alg.names
        pieces = []
        for m in sorted(a, key=lambda t: (mono_degree(t), t)):
            c = a[m].format(["s"])
            body = "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in m)
            pieces.append(f"({c})" + (f"*{body}" if body else ""))
        return " + ".join(pieces)


def monomials_up_to(indices: tuple[int, ...], degree: int) -> list[Mono]:
    """All PBW monomials over the given generators with degree <= bound."""
    out: list[Mono] = []
    for d in range(degree + 1):
        for combo in combinations_with_replacement(sorted(indices), d):
            mono: Mono = ()
            for g in combo:
                mono = _mono_append(mono, g)
            out.append(mono)
    return out
