"""Polynomial differential operators and the induced-picture calculus."""

import random
from fractions import Fraction as Q

from confsys.diffops import eval_at_identity, op_commutator
from confsys.linalg import matmul
from confsys.poly import Poly


def test_operator_ring_basics(calc_d4):
    one = calc_d4.identity_op()
    dz = calc_d4.r_gen(calc_d4.alg.x_minus_gamma)
    f = calc_d4.mult_op(calc_d4.var(0))
    assert op_commutator(dz, f) == one          # [d/dz, z] = 1
    assert (dz + dz) - dz == dz
    assert dz.compose(one) == one.compose(dz) == dz
    assert not op_commutator(dz, dz)


def test_apply_and_leibniz(calc_d4):
    z = calc_d4.var(0)
    x1 = calc_d4.var(1)
    dz = calc_d4.r_gen(calc_d4.alg.x_minus_gamma)
    poly = z * z * x1 + z * 3
    assert dz.apply(poly) == z * x1 * 2 + calc_d4.const(3)
    d2 = dz.compose(dz)
    assert d2.apply(poly) == x1 * 2
    assert d2.order() == 2


def _adjoint_matrix(alg, w):
    """Matrix of ad(w) in the algebra basis, columns = images."""
    n = alg.dim
    mat = [[Q(0)] * n for _ in range(n)]
    for j in range(n):
        img = alg.bracket_elem(w, {j: Q(1)})
        for i, c in img.items():
            mat[i][j] = c
    return mat


def test_ad_exp_inverse_matches_matrix_exponential(calc_d4):
    """exp(-ad W) computed by the series on the adjoint matrix, evaluated at
    rational coordinates, must match the symbolic adjoint transport."""
    alg = calc_d4.alg
    rng = random.Random(11)
    coords = [Q(rng.randint(-2, 2), rng.randint(1, 3))
              for _ in range(calc_d4.ncoords)]
    w = {g: coords[g] for g in range(calc_d4.ncoords) if coords[g]}
    n = alg.dim
    ad = _adjoint_matrix(alg, w)
    # terminating exponential series of the nilpotent matrix -ad
    total = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    term = total
    k = 1
    while True:
        term = matmul(term, [[-ad[i][j] / k for j in range(n)]
                             for i in range(n)])
        if all(not c for row in term for c in row):
            break
        total = [[total[i][j] + term[i][j] for j in range(n)]
                 for i in range(n)]
        k += 1
        assert k < 10
    point = coords + [Q(0)]  # parameter value irrelevant for the transport
    for y in [alg.v_plus[0], alg.x_gamma, alg.l_indices[0]]:
        sym = calc_d4.ad_exp_inverse({y: Q(1)})
        got = {i: c.eval_all(point) for i, c in sym.items()}
        got = {i: c for i, c in got.items() if c}
        expected = {i: total[i][y] for i in range(n) if total[i][y]}
        assert got == expected


def test_r_is_multiplicative(calc_d4, env_d4):
    alg = calc_d4.alg
    a = env_d4.gen(alg.v_minus[0])
    b = env_d4.normal_order([alg.v_minus[3], alg.x_minus_gamma])
    left = calc_d4.r_op(env_d4.mul(a, b))
    right = calc_d4.r_op(a).compose(calc_d4.r_op(b))
    assert left == right


def test_pi_is_a_homomorphism_sample(calc_d4):
    alg = calc_d4.alg
    rng = random.Random(13)
    for _ in range(20):
        i = rng.randrange(alg.dim)
        j = rng.randrange(alg.dim)
        lhs = op_commutator(calc_d4.pi_basis(i), calc_d4.pi_basis(j))
        rhs = calc_d4.zero_op()
        for k, c in alg.bracket(i, j):
            rhs = rhs + calc_d4.pi_basis(k).scale(c)
        assert lhs == rhs


def test_pi_orders_and_nilradical_functionals(calc_d4):
    alg = calc_d4.alg
    for i in range(alg.dim):
        assert calc_d4.pi_basis(i).order() <= 1
    for u in alg.n_indices:
        func = eval_at_identity(calc_d4.pi_basis(u))
        assert all(p.is_zero() for p in func.values())


def test_pi_coroot_value_at_identity(calc_d4):
    alg = calc_d4.alg
    op = calc_d4.pi_op(alg.h_gamma)
    value = op.apply(Poly.constant(calc_d4.nvars, 1))
    at_identity = value.subs(0, Q(0))
    for i in range(1, calc_d4.ncoords):
        at_identity = at_identity.subs(i, Q(0))
    # the induced action of the grading coroot on the constant is -2s
    assert at_identity == Poly.variable(calc_d4.nvars, calc_d4.s_var) * -2


def test_right_actions_commute_with_pi_of_opposite_radical(calc_d4, env_d4):
    alg = calc_d4.alg
    nbar = [alg.x_minus_gamma] + list(alg.v_minus)
    u = env_d4.normal_order([alg.v_minus[1], alg.v_minus[4]])
    r_u = calc_d4.r_op(u)
    for xb in nbar:
        assert not op_commutator(calc_d4.pi_basis(xb), r_u)


def test_subs_param_freezes_s(calc_d4):
    alg = calc_d4.alg
    op = calc_d4.pi_basis(alg.v_plus[0])
    frozen = op.subs_param(calc_d4.s_var, Q(-1))
    refrozen = frozen.subs_param(calc_d4.s_var, Q(17))
    assert frozen == refrozen  # no s left after the first substitution
