import random

from fmrep.intlin import (
    det,
    hermite_normal_form,
    integer_kernel,
    is_unimodular,
    lattice_contains,
    lattices_equal,
    nonzero_rows,
    rank,
    solve_integer,
)


def mat_mul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
        for i in range(len(A))
    ]


def random_matrix(rng, m, n, span=9):
    return [[rng.randrange(-span, span + 1) for _ in range(n)] for _ in range(m)]


def random_unimodular(rng, m):
    # product of elementary row operations
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    for _ in range(3 * m):
        i, j = rng.randrange(m), rng.randrange(m)
        if i == j:
            continue
        c = rng.randrange(-2, 3)
        for k in range(m):
            U[i][k] += c * U[j][k]
    return U


def test_hnf_identity():
    H, U = hermite_normal_form([[1, 0], [0, 1]])
    assert H == [[1, 0], [0, 1]]
    assert U == [[1, 0], [0, 1]]


def test_hnf_rank_one_example():
    H, U = hermite_normal_form([[2, 4], [1, 2]])
    assert H == [[1, 2], [0, 0]]
    assert is_unimodular(U)


def test_hnf_canonical_shape():
    rng = random.Random(17)
    for _ in range(150):
        A = random_matrix(rng, rng.randrange(1, 7), rng.randrange(1, 11))
        H, U = hermite_normal_form(A)
        assert mat_mul(U, A) == H
        assert is_unimodular(U)
        pivots = []
        for row in nonzero_rows(H):
            c = next(j for j, x in enumerate(row) if x)
            assert row[c] > 0
            pivots.append((c, row[c]))
        assert [c for c, _ in pivots] == sorted(c for c, _ in pivots)
        rows = nonzero_rows(H)
        for i, (c, p) in enumerate(pivots):
            for above in rows[:i]:
                assert 0 <= above[c] < p


def test_hnf_unimodular_invariance():
    rng = random.Random(23)
    for _ in range(60):
        m, n = rng.randrange(1, 6), rng.randrange(1, 8)
        A = random_matrix(rng, m, n)
        P = random_unimodular(rng, m)
        assert lattices_equal(A, mat_mul(P, A))


def test_kernel_of_zero_matrix():
    K = integer_kernel([[0, 0], [0, 0], [0, 0]])
    assert K == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_kernel_simple_example():
    assert integer_kernel([[1], [1]]) == [[1, -1]]


def test_kernel_properties_random():
    rng = random.Random(29)
    for _ in range(120):
        m, n = rng.randrange(1, 7), rng.randrange(1, 7)
        A = random_matrix(rng, m, n)
        K = integer_kernel(A)
        assert len(K) == m - rank(A)
        for row in K:
            assert all(
                sum(row[k] * A[k][j] for k in range(m)) == 0 for j in range(n)
            )
        # saturation: random kernel vectors solve over the basis
        if K:
            v = [0] * m
            for row in K:
                c = rng.randrange(-4, 5)
                v = [x + c * y for x, y in zip(v, row)]
            assert solve_integer(K, v) is not None


def test_solve_trivial_and_parity():
    assert solve_integer([[2, 0], [0, 3]], [0, 0]) == [0, 0]
    assert solve_integer([[2]], [1]) is None
    x = solve_integer([[2]], [6])
    assert x == [3]


def test_solve_random_consistency():
    rng = random.Random(31)
    for _ in range(120):
        m, n = rng.randrange(1, 6), rng.randrange(1, 6)
        A = random_matrix(rng, m, n)
        y = [rng.randrange(-4, 5) for _ in range(m)]
        b = [sum(y[k] * A[k][j] for k in range(m)) for j in range(n)]
        x = solve_integer(A, b)
        assert x is not None
        assert [sum(x[k] * A[k][j] for k in range(m)) for j in range(n)] == b
        assert lattice_contains(A, b)


def test_solve_unsolvable():
    assert solve_integer([[2, 0], [0, 2]], [1, 1]) is None
    assert not lattice_contains([[2, 0], [0, 2]], [1, 1])


def test_bigint_stress():
    rng = random.Random(37)
    A = [[rng.randrange(-(10**30), 10**30) for _ in range(4)] for _ in range(4)]
    H, U = hermite_normal_form(A)
    assert mat_mul(U, A) == H
    assert is_unimodular(U)
    assert abs(det(A)) == abs(
        H[0][0] * H[1][1] * H[2][2] * H[3][3]
    ) or rank(A) < 4


def test_det_matches_elimination():
    rng = random.Random(41)
    for _ in range(50):
        n = rng.randrange(1, 6)
        A = random_matrix(rng, n, n, span=6)
        H, U = hermite_normal_form(A)
        prod = 1
        for i in range(n):
            prod *= H[i][i] if i < len(H) else 0
        assert abs(det(A)) == abs(prod)
