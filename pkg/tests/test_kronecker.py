"""
Kronecker Oracle Tests.

Tests exact coefficients against known values and an independent character table,
the symmetries of g, the tensor-square support, and the closure properties the
certificate rules rely on.
"""

import random
from itertools import permutations
from math import factorial

import pytest

from src.characters import class_size, dimension
from src.kronecker import KroneckerOracle, KroneckerQuery, kronecker, missing_constituents
from src.partitions import (
    Partition,
    chopped_square,
    enumerate_partitions,
    parse_partition,
    rectangle,
    row_add,
    staircase,
    vertical_sum,
)
from src.utils.errors import OracleLimitError, SizeMismatchError

P = Partition.of


def _random_triple(rng: random.Random, n: int):
    shapes = list(enumerate_partitions(n))
    return rng.choice(shapes), rng.choice(shapes), rng.choice(shapes)


def _random_positive_pair(rng: random.Random, oracle: KroneckerOracle, n: int):
    alpha = rng.choice(list(enumerate_partitions(n)))
    support = sorted(oracle.tensor_square_support(alpha), key=lambda p: p.parts)
    return alpha, rng.choice(support)


class TestKnownValues:
    """Test coefficients with closed-form or published values."""

    def test_trivial_factor(self, oracle):
        """g(lambda, mu, (n)) is 1 exactly when lambda = mu."""
        shapes = list(enumerate_partitions(6))
        for lam in shapes:
            for mu in shapes:
                assert oracle.kronecker(lam, mu, P(6)) == (1 if lam == mu else 0)

    def test_sign_factor(self, oracle):
        """g(lambda, mu, (1^n)) is 1 exactly when mu = lambda'."""
        shapes = list(enumerate_partitions(6))
        sign = Partition((1,) * 6)
        for lam in shapes:
            for mu in shapes:
                assert oracle.kronecker(lam, mu, sign) == (1 if mu == lam.conjugate() else 0)

    def test_s4_entry(self, oracle):
        """(3,1) is not in the tensor square of (2,2)."""
        assert oracle.kronecker("[2,2]", "[2,2]", "[3,1]") == 0
        assert oracle.tensor_square_support("[2,2]") == {P(4), P(2, 2), P(1, 1, 1, 1)}

    @pytest.mark.parametrize("k,expected", [(2, 1), (3, 0), (4, 1), (5, 0)])
    def test_two_row_rectangles(self, oracle, k, expected):
        """g((k,k),(k,k),(k,k)) depends on the parity of k."""
        square = rectangle(2, k)
        assert oracle.kronecker(square, square, square) == expected

    @pytest.mark.parametrize("n,expected", [(5, 1), (6, 0), (7, 1), (8, 0)])
    def test_near_rectangles(self, oracle, n, expected):
        """g((n,n-2),(n,n-2),(n-1,n-1)) depends on the parity of n."""
        lam = P(n, n - 2)
        assert oracle.kronecker(lam, lam, P(n - 1, n - 1)) == expected

    def test_explicit_positive_pairs(self, oracle):
        """Pairs used as computer-checked bases in the constructions."""
        assert oracle.kronecker("[3^3]", "[3^3]", "[3^3]") > 0
        assert oracle.is_positive("[3^4]", "[3^4]", "[6,6]")
        assert oracle.is_positive("[4,4]", "[4,4]", "[4,4]")
        assert oracle.is_positive(staircase(4), staircase(4), "[5,5]")
        for t in range(3):
            lam = P(t + 2, t + 1, t)
            assert oracle.is_positive(lam, lam, Partition((t + 1,) * 3))

    def test_agrees_with_brute_force_table(self, oracle, brute_characters):
        """Class sums over an independent character table give the same coefficients."""
        for n in range(1, 6):
            table = brute_characters(n)
            shapes = list(enumerate_partitions(n))
            for lam in shapes:
                for mu in shapes:
                    for nu in shapes:
                        total = sum(
                            factorial(n) // class_size(c) * table[(lam, c)] * table[(mu, c)] * table[(nu, c)]
                            for c in shapes
                        )
                        assert oracle.kronecker(lam, mu, nu) == total // factorial(n)

    def test_module_helper(self):
        """The shared oracle answers the same query."""
        assert kronecker("[2,1]", "[2,1]", "[1^3]") == 1


class TestSymmetry:
    """Test invariance under permutation and paired transposition."""

    def test_full_symmetry(self, oracle):
        """All six orderings agree on random triples."""
        rng = random.Random(7)
        for _ in range(100):
            triple = _random_triple(rng, rng.randint(3, 10))
            values = {oracle.kronecker(*order) for order in permutations(triple)}
            assert len(values) == 1

    def test_transposition_invariance(self, oracle):
        """Transposing any two arguments leaves g unchanged."""
        rng = random.Random(11)
        for _ in range(100):
            lam, mu, nu = _random_triple(rng, rng.randint(3, 10))
            base = oracle.kronecker(lam, mu, nu)
            lt, mt, nt = lam.conjugate(), mu.conjugate(), nu.conjugate()
            assert oracle.kronecker(lt, mt, nu) == base
            assert oracle.kronecker(lt, mu, nt) == base
            assert oracle.kronecker(lam, mt, nt) == base

    def test_square_cache_matches_direct_sum(self, oracle):
        """Self-paired queries use the cached tensor square; other orders use rows."""
        lam = P(4, 3, 1)
        for nu in enumerate_partitions(8):
            assert oracle.kronecker(lam, lam, nu) == oracle.kronecker(lam, nu, lam)


class TestTensorSquare:
    """Test support and multiplicities of tensor squares."""

    def test_trivial_square(self, oracle):
        """(n) squared is (n)."""
        assert oracle.tensor_square_support(P(7)) == {P(7)}

    @pytest.mark.parametrize("n", range(2, 9))
    def test_dimension_identity(self, oracle, n):
        """sum_nu g(lambda, lambda, nu) dim(nu) = dim(lambda)^2."""
        for lam in enumerate_partitions(n):
            square = oracle.tensor_square_multiplicities(lam)
            assert sum(g * dimension(nu) for nu, g in square.items()) == dimension(lam) ** 2

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_staircase_support_is_everything(self, oracle, m):
        """Every partition of m(m+1)/2 occurs in the tensor square of rho_m."""
        assert oracle.missing_constituents(staircase(m)) == []

    @pytest.mark.slow
    def test_staircase_six(self, oracle):
        """rho_6 at n = 21."""
        assert oracle.missing_constituents(staircase(6)) == []

    def test_rho3_support(self, oracle):
        """All eleven partitions of 6."""
        assert len(oracle.tensor_square_support(staircase(3))) == 11

    def test_chopped_square_hooks(self, oracle):
        """Every hook of 15 occurs in the square of (4,4,4,3)."""
        eta = chopped_square(4)
        support = oracle.tensor_square_support(eta)
        hooks = [nu for nu in enumerate_partitions(15) if nu.durfee() == 1]
        assert len(hooks) == 15
        assert all(nu in support for nu in hooks)

    def test_missing_constituents(self):
        """Reverse-lex list of absent partitions."""
        assert missing_constituents("[2,2]") == [P(3, 1), P(2, 1, 1)]


class TestClosure:
    """Test the semigroup and vertical-sum properties on random positive pairs."""

    def test_semigroup(self, oracle):
        """(a1 + a2, b1 + b2) stays positive."""
        rng = random.Random(3)
        for _ in range(50):
            a1, b1 = _random_positive_pair(rng, oracle, rng.randint(2, 7))
            a2, b2 = _random_positive_pair(rng, oracle, rng.randint(2, 7))
            alpha = row_add(a1, a2)
            assert oracle.kronecker(alpha, alpha, row_add(b1, b2)) > 0

    def test_vertical_sum(self, oracle):
        """(a1 | a2, b1 + b2) stays positive."""
        rng = random.Random(5)
        for _ in range(50):
            a1, b1 = _random_positive_pair(rng, oracle, rng.randint(2, 6))
            a2, b2 = _random_positive_pair(rng, oracle, rng.randint(2, 6))
            alpha = vertical_sum(a1, a2)
            assert oracle.kronecker(alpha, alpha, row_add(b1, b2)) > 0


class TestGuards:
    """Test input validation and size limits."""

    def test_size_mismatch(self, oracle):
        """Unequal sizes are rejected."""
        with pytest.raises(SizeMismatchError):
            oracle.kronecker("[2,1]", "[2,1]", "[2,2]")
        with pytest.raises(SizeMismatchError):
            KroneckerQuery(P(2), P(1, 1), P(3))

    def test_query_parses_text(self):
        """Canonical text is accepted."""
        query = KroneckerQuery("[2,1]", "[3]", "[1^3]")
        assert query.n == 3
        assert query.nu == parse_partition("[1,1,1]")

    def test_max_n_guard(self):
        """Sizes above max_n need an explicit override."""
        small = KroneckerOracle(max_n=5)
        with pytest.raises(OracleLimitError):
            small.kronecker("[3,3]", "[3,3]", "[4,2]")
        with pytest.raises(OracleLimitError):
            small.tensor_square_support("[3,3]")
        assert small.kronecker("[3,3]", "[3,3]", "[4,2]", check_limit=False) == 1

    def test_clear(self):
        """Cleared caches give the same answers."""
        oracle = KroneckerOracle(max_n=10)
        first = oracle.kronecker("[3,2]", "[3,2]", "[3,1,1]")
        oracle.clear()
        assert oracle.kronecker("[3,2]", "[3,2]", "[3,1,1]") == first


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
