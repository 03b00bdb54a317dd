#include "dinv/linalg.hpp"
#include "dinv/randomgen.hpp"

#include <doctest.h>

using namespace dinv;

namespace {

QMat col(std::initializer_list<int> vals)
{
    QMat m(int(vals.size()), 1);
    int i = 0;
    for (int v : vals)
        m(i++, 0) = v;
    return m;
}

QMat random_matrix(Rng& rng, int rows, int cols, int lo = -3, int hi = 3)
{
    QMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rng.range(lo, hi);
    return m;
}

} // namespace

TEST_CASE("rational parsing keeps values canonical")
{
    CHECK(rat_parse("2/4") == rat_frac(1, 2));
    CHECK(rat_parse("-6/3") == Rat(-2));
    CHECK(rat_str(rat_parse("2/4")) == "1/2");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_parse("3/-6") == rat_frac(-1, 2));  // denominator made positive
    CHECK_THROWS(rat_parse(""));
    CHECK_THROWS(rat_parse("x"));
    CHECK_THROWS(rat_parse("1/0"));

    Rng rng(2);
    for (int i = 0; i < 30; ++i) {
        Rat r = rat_frac(rng.range(-20, 20), rng.range(1, 12));
        CHECK(rat_parse(rat_str(r)) == r);
        CHECK(r.get_den() > 0);
        Int g;
        mpz_gcd(g.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
        CHECK((g == 1 || r == 0));
    }
}

TEST_CASE("rank_and_solve on the identity")
{
    auto res = rank_and_solve(QMat::identity(3), col({1, 2, 3}));
    CHECK(res.rank == 3);
    REQUIRE(res.solution.has_value());
    CHECK(*res.solution == col({1, 2, 3}));
    CHECK(res.kernel_basis.empty());
}

TEST_CASE("rank_and_solve on a rank-1 system")
{
    QMat a(2, 2, {Rat(1), Rat(2), Rat(2), Rat(4)});
    auto res = rank_and_solve(a, col({1, 2}));
    CHECK(res.rank == 1);
    REQUIRE(res.solution.has_value());
    CHECK(a * *res.solution == col({1, 2}));
    REQUIRE(res.kernel_basis.size() == 1);
    CHECK(res.kernel_basis[0] == col({-2, 1}));
}

TEST_CASE("rank_and_solve detects inconsistency")
{
    auto res = rank_and_solve(QMat::zero(2, 2), col({1, 0}));
    CHECK(res.rank == 0);
    CHECK(!res.solution.has_value());
}

TEST_CASE("rank_and_solve solutions are exact on random systems")
{
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.range(1, 5), cols = rng.range(1, 5);
        QMat a = random_matrix(rng, rows, cols);
        QMat x0 = random_matrix(rng, cols, 1);
        QMat b = a * x0;  // guaranteed consistent
        auto res = rank_and_solve(a, b);
        REQUIRE(res.solution.has_value());
        CHECK(a * *res.solution == b);
        for (const QMat& k : res.kernel_basis)
            CHECK((a * k).is_zero());
        CHECK(int(res.kernel_basis.size()) == cols - res.rank);
    }
}

TEST_CASE("inverse")
{
    CHECK(*inverse(QMat::identity(4)) == QMat::identity(4));

    QMat two(1, 1, {Rat(2)});
    QMat half(1, 1, {Rat(1, 2)});
    CHECK(*inverse(two) == half);

    QMat ones(2, 2, {Rat(1), Rat(1), Rat(1), Rat(1)});
    CHECK(!inverse(ones).has_value());
}

TEST_CASE("inverse is two-sided on random invertible matrices")
{
    Rng rng(11);
    int found = 0;
    while (found < 20) {
        int n = rng.range(1, 4);
        QMat a = random_matrix(rng, n, n);
        auto ai = inverse(a);
        if (!ai)
            continue;
        ++found;
        CHECK(a * *ai == QMat::identity(n));
        CHECK(*ai * a == QMat::identity(n));
    }
}

TEST_CASE("left_kernel annihilates and has full corank")
{
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int rows = rng.range(1, 5), cols = rng.range(1, 5);
        QMat a = random_matrix(rng, rows, cols);
        QMat q = left_kernel(a);
        CHECK((q * a).is_zero());
        CHECK(q.rows() == rows - rank(a));
        if (q.rows() > 0)
            CHECK(rank(q) == q.rows());
    }
}

TEST_CASE("determinant matches elimination structure")
{
    QMat a(2, 2, {Rat(1), Rat(2), Rat(3), Rat(4)});
    CHECK(determinant(a) == Rat(-2));
    CHECK(determinant(QMat::identity(3)) == Rat(1));
    CHECK(determinant(QMat::zero(2, 2)) == Rat(0));
}
