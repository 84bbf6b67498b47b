#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/fusion.hpp"
#include "wzw/oracle.hpp"

using namespace wzw;

TEST_CASE("sl2 irreps satisfy the bracket relations") {
    for (int m = 0; m <= 5; ++m) {
        auto r = sl2_irrep_matrices(m);
        CHECK(commutator(r.h, r.e) == Rational(2) * r.e);
        CHECK(commutator(r.h, r.f) == Rational(-2) * r.f);
        CHECK(commutator(r.e, r.f) == r.h);
        QMatrix p = QMatrix::identity(m + 1);
        for (int i = 0; i < m; ++i) p = p * r.e;
        CHECK_FALSE(p.is_zero());
        CHECK((p * r.e).is_zero());
    }
    auto r1 = sl2_irrep_matrices(1);
    CHECK(r1.e(0, 1) == 1);
    CHECK(r1.h(1, 1) == -1);
    CHECK(sl2_irrep_matrices(0).e.is_zero());
}

TEST_CASE("three-point ranks") {
    CHECK(three_point_rank(1, 1, 1, 0).rank == 1);
    CHECK(three_point_rank(1, 1, 1, 1).rank == 0);
    auto r = three_point_rank(2, 2, 2, 2);
    CHECK(r.rank == 0);
    CHECK(r.classical_rank == 1);
    CHECK(three_point_rank(2, 1, 1, 2).rank == 1);
    CHECK_THROWS_AS(three_point_rank(1, 2, 0, 0), Rejection);
}

TEST_CASE("three-point ranks equal Kac-Walton fusion up to level 4") {
    RootSystem a1('A', 1);
    for (int l = 0; l <= 4; ++l) {
        auto a = alphabet(a1, l);
        for (int i = 0; i <= l; ++i)
            for (int j = 0; j <= l; ++j)
                for (int k = 0; k <= l; ++k)
                    CHECK(static_cast<std::int64_t>(three_point_rank(l, i, j, k).rank) ==
                          fusion_coeff(a, DominantWeight({i}), DominantWeight({j}), DominantWeight({k})));
    }
}

TEST_CASE("n-point block ranks") {
    CHECK(npoint_block_rank({1, {1, 1}, {1, -1}}).rank == 1);
    CHECK(npoint_block_rank({1, {1, 0}, {1, -1}}).rank == 0);
    CHECK(npoint_block_rank({1, {1, 0}, {5, 2}}).rank == 0);
    auto four = npoint_block_rank({1, {1, 1, 1, 1}, {3, 1, -1, -3}});
    CHECK(four.classical_rank == 2);
    CHECK(four.rank == 1);
    CHECK(npoint_block_rank({2, {1, 1, 1, 1}, {3, 1, -1, -3}}).rank == 2);
    CHECK(npoint_block_rank({1, {0}, {0}}).rank == 1);
    CHECK_THROWS_AS(npoint_block_rank({1, {1, 1}, {2, 2}}), Rejection);
    CHECK_THROWS_AS(npoint_block_rank({1, {2, 1}, {2, 1}}), Rejection);
}

TEST_CASE("propagation of vacua") {
    CHECK(propagation_check(1, {1, 1}, {1, -1}, Rational(0)));
    CHECK(propagation_check(2, {2, 2}, {Rational(1, 2), 7}));
    CHECK(propagation_check(1, {}, {}));
    CHECK(propagation_check(2, {1, 1, 2}, {0, 1, -1}));
}

TEST_CASE("translation does not change ranks") {
    CoinvariantProblem p{2, {2, 1, 1, 2}, {0, 1, 3, -4}};
    auto base = npoint_block_rank(p).rank;
    for (auto& z : p.points) z += Rational(7, 3);
    CHECK(npoint_block_rank(p).rank == base);
}
