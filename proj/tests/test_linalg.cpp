#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/linalg.hpp"

using namespace wzw;

namespace {
QMatrix from_rows(std::vector<std::vector<Rational>> rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}
}  // namespace

TEST_CASE("rational formatting round-trips") {
    CHECK(to_string(Rational(3, 6)) == "1/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), Rejection);
}

TEST_CASE("rank, inverse and nullspace agree") {
    auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(bareiss_rank(m) == 2);
    auto ns = nullspace(m);
    CHECK(ns.cols() == 1);
    CHECK((m * ns).is_zero());
    auto a = from_rows({{2, 1}, {Rational(1, 3), 1}});
    CHECK(a * inverse(a) == QMatrix::identity(2));
    CHECK_THROWS_AS(inverse(m), InvariantViolation);
    CHECK(independent_rows(m) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("span builder matches dense rank") {
    SpanBuilder s(4);
    CHECK(s.insert({{0, 2}, {3, Rational(1, 2)}}));
    CHECK(s.insert({{1, 1}, {3, 1}}));
    CHECK_FALSE(s.insert({{0, 4}, {1, 3}, {3, 4}}));
    CHECK(s.contains({{0, -1}, {3, Rational(-1, 4)}}));
    CHECK(s.insert({{3, 5}}));
    CHECK(s.rank() == 3);
    CHECK(s.corank() == 1);
    CHECK_FALSE(s.contains({{2, 1}}));
}

TEST_CASE("quotient space descends invariant operators") {
    // subspace spanned by e0 - e1 inside Q^3; the swap of e0,e1 preserves it
    QuotientSpace q(3, {{1, -1, 0}});
    CHECK(q.dim() == 2);
    QMatrix swap(3, 3);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    swap(2, 2) = 1;
    auto d = q.descend(swap);
    CHECK(d == QMatrix::identity(2));
    CHECK((q.projection() * q.section()) == QMatrix::identity(2));
}

TEST_CASE("sparse products match dense") {
    auto a = from_rows({{1, 0, 2}, {0, 3, 0}});
    auto b = from_rows({{1, 1}, {0, Rational(1, 3)}, {4, 0}});
    CHECK((SparseMatrix::from_dense(a) * SparseMatrix::from_dense(b)).to_dense() == a * b);
    CHECK((SparseMatrix::from_dense(a) - SparseMatrix::from_dense(a)).is_zero());
}
