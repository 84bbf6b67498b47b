#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/kz.hpp"

#include <cmath>
#include <numbers>

using namespace wzw;

namespace {

std::vector<Rational> pts(std::initializer_list<int> xs) {
    std::vector<Rational> out;
    for (int x : xs) out.emplace_back(x);
    return out;
}

// Eigenvalues of a 2x2 complex matrix.
std::pair<Complex, Complex> eig2(const CMatrix& m) {
    const Complex tr = m[0][0] + m[1][1];
    const Complex det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const Complex disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

KZPath circle(const std::vector<Complex>& base, int moving, Complex centre, double radius, int sides) {
    KZPath p;
    p.closed = true;
    const Complex start = base[moving] - centre;
    for (int k = 0; k < sides; ++k) {
        auto w = base;
        w[moving] = centre + start * std::polar(1.0, 2 * std::numbers::pi * k / sides) * (radius / std::abs(start));
        p.waypoints.push_back(w);
    }
    return p;
}

}  // namespace

TEST_CASE("pair Casimir on V1 (x) V1") {
    const QMatrix c = casimir_pair_matrix({1, 1}, 0, 1);
    Rational tr = 0;
    for (std::size_t i = 0; i < 4; ++i) tr += c(i, i);
    CHECK(tr == 0);
    // (c - 1/2)(c + 3/2) = 0 with trace 0 forces multiplicities 3 and 1.
    const QMatrix id = QMatrix::identity(4);
    CHECK(((c - Rational(1, 2) * id) * (c + Rational(3, 2) * id)).is_zero());
    CHECK_FALSE((c - Rational(1, 2) * id).is_zero());
    CHECK(casimir_pair_matrix({1, 1}, 1, 0) == c);
    CHECK_THROWS_AS(casimir_pair_matrix({1, 1}, 0, 0), Rejection);
    CHECK_THROWS_AS(casimir_pair_matrix({1, 1}, 0, 2), Rejection);
}

TEST_CASE("pair Casimir is the difference of Casimirs on each channel") {
    // On V_a (x) V_b, 2c^(12) = C_total - C_a - C_b with C_m = m(m+2)/2.
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            const QMatrix c = casimir_pair_matrix({a, b}, 0, 1);
            QMatrix prod = QMatrix::identity(c.rows());
            for (int m = std::abs(a - b); m <= a + b; m += 2) {
                Rational v(m * (m + 2) - a * (a + 2) - b * (b + 2), 4);
                v.canonicalize();
                prod = prod * (c - v * QMatrix::identity(c.rows()));
            }
            CHECK(prod.is_zero());
        }
}

TEST_CASE("KZ matrices on small coinvariants") {
    auto s = kz_system(1, {1, 1});
    REQUIRE(s.dim() == 1);
    CHECK(s.A(0, 1)(0, 0) == Rational(1, 2));

    auto t = kz_system(1, {1, 1, 0});
    REQUIRE(t.dim() == 1);
    CHECK(t.A(0, 2).is_zero());
    CHECK(t.A(1, 2).is_zero());
    CHECK(t.A(0, 1)(0, 0) == Rational(1, 2));

    CHECK(kz_system(2, {1, 1, 1, 1}).dim() == 2);
    CHECK(kz_system(1, {1, 0}).dim() == 0);
    CHECK_THROWS_AS(kz_system(1, {2, 0}), Rejection);
    CHECK_THROWS_AS(kz_system(1, {1}), Rejection);
    CHECK_THROWS_AS(kz_system(1, {-1, 1}), Rejection);
}

TEST_CASE("Kohno relations hold for n <= 4, level <= 3") {
    int systems = 0;
    for (int level = 0; level <= 3; ++level)
        for (int n = 2; n <= 4; ++n) {
            std::vector<int> labels(n, 0);
            while (true) {
                auto s = kz_system(level, labels);
                auto bad = find_kohno_violation(s);
                INFO("level " << level << " n " << n);
                CHECK_FALSE(bad.has_value());
                CHECK(total_casimir_check(s));
                ++systems;
                int k = 0;
                while (k < n && labels[k] == level) labels[k++] = 0;
                if (k == n) break;
                ++labels[k];
            }
        }
    CHECK(systems > 300);
}

TEST_CASE("translation invariance") {
    auto s = kz_system(2, {1, 1, 2, 2});
    CHECK(translation_contraction(s, pts({0, 1, 3, 7})).is_zero());
    auto t = kz_system(3, {1, 2, 3, 2});
    std::vector<Rational> z{Rational(1, 3), Rational(-2), Rational(5, 7), Rational(4)};
    CHECK(translation_contraction(t, z).is_zero());
    CHECK_THROWS_AS(connection_component(s, pts({0, 1, 1, 7}), 0), Rejection);
}

TEST_CASE("level subbundle is preserved by the connection") {
    auto s = kz_system(1, {1, 1, 1, 1});
    CHECK(s.dim() == 2);
    const auto z = pts({0, 1, 3, -2});
    CHECK(level_kernel(s, z).cols() == 1);  // block rank 1 at level 1
    CHECK(truncation_invariance_check(s, z));

    auto t = kz_system(2, {2, 2, 2, 2});
    std::vector<Rational> w{Rational(0), Rational(1), Rational(5, 2), Rational(-3)};
    CHECK(truncation_invariance_check(t, w));
    // Fusion gives 2 x 2 = 0 at level 2, so one block.
    CHECK(t.dim() - level_kernel(t, w).cols() == 1);
    CHECK(t.dim() - level_kernel(t, w).cols() == npoint_block_rank({2, {2, 2, 2, 2}, w}).rank);
}

TEST_CASE("transport: constant path and contractible loop") {
    auto s = kz_system(2, {1, 1, 2});
    KZPath still{{{Complex(0), Complex(1), Complex(3)}}, false};
    auto r = parallel_transport(s, still, 200);
    CHECK(distance_to_identity(r.matrix) < 1e-14);

    // z1 circles a point away from z2, z3.
    auto loop = circle({Complex(-2, 0), Complex(1), Complex(3)}, 0, Complex(-2, 1), 0.5, 48);
    auto lr = parallel_transport(s, loop, 2000);
    CHECK(lr.converged);
    CHECK(distance_to_identity(lr.matrix) < 1e-8);

    CHECK_THROWS_AS(parallel_transport(s, still, 50), Rejection);
    KZPath through{{{Complex(-1), Complex(1), Complex(3)}, {Complex(2), Complex(1), Complex(3)}}, false};
    CHECK_THROWS_AS(parallel_transport(s, through, 400), Rejection);
}

TEST_CASE("transport: homotopic paths agree, RK4 order") {
    auto s = kz_system(2, {1, 1, 1, 1});
    std::vector<Complex> a{Complex(0), Complex(1), Complex(3), Complex(6)};
    std::vector<Complex> b{Complex(0, 1), Complex(1), Complex(3), Complex(6)};
    KZPath direct{{a, b}, false};
    auto mid = a;
    mid[0] = Complex(-0.5, 0.4);
    KZPath bent{{a, mid, b}, false};
    auto r1 = parallel_transport(s, direct, 1000);
    auto r2 = parallel_transport(s, bent, 1000);
    CHECK(r1.converged);
    CHECK(distance(r1.matrix, r2.matrix) < 1e-8);
    CHECK(observed_order(s, bent, 100) >= 3.5);
}

TEST_CASE("local monodromy of z1 around z2") {
    // Spins 0 and 1 in V1 (x) V1 give A_12 = 3/8 and -1/8 at level 2.
    auto s = kz_system(2, {1, 1, 1, 1});
    auto loop = circle({Complex(0.5), Complex(0), Complex(2), Complex(5)}, 0, Complex(0), 0.5, 64);
    auto r = parallel_transport(s, loop, 4000);
    CHECK(r.converged);
    auto [e1, e2] = eig2(r.matrix);
    const Complex x = std::polar(1.0, 2 * std::numbers::pi * 3 / 8);
    const Complex y = std::polar(1.0, -2 * std::numbers::pi / 8);
    const bool match = (std::abs(e1 - x) < 1e-6 && std::abs(e2 - y) < 1e-6) ||
                       (std::abs(e1 - y) < 1e-6 && std::abs(e2 - x) < 1e-6);
    CHECK(match);
}
