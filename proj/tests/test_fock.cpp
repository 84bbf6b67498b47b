#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/fock.hpp"

using namespace wzw;

TEST_CASE("oscillator brackets") {
    const int d = 6;
    auto c = commutator(oscillator_op(1, d), oscillator_op(-1, d)) - GradedOperator::identity(FockBasis(d).dims());
    CHECK(c.is_zero());
    CHECK_FALSE(c.window().empty());
    CHECK(commutator(oscillator_op(2, d), oscillator_op(-3, d)).is_zero());
    auto c2 = commutator(oscillator_op(3, d), oscillator_op(-3, d)) - Rational(3) * GradedOperator::identity(FockBasis(d).dims());
    CHECK(c2.is_zero());
    CHECK(oscillator_op(2, d).block(0).rows() == 0);
    CHECK(oscillator_op(0, d).is_zero());
    CHECK_THROWS_AS(oscillator_op(7, d), Rejection);
    CHECK(FockBasis(12).dims().back() == 77);
}

TEST_CASE("Virasoro operators") {
    const int d = 8;
    auto l0 = virasoro_op(0, d);
    FockBasis basis(d);
    for (int n = 0; n <= d; ++n) CHECK(l0.block(n).to_dense() == Rational(-n) * QMatrix::identity(basis.degree(n).size()));
    for (int k = 0; k <= 3; ++k) CHECK(virasoro_op(k, d).block(0).is_zero());
    CHECK_FALSE(virasoro_op(-2, d).block(0).is_zero());

    // [L_2, L_-2] = -4 L_0 + 1/2
    auto r = commutator(virasoro_op(2, d), virasoro_op(-2, d)) + Rational(4) * l0 -
             Rational(1, 2) * GradedOperator::identity(basis.dims());
    CHECK(r.is_zero());
    CHECK(check_virasoro_bracket(1, -1, 6).is_zero());
    CHECK(check_virasoro_bracket(2, 3, 12).is_zero());
    CHECK(check_virasoro_bracket(3, -3, 12).is_zero());
    CHECK_THROWS_AS(check_virasoro_bracket(3, 4, 6), Rejection);

    // the opposite sign convention (k - l) does not hold
    auto wrong = commutator(virasoro_op(1, d), virasoro_op(2, d)) - Rational(1 - 2) * virasoro_op(3, d);
    CHECK_FALSE(wrong.is_zero());
}

TEST_CASE("induced module dimensions") {
    const std::size_t colored[] = {1, 3, 9, 22, 51, 108};
    for (int mu = 0; mu <= 2; ++mu) {
        InducedModule m(2, mu, 5);
        for (int n = 0; n <= 5; ++n) CHECK(m.dims()[n] == colored[n] * (mu + 1));
    }
    CHECK_THROWS_AS(InducedModule(1, 2, 3), Rejection);
}

TEST_CASE("loop algebra relations hold on the induced module") {
    InducedModule m(1, 1, 4);
    const int gens[3] = {kE, kF, kH};
    // [E t^a, F t^b] = H t^{a+b} + a delta l
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b) {
            auto lhs = commutator(m.loop_op(kE, a), m.loop_op(kF, b));
            auto rhs = m.loop_op(kH, a + b);
            if (a + b == 0) rhs = rhs + Rational(a * m.level()) * GradedOperator::identity(m.dims());
            CHECK((lhs - rhs).is_zero());
            auto hh = commutator(m.loop_op(kH, a), m.loop_op(kH, b));
            if (a + b == 0)
                CHECK((hh - Rational(2 * a * m.level()) * GradedOperator::identity(m.dims())).is_zero());
            else
                CHECK(hh.is_zero());
            CHECK((commutator(m.loop_op(kH, a), m.loop_op(kE, b)) - Rational(2) * m.loop_op(kE, a + b)).is_zero());
        }
    for (int g : gens) CHECK(m.loop_op(g, 1).block(0).rows() == 0);
}

TEST_CASE("integrable quotients") {
    {
        InducedModule m(1, 1, 4);
        IntegrableQuotient q(m);
        CHECK(q.dims() == std::vector<std::size_t>{2, 2, 6, 8, 14});
        // (E t^-1)^{1 + l - mu} v_top lies in the maximal submodule
        ModuleVector v = m.basis_vector(Monomial{{}, 0});
        CHECK_FALSE(q.in_radical(v));
        v = m.apply(kE, -1, v);
        CHECK(q.in_radical(v));
    }
    {
        InducedModule m(1, 0, 4);
        IntegrableQuotient q(m);
        CHECK(q.dims() == std::vector<std::size_t>{1, 3, 4, 7, 13});
        ModuleVector v = m.apply(kE, -1, m.apply(kE, -1, m.basis_vector(Monomial{{}, 0})));
        CHECK(q.in_radical(v));
        CHECK_FALSE(q.in_radical(m.apply(kE, -1, m.basis_vector(Monomial{{}, 0}))));
    }
    {
        InducedModule m(0, 0, 2);
        IntegrableQuotient q(m);
        CHECK(q.dims()[1] == 0);
        CHECK(q.in_radical(m.apply(kE, -1, m.basis_vector(Monomial{{}, 0}))));
    }
    for (int mu = 0; mu <= 2; ++mu) {
        InducedModule m(2, mu, 1);
        IntegrableQuotient q(m);
        CHECK(q.dims()[0] == static_cast<std::size_t>(mu + 1));
    }
}

TEST_CASE("degree-zero pairing") {
    CHECK(degree_zero_pairing(0) == QMatrix::identity(1));
    auto b = degree_zero_pairing(1);
    CHECK(b(0, 1) == 1);
    CHECK(b(1, 0) == -1);
    CHECK(b(0, 0) == 0);
}

TEST_CASE("Sugawara identities at small degree") {
    InducedModule m(1, 1, 4);
    for (const auto& c : check_sugawara_derivation(m, 2)) {
        CAPTURE(c.name);
        CHECK(c.pass());
        CHECK_FALSE(c.window.empty());
    }
    for (const auto& c : check_sugawara_bracket(m, 1)) {
        CAPTURE(c.name);
        CHECK(c.pass());
    }
    IntegrableQuotient q(m);
    for (const auto& c : check_l0_spectrum(q)) {
        CAPTURE(c.name);
        CHECK(c.pass());
    }
    // T_0 on V_mu is -c_mu / (2 (l + 2)) = -(3/2)/6
    CHECK(m.sugawara_op(0).block(0).to_dense() == Rational(-1, 4) * QMatrix::identity(2));
}

TEST_CASE("gluing tensor") {
    for (int mu = 0; mu <= 1; ++mu) {
        InducedModule m(1, mu, 4);
        IntegrableQuotient q(m);
        auto eps = gluing_tensor(q);
        CHECK(check_gluing_constant_term(eps).pass());
        for (const auto& c : check_gluing_recursion(q, eps, 2)) {
            CAPTURE(c.name);
            CHECK(c.pass());
        }
        CHECK(check_gluing_eigenvector(q, eps).pass());
    }
    // eps_0 for the trivial label is the identity
    InducedModule m0(2, 0, 0);
    CHECK(gluing_tensor(IntegrableQuotient(m0)).terms[0] == QMatrix::identity(1));
}
