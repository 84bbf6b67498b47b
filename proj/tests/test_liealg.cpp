#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/liealg.hpp"

#include <algorithm>
#include <array>
#include <functional>

using namespace wzw;

namespace {

DominantWeight dw(Weight w) { return DominantWeight(std::move(w)); }

// Half the adjoint Casimir of sl_n with the trace form, computed from explicit
// matrices: sum_a [X_a, [X^a, Y]] = 2 h Y.
Rational sl_n_dual_coxeter(std::size_t n) {
    std::vector<QMatrix> basis, dual;
    auto unit = [n](std::size_t i, std::size_t j) {
        QMatrix m(n, n);
        m(i, j) = 1;
        return m;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                basis.push_back(unit(i, j));
                dual.push_back(unit(j, i));
            }
    // Cartan part: H_i = e_ii - e_{i+1,i+1}; dual basis via inverse Gram.
    std::vector<QMatrix> hs;
    for (std::size_t i = 0; i + 1 < n; ++i) hs.push_back(unit(i, i) - unit(i + 1, i + 1));
    QMatrix gram(hs.size(), hs.size());
    for (std::size_t a = 0; a < hs.size(); ++a)
        for (std::size_t b = 0; b < hs.size(); ++b) {
            auto p = hs[a] * hs[b];
            for (std::size_t k = 0; k < n; ++k) gram(a, b) += p(k, k);
        }
    auto ginv = inverse(gram);
    for (std::size_t a = 0; a < hs.size(); ++a) {
        QMatrix d(n, n);
        for (std::size_t b = 0; b < hs.size(); ++b) d = d + ginv(a, b) * hs[b];
        basis.push_back(hs[a]);
        dual.push_back(d);
    }
    const QMatrix y = unit(0, n - 1);
    QMatrix acc(n, n);
    for (std::size_t a = 0; a < basis.size(); ++a) acc = acc + commutator(basis[a], commutator(dual[a], y));
    return acc(0, n - 1) / 2;
}

// G2 roots in the plane x+y+z=0: short e_i - e_j, long +-(2e_i - e_j - e_k).
// With the form scaled so long roots have length^2 2, sum over roots of
// (alpha, theta)^2 equals 4h.
Rational g2_dual_coxeter_from_roots() {
    std::vector<std::array<int, 3>> roots;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::array<int, 3> r{0, 0, 0};
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
        }
    for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
            std::array<int, 3> r{-s, -s, -s};
            r[i] = 2 * s;
            roots.push_back(r);
        }
    const std::array<int, 3> theta{2, -1, -1};
    Rational sum = 0;
    for (const auto& r : roots) {
        Rational ip(r[0] * theta[0] + r[1] * theta[1] + r[2] * theta[2], 3);
        sum += ip * ip;
    }
    return sum / 4;
}

}  // namespace

TEST_CASE("dual Coxeter numbers against independent oracles") {
    CHECK(RootSystem('A', 1).dual_coxeter() == sl_n_dual_coxeter(2));
    CHECK(RootSystem('A', 2).dual_coxeter() == sl_n_dual_coxeter(3));
    CHECK(sl_n_dual_coxeter(2) == 2);
    CHECK(sl_n_dual_coxeter(3) == 3);
    CHECK(g2_dual_coxeter_from_roots() == 4);
    CHECK(RootSystem('G', 2).dual_coxeter() == 4);
}

TEST_CASE("every supported type satisfies the normalization and adjoint identity") {
    const std::vector<std::pair<char, int>> types{{'A', 1}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4},
                                                  {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4}, {'G', 2}};
    const std::map<std::string, int> table{{"A1", 2},  {"A3", 4}, {"B2", 3}, {"B3", 5}, {"C3", 4},  {"D4", 6},
                                           {"D5", 8}, {"E6", 12}, {"E7", 18}, {"E8", 30}, {"F4", 9}, {"G2", 4}};
    for (auto [s, r] : types) {
        RootSystem rs(s, r);
        CAPTURE(rs.name());
        CHECK(rs.form(rs.highest_root(), rs.highest_root()) == 2);
        CHECK(casimir_eigenvalue(rs, dw(rs.highest_root())) == 2 * rs.dual_coxeter());
        CHECK(rs.dual_coxeter() == table.at(rs.name()));
        // Sigma over all roots of (alpha, theta)^2 = 4h
        Rational sum = 0;
        for (const auto& a : rs.positive_roots()) sum += 2 * rs.form(a, rs.highest_root()) * rs.form(a, rs.highest_root());
        CHECK(sum == 4 * rs.dual_coxeter());
    }
    CHECK(RootSystem('E', 8).dimension() == 248);
}

TEST_CASE("invalid types are rejected with a reason") {
    CHECK_THROWS_AS(RootSystem('B', 1), Rejection);
    CHECK_THROWS_AS(RootSystem('D', 3), Rejection);
    CHECK_THROWS_AS(RootSystem('E', 9), Rejection);
    CHECK_THROWS_AS(RootSystem('X', 2), Rejection);
    CHECK_THROWS_AS(RootSystem::parse("A0"), Rejection);
    CHECK(RootSystem::parse("G2").rank() == 2);
    try {
        RootSystem('D', 3);
    } catch (const Rejection& e) {
        CHECK(std::string(e.what()).find("D") != std::string::npos);
    }
}

TEST_CASE("A1 and A2 data") {
    RootSystem a1('A', 1), a2('A', 2);
    CHECK(a1.highest_root() == Weight{2});
    CHECK(a1.form({1}, {1}) == Rational(1, 2));
    CHECK(casimir_eigenvalue(a1, dw({0})) == 0);
    CHECK(casimir_eigenvalue(a1, dw({1})) == Rational(3, 2));
    CHECK(casimir_eigenvalue(a2, dw({1, 1})) == 6);
    for (int m = 0; m < 6; ++m) CHECK(level_of(a1, dw({m})) == m);
    CHECK(level_of(a2, dw({1, 1})) == 2);
    CHECK(dual_weight(a2, dw({1, 0})) == dw({0, 1}));
    CHECK(dual_weight(a2, dw({1, 1})) == dw({1, 1}));
    CHECK(dual_weight(a1, dw({3})) == dw({3}));
    CHECK(weyl_dim(a2, dw({1, 1})) == 8);
    CHECK(weyl_dim(a2, dw({0, 0})) == 1);
    for (int m = 0; m < 6; ++m) CHECK(weyl_dim(a1, dw({m})) == m + 1);
    CHECK_THROWS_AS(require_dominant(a2, {1, -1}), Rejection);
    CHECK_THROWS_AS(DominantWeight({-1}), Rejection);
}

TEST_CASE("weight multiplicities") {
    RootSystem a1('A', 1), a2('A', 2);
    CHECK(weight_multiplicities(a1, dw({2})) == WeightDiagram{{{-2}, 1}, {{0}, 1}, {{2}, 1}});
    auto adj = weight_multiplicities(a2, dw({1, 1}));
    CHECK(adj.at({0, 0}) == 2);
    CHECK(weight_multiplicities(a2, dw({0, 0})) == WeightDiagram{{{0, 0}, 1}});
    for (const char* name : {"A2", "B2", "G2", "C3"}) {
        RootSystem rs = RootSystem::parse(name);
        Weight w(rs.rank(), 0);
        w[0] = 1;
        w.back() += 1;
        auto diag = weight_multiplicities(rs, dw(w));
        Integer total = 0;
        for (const auto& [wt, m] : diag) {
            total += m;
            for (int i = 0; i < rs.rank(); ++i) CHECK(diag.at(rs.reflect(wt, i)) == m);
        }
        CHECK(total == weyl_dim(rs, dw(w)));
    }
}

namespace {
// Character-product oracle: multiply formal characters, then peel off the
// character of the highest remaining dominant weight.
TensorDecomposition character_oracle(const RootSystem& rs, const DominantWeight& a, const DominantWeight& b) {
    WeightDiagram prod;
    for (const auto& [w1, m1] : weight_multiplicities(rs, a))
        for (const auto& [w2, m2] : weight_multiplicities(rs, b)) {
            Weight w(w1.size());
            for (std::size_t i = 0; i < w.size(); ++i) w[i] = w1[i] + w2[i];
            prod[w] += m1 * m2;
        }
    TensorDecomposition out;
    auto height = [&](const Weight& w) { return rs.form(w, rs.rho()); };
    while (true) {
        const Weight* best = nullptr;
        for (const auto& [w, m] : prod)
            if (m != 0 && std::all_of(w.begin(), w.end(), [](auto c) { return c >= 0; }))
                if (!best || height(w) > height(*best)) best = &w;
        if (!best) break;
        const Weight top = *best;
        const auto mult = prod[top];
        out[dw(top)] += mult;
        for (const auto& [w, m] : weight_multiplicities(rs, dw(top))) prod[w] -= mult * m;
    }
    return out;
}
}  // namespace

TEST_CASE("tensor products agree with the character oracle") {
    RootSystem a1('A', 1), a2('A', 2);
    CHECK(tensor_decompose(a1, dw({1}), dw({1})) == TensorDecomposition{{dw({0}), 1}, {dw({2}), 1}});
    CHECK(tensor_decompose(a1, dw({3}), dw({0})) == TensorDecomposition{{dw({3}), 1}});
    CHECK(tensor_decompose(a2, dw({1, 0}), dw({0, 1})) == TensorDecomposition{{dw({0, 0}), 1}, {dw({1, 1}), 1}});
    for (const char* name : {"A2", "B2", "G2"}) {
        RootSystem rs = RootSystem::parse(name);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 1; ++j)
                for (int k = 0; k <= 1; ++k) {
                    DominantWeight mu(Weight{i, j}), nu(Weight{k, 1 - k});
                    auto d = tensor_decompose(rs, mu, nu);
                    CHECK(d == character_oracle(rs, mu, nu));
                    CHECK(d == tensor_decompose(rs, nu, mu));
                    Integer total = 0;
                    for (const auto& [lam, m] : d) total += m * weyl_dim(rs, lam);
                    CHECK(total == weyl_dim(rs, mu) * weyl_dim(rs, nu));
                    TensorDecomposition dualized;
                    for (const auto& [lam, m] : d) dualized[dual_weight(rs, lam)] += m;
                    CHECK(tensor_decompose(rs, dual_weight(rs, mu), dual_weight(rs, nu)) == dualized);
                }
    }
}

TEST_CASE("Casimir denominators") {
    // Denominator at most 3 holds for these types up to level 6 ...
    for (const char* name : {"A1", "A2", "B2", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = RootSystem::parse(name);
        Weight w(rs.rank(), 0);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == rs.rank()) {
                DominantWeight mu(w);
                if (level_of(rs, mu) > 6) return;
                const Rational c = casimir_eigenvalue(rs, mu);
                CAPTURE(to_string(mu));
                CHECK(c.get_den() <= 3);
                CHECK(Rational(6 * c).get_den() == 1);
                CHECK((c == 0) == mu.is_zero());
                return;
            }
            for (int c = 0; c <= 6; ++c) {
                w[pos] = c;
                rec(pos + 1);
            }
            w[pos] = 0;
        };
        rec(0);
    }
    // ... but not in general.
    CHECK(casimir_eigenvalue(RootSystem('A', 3), dw({1, 0, 0})) == Rational(15, 4));
    CHECK(casimir_eigenvalue(RootSystem('B', 3), dw({0, 0, 1})) == Rational(21, 4));
    CHECK(casimir_eigenvalue(RootSystem('A', 1), dw({1})) * 3 == Rational(9, 2));
}
