#include "doctest.h"
#include "wzw/errors.hpp"
#include "wzw/surface.hpp"

using namespace wzw;

namespace {
DominantWeight a1(int m) { return DominantWeight({m}); }

MarkedSurface surf(int g, std::vector<int> ms) {
    MarkedSurface s{g, {}};
    for (int m : ms) s.labels.push_back(a1(m));
    return s;
}

FusionRing ring(const char* name, int l) { return fusion_table(alphabet(RootSystem::parse(name), l)); }
}  // namespace

TEST_CASE("canonical graphs are valid") {
    for (int g = 0; g <= 3; ++g)
        for (std::size_t n = 0; n <= 4; ++n) {
            if (2 * g - 2 + static_cast<int>(n) < 1) {
                CHECK_THROWS_AS(canonical_graph(g, n), Rejection);
                continue;
            }
            auto gr = canonical_graph(g, n);
            CHECK_NOTHROW(validate_graph(gr, g, n));
            CHECK(gr.vertices == 2 * g - 2 + static_cast<int>(n));
        }
    CHECK_NOTHROW(validate_graph(theta_graph(), 2, 0));
    CHECK_THROWS_AS(validate_graph(theta_graph(), 1, 0), Rejection);
    CHECK_THROWS_AS(validate_graph(theta_graph(), 2, 1), Rejection);
    TrivalentGraph broken = theta_graph();
    broken.edges.pop_back();
    CHECK_THROWS_AS(validate_graph(broken, 1, 0), Rejection);
}

TEST_CASE("base cases") {
    for (int l = 0; l <= 4; ++l) {
        auto r = ring("A1", l);
        CHECK(block_dimension(r, surf(1, {})) == l + 1);
        CHECK(block_dimension(r, surf(0, {})) == 1);
        for (int m = 0; m <= l; ++m) {
            CHECK(block_dimension(r, surf(0, {m})) == (m == 0 ? 1 : 0));
            for (int k = 0; k <= l; ++k) CHECK(block_dimension(r, surf(0, {m, k})) == (m == k ? 1 : 0));
        }
    }
    // base cases agree with their stabilizations by trivial legs
    auto r2 = fusion_table(alphabet(RootSystem('A', 2), 2));
    const auto& labels = r2.alphabet().labels();
    MarkedSurface torus_plus{1, {labels[0]}};
    CHECK(block_dimension(r2, torus_plus) == block_dimension(r2, MarkedSurface{1, {}}));
    for (const auto& mu : labels)
        for (const auto& nu : labels) {
            MarkedSurface cyl{0, {mu, nu}}, stab{0, {mu, nu, labels[0]}};
            CHECK(block_dimension(r2, cyl) == block_dimension(r2, stab));
            CHECK(block_dimension(r2, cyl) == (nu == dual_weight(RootSystem('A', 2), mu) ? 1 : 0));
        }
    CHECK_THROWS_AS(block_dimension(ring("A1", 1), surf(1, {}), theta_graph()), Rejection);
    CHECK_THROWS_AS(block_dimension(ring("A1", 1), surf(0, {2, 0, 0})), Rejection);
}

TEST_CASE("genus two and pants-decomposition independence") {
    auto r = ring("A1", 1);
    MarkedSurface g2 = surf(2, {});
    CHECK(block_dimension(r, g2, theta_graph()) == 4);
    CHECK(block_dimension(r, g2, canonical_graph(2, 0)) == 4);
    CHECK(decomposition_independence(r, g2, theta_graph(), canonical_graph(2, 0)));
    for (int l = 0; l <= 4; ++l) {
        auto rl = ring("A1", l);
        CHECK(decomposition_independence(rl, g2, theta_graph(), canonical_graph(2, 0)));
        // sl2 at genus 2: binomial(l + 3, 3)
        CHECK(block_dimension(rl, g2) == (l + 1) * (l + 2) * (l + 3) / 6);
    }
}

TEST_CASE("genus one, one trivial leg: tadpole vs two-leg graphs") {
    for (int l = 0; l <= 3; ++l) {
        auto r = ring("A1", l);
        CHECK(block_dimension(r, surf(1, {0})) == l + 1);
        // Two inequivalent genus-1 graphs with two legs: both legs on the loop
        // (canonical caterpillar) or both on a stub hanging off the loop.
        TrivalentGraph loop_legs;
        loop_legs.vertices = 2;
        loop_legs.edges = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
        loop_legs.legs = {{0, 2}, {1, 2}};
        MarkedSurface s = surf(1, {0, 0});
        CHECK(decomposition_independence(r, s, loop_legs, canonical_graph(1, 2)));
        CHECK(block_dimension(r, s, loop_legs) == l + 1);
    }
}

TEST_CASE("four-holed sphere channels agree") {
    for (int l = 0; l <= 3; ++l) {
        auto r = ring("A1", l);
        for (int a = 0; a <= l; ++a)
            for (int b = 0; b <= l; ++b)
                for (int c = 0; c <= l; ++c)
                    for (int d = 0; d <= l; ++d)
                        CHECK(decomposition_independence(r, surf(0, {a, b, c, d}), four_holed_sphere(false),
                                                         four_holed_sphere(true)));
    }
}

TEST_CASE("factorization and propagation") {
    for (int l = 0; l <= 3; ++l) {
        auto r = ring("A1", l);
        for (int g = 1; g <= 2; ++g)
            for (int m = 0; m <= l; ++m) {
                auto s = surf(g, {m});
                std::int64_t sum = 0;
                for (int mu = 0; mu <= l; ++mu) sum += block_dimension(r, surf(g - 1, {m, mu, mu}));
                CHECK(block_dimension(r, s) == sum);
                CHECK(block_dimension(r, surf(g, {m, 0})) == block_dimension(r, s));
            }
    }
    auto r = ring("A1", 2);
    CHECK(block_dimension(r, surf(0, {0, 0, 0})) == 1);
    CHECK(remove_trivial_labels(surf(0, {0, 0, 0})).labels.empty());
    CHECK(remove_trivial_labels(surf(1, {0})).labels.empty());
    auto stripped = remove_trivial_labels(surf(0, {2, 0}));
    CHECK(stripped.labels == std::vector<DominantWeight>{a1(2)});
    CHECK(block_dimension(r, stripped) == 0);
}

TEST_CASE("disconnected surfaces multiply") {
    auto r = ring("A1", 2);
    CHECK(block_dimension(r, std::vector<MarkedSurface>{surf(1, {}), surf(2, {})}) == 3 * 10);
}

TEST_CASE("Dehn twists") {
    auto a = alphabet(RootSystem('A', 1), 1);
    auto t = dehn_twist_eigenvalue(a, a1(1));
    CHECK(t.exponent == Rational(1, 2));
    CHECK(t.to_string() == "exp(-i*pi/2)");
    CHECK(t.gaussian() == std::optional<std::string>("-i"));
    CHECK(t.order() == 4);
    auto z = dehn_twist_eigenvalue(a, a1(0));
    CHECK(z.exponent == 0);
    CHECK(z.to_string() == "1");
    auto a2 = alphabet(RootSystem('A', 1), 2);
    CHECK(dehn_twist_eigenvalue(a2, a1(2)).exponent == 1);
    CHECK(dehn_twist_eigenvalue(a2, a1(2)).gaussian() == std::optional<std::string>("-1"));
    CHECK_THROWS_AS(dehn_twist_eigenvalue(a, a1(2)), Rejection);

    RootSystem sl3('A', 2);
    for (int l = 0; l <= 2; ++l) {
        auto al = alphabet(sl3, l);
        for (const auto& mu : al.labels()) {
            auto e = dehn_twist_eigenvalue(al, mu);
            CHECK(e.exponent >= 0);
            CHECK(e.exponent < 2);
            CHECK(e == dehn_twist_eigenvalue(al, dual_weight(sl3, mu)));
            CHECK(Rational(6 * (l + 3) * e.exponent).get_den() == 1);
        }
    }
    CHECK(dehn_twist_eigenvalue(alphabet(sl3, 1), DominantWeight({1, 0})).to_string() == "exp(-i*pi*2/3)");
}

TEST_CASE("connection weights") {
    CHECK(connection_weight(RootSystem('A', 1), 1) == Rational(1, 2));
    CHECK(connection_weight(RootSystem('A', 2), 1) == 1);
    CHECK(connection_weight(RootSystem('E', 8), 0) == 0);
}
