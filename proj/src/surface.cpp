#include "wzw/surface.hpp"

#include "wzw/errors.hpp"

#include <functional>
#include <numeric>
#include <set>

namespace wzw {

void validate_surface(const FusionAlphabet& a, const MarkedSurface& s) {
    if (s.genus < 0) throw Rejection("genus must be nonnegative, got " + std::to_string(s.genus));
    for (const auto& mu : s.labels) a.index_of(mu);
}

void validate_graph(const TrivalentGraph& g, int genus, std::size_t legs) {
    if (g.vertices <= 0) throw Rejection("graph has no vertices");
    std::set<Slot> used;
    auto use = [&](const Slot& s) {
        if (s.vertex < 0 || s.vertex >= g.vertices || s.slot < 0 || s.slot > 2)
            throw Rejection("graph slot (" + std::to_string(s.vertex) + "," + std::to_string(s.slot) +
                            ") out of range");
        if (!used.insert(s).second)
            throw Rejection("graph slot (" + std::to_string(s.vertex) + "," + std::to_string(s.slot) +
                            ") used twice");
    };
    for (const auto& [a, b] : g.edges) {
        use(a);
        use(b);
    }
    for (const auto& s : g.legs) use(s);
    if (used.size() != 3 * static_cast<std::size_t>(g.vertices)) throw Rejection("graph is not trivalent");
    if (g.legs.size() != legs)
        throw Rejection("graph has " + std::to_string(g.legs.size()) + " legs but the surface has " +
                        std::to_string(legs) + " boundary components");

    std::vector<int> parent(g.vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int components = g.vertices;
    for (const auto& [a, b] : g.edges) {
        int x = find(a.vertex), y = find(b.vertex);
        if (x != y) {
            parent[x] = y;
            --components;
        }
    }
    if (components != 1) throw Rejection("graph is disconnected");
    if (g.loop_rank() != genus)
        throw Rejection("graph has loop rank " + std::to_string(g.loop_rank()) + " but the surface has genus " +
                        std::to_string(genus));
}

TrivalentGraph canonical_graph(int genus, std::size_t legs) {
    if (genus < 0) throw Rejection("genus must be nonnegative");
    const long euler = 2L * genus - 2 + static_cast<long>(legs);
    if (euler < 1)
        throw Rejection("no pants decomposition for genus " + std::to_string(genus) + " with " +
                        std::to_string(legs) + " boundary components");
    TrivalentGraph g;
    g.legs.resize(legs);

    // A leaf is a tadpole stub (vertex index >= 0) or a leg (-1 - leg index).
    std::vector<int> leaves;
    for (int i = 0; i < genus; ++i) {
        const int t = g.vertices++;
        g.edges.push_back({{t, 0}, {t, 1}});
        leaves.push_back(t);
    }
    for (std::size_t i = 0; i < legs; ++i) leaves.push_back(-1 - static_cast<int>(i));

    auto attach = [&](int leaf, Slot at) {
        if (leaf >= 0)
            g.edges.push_back({{leaf, 2}, at});
        else
            g.legs[static_cast<std::size_t>(-1 - leaf)] = at;
    };

    const std::size_t n = leaves.size();
    if (n == 2) {
        // two tadpoles joined directly, or one tadpole carrying the leg
        if (leaves[1] >= 0)
            g.edges.push_back({{leaves[0], 2}, {leaves[1], 2}});
        else
            attach(leaves[1], {leaves[0], 2});
        return g;
    }
    const int first = g.vertices;
    const int spine = static_cast<int>(n) - 2;
    g.vertices += spine;
    attach(leaves[0], {first, 0});
    attach(leaves[1], {first, 1});
    for (int k = 1; k < spine; ++k) {
        g.edges.push_back({{first + k - 1, 2}, {first + k, 0}});
        attach(leaves[k + 1], {first + k, 1});
    }
    attach(leaves[n - 1], {first + spine - 1, 2});
    return g;
}

TrivalentGraph theta_graph() {
    TrivalentGraph g;
    g.vertices = 2;
    for (int i = 0; i < 3; ++i) g.edges.push_back({{0, i}, {1, i}});
    return g;
}

TrivalentGraph four_holed_sphere(bool t_channel) {
    TrivalentGraph g;
    g.vertices = 2;
    g.edges.push_back({{0, 2}, {1, 2}});
    if (t_channel)
        g.legs = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    else
        g.legs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    return g;
}

namespace {

std::int64_t state_sum(const FusionRing& ring, const MarkedSurface& s, const TrivalentGraph& g) {
    const FusionAlphabet& a = ring.alphabet();
    const std::size_t labels = a.size();
    std::vector<std::array<long, 3>> at(g.vertices, {-1, -1, -1});
    for (std::size_t i = 0; i < g.legs.size(); ++i)
        at[g.legs[i].vertex][g.legs[i].slot] = static_cast<long>(a.index_of(s.labels[i]));

    // Evaluate each vertex right after the last edge touching it is labelled.
    std::vector<std::vector<int>> ready(g.edges.size() + 1);
    std::vector<int> last(g.vertices, -1);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        last[g.edges[e].first.vertex] = static_cast<int>(e);
        last[g.edges[e].second.vertex] = static_cast<int>(e);
    }
    for (int v = 0; v < g.vertices; ++v) ready[last[v] + 1].push_back(v);

    auto weight = [&](int v) { return ring(at[v][0], at[v][1], at[v][2]); };

    std::function<std::int64_t(std::size_t)> rec = [&](std::size_t e) -> std::int64_t {
        std::int64_t w = 1;
        for (int v : ready[e]) {
            w *= weight(v);
            if (w == 0) return 0;
        }
        if (e == g.edges.size()) return w;
        const auto& [from, to] = g.edges[e];
        std::int64_t total = 0;
        for (std::size_t mu = 0; mu < labels; ++mu) {
            at[from.vertex][from.slot] = static_cast<long>(mu);
            at[to.vertex][to.slot] = static_cast<long>(a.dual_index(mu));
            total += rec(e + 1);
        }
        at[from.vertex][from.slot] = -1;
        at[to.vertex][to.slot] = -1;
        return w * total;
    };
    return rec(0);
}

}  // namespace

std::int64_t block_dimension(const FusionRing& ring, const MarkedSurface& s, const std::optional<TrivalentGraph>& graph) {
    const FusionAlphabet& a = ring.alphabet();
    validate_surface(a, s);
    const std::size_t n = s.labels.size();
    const bool base = (s.genus == 0 && n <= 2) || (s.genus == 1 && n == 0);
    if (base) {
        if (graph) throw Rejection("sphere, disk, cylinder and torus admit no pants decomposition");
        if (s.genus == 1) return static_cast<std::int64_t>(a.size());
        if (n == 0) return 1;
        if (n == 1) return s.labels[0].is_zero() ? 1 : 0;
        return a.dual_index(a.index_of(s.labels[0])) == a.index_of(s.labels[1]) ? 1 : 0;
    }
    if (graph) {
        validate_graph(*graph, s.genus, n);
        return state_sum(ring, s, *graph);
    }
    return state_sum(ring, s, canonical_graph(s.genus, n));
}

std::int64_t block_dimension(const FusionRing& ring, const std::vector<MarkedSurface>& components) {
    std::int64_t out = 1;
    for (const auto& c : components) out *= block_dimension(ring, c);
    return out;
}

bool decomposition_independence(const FusionRing& ring, const MarkedSurface& s, const TrivalentGraph& g1,
                                const TrivalentGraph& g2) {
    return block_dimension(ring, s, g1) == block_dimension(ring, s, g2);
}

MarkedSurface remove_trivial_labels(const MarkedSurface& s) {
    MarkedSurface out{s.genus, {}};
    for (const auto& mu : s.labels)
        if (!mu.is_zero()) out.labels.push_back(mu);
    return out;
}

Integer TwistEigenvalue::order() const {
    // exp(-i pi p/q) has order 2q / gcd(p, 2q)
    const Integer p = exponent.get_num(), q2 = 2 * exponent.get_den();
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q2.get_mpz_t());
    return q2 / g;
}

std::string TwistEigenvalue::to_string() const {
    if (exponent == 0) return "1";
    const Integer p = exponent.get_num(), q = exponent.get_den();
    std::string s = "exp(-i*pi";
    if (p != 1) s += "*" + p.get_str();
    if (q != 1) s += "/" + q.get_str();
    return s + ")";
}

std::optional<std::string> TwistEigenvalue::gaussian() const {
    if (exponent == 0) return "1";
    if (exponent == Rational(1, 2)) return "-i";
    if (exponent == 1) return "-1";
    if (exponent == Rational(3, 2)) return "i";
    return std::nullopt;
}

TwistEigenvalue dehn_twist_eigenvalue(const FusionAlphabet& a, const DominantWeight& mu) {
    a.index_of(mu);
    const RootSystem& rs = a.root_system();
    Rational r = casimir_eigenvalue(rs, mu) / (a.level() + rs.dual_coxeter());
    // reduce mod 2
    Integer whole = r.get_num() / (2 * r.get_den());
    r -= 2 * Rational(whole);
    if (r < 0) r += 2;
    return TwistEigenvalue{r};
}

Rational connection_weight(const RootSystem& rs, int level) {
    if (level < 0) throw Rejection("level must be nonnegative");
    Rational w(level * rs.dimension(), 2 * (level + rs.dual_coxeter()));
    w.canonicalize();
    return w;
}

}  // namespace wzw
