#pragma once

#include "wzw/fusion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wzw {

struct MarkedSurface {
    int genus = 0;
    std::vector<DominantWeight> labels;  // one per boundary component
};

// Throws Rejection unless the genus is nonnegative and every label lies in P_l.
void validate_surface(const FusionAlphabet& a, const MarkedSurface& s);

// A slot is one of the three half-edges at a vertex.
struct Slot {
    int vertex = 0;
    int slot = 0;
    auto operator<=>(const Slot&) const = default;
};

// Pants decomposition as a trivalent graph. An internal edge labelled mu
// carries mu at `from` and mu* at `to`; legs[i] carries boundary label i.
struct TrivalentGraph {
    int vertices = 0;
    std::vector<std::pair<Slot, Slot>> edges;
    std::vector<Slot> legs;

    int loop_rank() const { return static_cast<int>(edges.size()) - vertices + 1; }
};

// Every slot used exactly once, connected, #legs and loop rank match.
void validate_graph(const TrivalentGraph& g, int genus, std::size_t legs);

// Caterpillar: a chain of vertices whose leaves are g tadpoles followed by the
// n legs. Only defined when 2g - 2 + n >= 1.
TrivalentGraph canonical_graph(int genus, std::size_t legs);

// Two vertices joined by three edges (closed genus 2).
TrivalentGraph theta_graph();

// Four-holed sphere in the (01)(23) or (02)(13) channel.
TrivalentGraph four_holed_sphere(bool t_channel);

// Sum over internal edge labellings of the product of vertex fusion
// coefficients. The sphere, disk, cylinder and torus are base cases and
// take no graph.
std::int64_t block_dimension(const FusionRing& ring, const MarkedSurface& s,
                             const std::optional<TrivalentGraph>& graph = std::nullopt);

// Disjoint union: product over the components.
std::int64_t block_dimension(const FusionRing& ring, const std::vector<MarkedSurface>& components);

bool decomposition_independence(const FusionRing& ring, const MarkedSurface& s, const TrivalentGraph& g1,
                                const TrivalentGraph& g2);

MarkedSurface remove_trivial_labels(const MarkedSurface& s);

// Eigenvalue exp(-i pi r) with r = c_mu / (l + h) reduced into [0, 2).
struct TwistEigenvalue {
    Rational exponent;

    bool operator==(const TwistEigenvalue& o) const { return exponent == o.exponent; }

    // Multiplicative order of the root of unity.
    Integer order() const;
    // "1", "exp(-i*pi/2)", "exp(-i*pi*5/3)", ...
    std::string to_string() const;
    // Exact value in Z[i] when the order divides 4: "1", "-i", "-1", "i".
    std::optional<std::string> gaussian() const;
};

TwistEigenvalue dehn_twist_eigenvalue(const FusionAlphabet& a, const DominantWeight& mu);

// l dim(g) / (2 (l + h))
Rational connection_weight(const RootSystem& rs, int level);

}  // namespace wzw
