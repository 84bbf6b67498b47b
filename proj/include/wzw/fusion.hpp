#pragma once

#include "wzw/liealg.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wzw {

// P_l: dominant weights of level <= l, sorted lexicographically.
class FusionAlphabet {
public:
    FusionAlphabet(RootSystem rs, int level);

    const RootSystem& root_system() const { return rs_; }
    int level() const { return level_; }
    const std::vector<DominantWeight>& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }

    bool contains(const DominantWeight& mu) const;
    // Throws Rejection for labels outside P_l.
    std::size_t index_of(const DominantWeight& mu) const;
    // Index of mu*.
    std::size_t dual_index(std::size_t i) const { return dual_[i]; }

private:
    RootSystem rs_;
    int level_;
    std::vector<DominantWeight> labels_;
    std::vector<std::size_t> dual_;
};

FusionAlphabet alphabet(const RootSystem& rs, int level);

// Fusion product V_lambda x V_mu truncated at level l (Kac-Walton): the
// classical tensor-product weights reflected into the affine alcove at
// level l + h^vee; weights on a wall contribute zero.
TensorDecomposition fusion_product(const FusionAlphabet& a, const DominantWeight& lambda, const DominantWeight& mu);

// N_{lambda mu nu} = N_{lambda mu}^{nu*}, the dimension of the three-point block.
std::int64_t fusion_coeff(const FusionAlphabet& a, const DominantWeight& lambda, const DominantWeight& mu,
                          const DominantWeight& nu);

class FusionRing {
public:
    explicit FusionRing(FusionAlphabet a, std::vector<std::int64_t> coeffs);

    const FusionAlphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return alphabet_.size(); }

    // Symmetric coefficient by label index.
    std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const { return n_[(i * size() + j) * size() + k]; }

    // Nonzero coefficients with i <= j <= k.
    std::vector<std::pair<std::array<std::size_t, 3>, std::int64_t>> nonzero_sorted() const;

    // Runs unit, duality, symmetry and associativity checks. Returns a
    // description of the first violation, or nullopt.
    std::optional<std::string> find_axiom_violation() const;

private:
    FusionAlphabet alphabet_;
    std::vector<std::int64_t> n_;
};

// Computes every coefficient and verifies the ring axioms; throws
// InvariantViolation naming the axiom and witness labels on failure.
FusionRing fusion_table(const FusionAlphabet& a);

}  // namespace wzw
