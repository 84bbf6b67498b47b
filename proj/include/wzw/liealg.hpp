#pragma once

#include "wzw/linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wzw {

// Integral weight in fundamental-weight coordinates.
using Weight = std::vector<std::int64_t>;

// Dominant integral weight: all coordinates nonnegative.
class DominantWeight {
public:
    DominantWeight() = default;
    explicit DominantWeight(Weight coords);

    const Weight& coords() const { return coords_; }
    std::size_t rank() const { return coords_.size(); }
    bool is_zero() const;

    auto operator<=>(const DominantWeight&) const = default;

private:
    Weight coords_;
};

std::string to_string(const Weight& w);
std::string to_string(const DominantWeight& w);

// Cartan data for a simple Lie algebra. The invariant form is normalized so
// that long roots have squared length 2.
class RootSystem {
public:
    // Accepts A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6-8, F4, G2.
    RootSystem(char series, int rank);

    // "A1", "G2", "E8", ...
    static RootSystem parse(const std::string& name);

    char series() const { return series_; }
    int rank() const { return rank_; }
    std::string name() const;

    // cartan(i, j) = <alpha_i, alpha_j^vee>; row i holds the coordinates of
    // alpha_i in the fundamental-weight basis.
    const std::vector<std::vector<std::int64_t>>& cartan_matrix() const { return cartan_; }
    // Gram matrix of the invariant form on fundamental weights.
    const QMatrix& form_matrix() const { return form_; }

    const Weight& highest_root() const { return theta_; }
    Weight rho() const { return Weight(rank_, 1); }
    int dual_coxeter() const { return dual_coxeter_; }
    int dimension() const { return rank_ + 2 * static_cast<int>(positive_roots_.size()); }

    // Positive roots in fundamental-weight coordinates.
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const Weight& simple_root(int i) const { return cartan_[i]; }

    Rational form(const Weight& a, const Weight& b) const;

    // s_i(x) = x - x_i alpha_i
    Weight reflect(const Weight& x, int i) const;

    // Reflects x into the closed dominant chamber. Returns the length parity of
    // the Weyl element used (+1 or -1).
    int to_dominant(Weight& x) const;

    bool operator==(const RootSystem& o) const { return series_ == o.series_ && rank_ == o.rank_; }

private:
    char series_;
    int rank_;
    std::vector<std::vector<std::int64_t>> cartan_;
    QMatrix form_;
    Weight theta_;
    int dual_coxeter_ = 0;
    std::vector<Weight> positive_roots_;
};

// Map highest weight -> multiplicity.
using TensorDecomposition = std::map<DominantWeight, std::int64_t>;
using WeightDiagram = std::map<Weight, std::int64_t>;

// Throws Rejection unless mu is dominant and of the right rank.
void require_dominant(const RootSystem& rs, const Weight& mu);

// c(mu, mu + 2 rho)
Rational casimir_eigenvalue(const RootSystem& rs, const DominantWeight& mu);

// mu(theta^vee) = form(mu, theta)
std::int64_t level_of(const RootSystem& rs, const DominantWeight& mu);

// -w0(mu)
DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& mu);

Integer weyl_dim(const RootSystem& rs, const DominantWeight& mu);

// Freudenthal recursion.
WeightDiagram weight_multiplicities(const RootSystem& rs, const DominantWeight& mu);

// Racah-Speiser/Klimyk: reflect mu + wt(nu) + rho into the dominant chamber.
TensorDecomposition tensor_decompose(const RootSystem& rs, const DominantWeight& mu, const DominantWeight& nu);

}  // namespace wzw
