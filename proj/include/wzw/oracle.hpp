#pragma once

#include "wzw/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace wzw {

// Weight-basis matrices of the (m+1)-dimensional irreducible sl2-module.
// Basis v_j (j = 0..m) has H-eigenvalue m - 2j; E raises, F lowers.
struct RepMatrices {
    int m = 0;
    QMatrix e, f, h;
};

RepMatrices sl2_irrep_matrices(int m);

// A representation of g given by matrices for a basis {X_a} together with the
// dual basis {X^a} under the normalized form, so that c = sum_a X_a (x) X^a.
struct LieAction {
    std::vector<QMatrix> basis;
    std::vector<QMatrix> dual_basis;
    QMatrix highest_root_vector;
    // Weight of each basis vector of the representation, for splitting off
    // the weight-zero part when forming coinvariants.
    std::vector<std::vector<std::int64_t>> weights;
};

// Source of representation matrices for the labels of a genus-zero problem.
// Only sl2 is provided; other types plug in here.
class RepMatrixProvider {
public:
    virtual ~RepMatrixProvider() = default;
    virtual LieAction action(int label) const = 0;
    virtual int dual_coxeter() const = 0;
    virtual int max_label(int level) const = 0;  // labels 0..max_label(level) lie in P_level
};

class Sl2Provider final : public RepMatrixProvider {
public:
    LieAction action(int label) const override;
    int dual_coxeter() const override { return 2; }
    int max_label(int level) const override { return level; }
};

// Operators on V_1 (x) ... (x) V_n. Basis index is mixed-radix with the first
// factor most significant.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<std::size_t> dims);

    std::size_t dim() const { return total_; }
    std::size_t factors() const { return dims_.size(); }
    std::size_t factor_dim(std::size_t i) const { return dims_[i]; }

    // op acting on factor i, identity elsewhere.
    SparseMatrix local(std::size_t i, const QMatrix& op) const;
    // sum_i coeffs[i] * op_i acting on factor i
    SparseMatrix diagonal_sum(const std::vector<QMatrix>& ops, const std::vector<Rational>& coeffs) const;
    // op_1 (x) ... (x) op_n
    SparseMatrix kronecker(const std::vector<QMatrix>& ops) const;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> stride_;
    std::size_t total_ = 1;
};

struct CoinvariantProblem {
    int level = 0;
    std::vector<int> labels;
    std::vector<Rational> points;
};

struct RankReport {
    std::size_t rank = 0;            // block dimension
    std::size_t classical_rank = 0;  // dim of the g-coinvariants
};

// Biggest quotient of V_1 (x) V_2 (x) V_3 killed by g and by all
// E^p (x) E^q (x) E^r with p + q + r > level.
RankReport three_point_rank(int level, int m1, int m2, int m3);

// Quotient of the g-coinvariants of V_1 (x) ... (x) V_n by the image of
// (sum_i z_i E^(i))^(1 + level).
RankReport npoint_block_rank(const CoinvariantProblem& problem);

// True iff adding a trivial label at a fresh point leaves the rank unchanged.
// When no point is given, 0 is used if free, otherwise 1 + max |z_i|.
bool propagation_check(int level, const std::vector<int>& labels, const std::vector<Rational>& points,
                       std::optional<Rational> fresh_point = std::nullopt);

// Span of images of the diagonal g-action on the tensor product, as sparse
// column vectors; shared with kz.
std::vector<std::map<std::size_t, Rational>> diagonal_action_images(const TensorSpace& space,
                                                                    const std::vector<LieAction>& actions);

void validate_problem(const CoinvariantProblem& problem);

}  // namespace wzw
