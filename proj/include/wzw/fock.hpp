#pragma once

#include "wzw/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace wzw {

// Source degrees on which a truncated operator equals the true one.
struct DegreeWindow {
    int lo = 0;
    int hi = -1;

    bool empty() const { return hi < lo; }
    bool contains(int s) const { return lo <= s && s <= hi; }
    DegreeWindow intersect(const DegreeWindow& o) const { return {std::max(lo, o.lo), std::min(hi, o.hi)}; }
    std::string to_string() const;
};

// Operator on a graded truncation, stored blockwise by source degree; the
// block for source degree s maps into degree s + shift. Targets of negative
// degree are the zero space, so those blocks have no rows.
class GradedOperator {
public:
    GradedOperator() = default;
    GradedOperator(std::vector<std::size_t> dims, int shift, DegreeWindow window);

    int shift() const { return shift_; }
    const DegreeWindow& window() const { return window_; }
    const std::vector<std::size_t>& dims() const { return dims_; }

    SparseMatrix& block(int s) { return blocks_.at(s); }
    const SparseMatrix& block(int s) const { return blocks_.at(s); }

    bool is_zero() const;
    // Largest absolute entry on the window.
    Rational max_abs() const;

    // a o b on the degrees where both are valid.
    friend GradedOperator compose(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator*(const Rational& c, const GradedOperator& a);

    static GradedOperator identity(const std::vector<std::size_t>& dims);

private:
    std::vector<std::size_t> dims_;  // basis size per degree 0..d
    int shift_ = 0;
    DegreeWindow window_;
    std::map<int, SparseMatrix> blocks_;
};

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b);

// Window of an operator lowering degree by k on a truncation at degree d:
// every source s <= d whose target s - k is also <= d.
DegreeWindow lowering_window(int k, int d);

// ---------------------------------------------------------------------------
// Oscillator Fock space: polynomials in x_1, x_2, ... with x_k of degree k.
// t^{-k} multiplies by x_k, t^k acts as k d/dx_k (k > 0), t^0 acts as 0.

using Partition = std::vector<int>;  // parts in non-increasing order

class FockBasis {
public:
    explicit FockBasis(int d);

    int degree_bound() const { return d_; }
    const std::vector<Partition>& degree(int n) const { return basis_[n]; }
    std::size_t index_of(const Partition& p) const;
    std::vector<std::size_t> dims() const;

private:
    int d_;
    std::vector<std::vector<Partition>> basis_;
    std::map<Partition, std::size_t> index_;
};

void require_degree(int k, int d);

GradedOperator oscillator_op(int k, int d);

// L_k = -C(D_k) with C(D_k) = 1/2 sum_{i+j=k} :t^i t^j:, where in :..: the
// factor with the higher index acts first.
GradedOperator virasoro_op(int k, int d);

// [L_k, L_l] - (l - k) L_{k+l} - delta_{k+l,0} (k^3 - k)/12 on the common window.
GradedOperator check_virasoro_bracket(int k, int l, int d);

// ---------------------------------------------------------------------------
// sl2 loop algebra at level l acting on the module induced from V_mu.
// Basis E, F, H (indices 0, 1, 2) with c(E, F) = 1, c(H, H) = 2.

enum Sl2 : int { kE = 0, kF = 1, kH = 2 };

// X_{r} t^{-k_r} ... X_{1} t^{-k_1} v_j with (k_1, X_1) <= ... <= (k_r, X_r).
struct Monomial {
    std::vector<std::pair<int, int>> factors;  // (k, generator), innermost first
    int j = 0;                                 // weight-basis index in V_mu

    int degree() const;
    auto operator<=>(const Monomial&) const = default;
};

using ModuleVector = std::map<Monomial, Rational>;

class InducedModule {
public:
    InducedModule(int level, int mu, int d);

    int level() const { return level_; }
    int mu() const { return mu_; }
    int degree_bound() const { return d_; }

    const std::vector<Monomial>& degree(int n) const { return basis_[n]; }
    std::size_t index_of(const Monomial& m) const { return index_.at(m); }
    std::vector<std::size_t> dims() const;
    int weight(const Monomial& m) const;  // H-eigenvalue

    // X t^n applied to a vector (exact; no truncation involved).
    ModuleVector apply(int generator, int n, const ModuleVector& v) const;

    // Matrix of X t^n, which lowers degree by n.
    GradedOperator loop_op(int generator, int n) const;

    // T_g(D_k) = -C_g(D_k) / (l + 2), C_g(D_k) = 1/2 sum_a sum_j :X_a t^{k-j} X^a t^j:.
    GradedOperator sugawara_op(int k) const;

    ModuleVector basis_vector(const Monomial& m) const { return {{m, Rational(1)}}; }

private:
    const ModuleVector& act(int generator, int n, const Monomial& m) const;

    int level_, mu_, d_;
    std::vector<std::vector<Monomial>> basis_;
    std::map<Monomial, std::size_t> index_;
    mutable std::map<std::tuple<int, int, Monomial>, ModuleVector> memo_;
};

std::unique_ptr<InducedModule> induced_module(int level, int mu, int d);

// Invariant pairing b on V_mu x V_mu, normalized by b(v_top, v_bottom) = 1.
QMatrix degree_zero_pairing(int mu);

// Quotient of the induced module by the radical of the contravariant pairing
// b(X t^n u, u') + b(u, X t^{-n} u') = 0, degree by degree. The left and right
// copies play the roles of H+ and H-.
struct QuotientDegree {
    QMatrix gram;                  // full Gram matrix in this degree
    std::vector<std::size_t> rows; // basis of the H+ quotient (pivot rows)
    std::vector<std::size_t> cols; // basis of the H- quotient (pivot columns)
    QMatrix pairing;               // gram restricted to rows x cols, invertible
    QMatrix plus_projection;       // dim x full
    QMatrix minus_projection;      // dim x full
    std::size_t dim() const { return rows.size(); }
};

class IntegrableQuotient {
public:
    explicit IntegrableQuotient(const InducedModule& module);

    const InducedModule& module() const { return module_; }
    const QuotientDegree& degree(int n) const { return degrees_[n]; }
    std::vector<std::size_t> dims() const;

    // True iff v pairs to zero with everything, i.e. lies in the maximal submodule.
    bool in_radical(const ModuleVector& v) const;

    // P+ op S+ from source degree s (target s - shift must be <= d).
    QMatrix plus_block(const GradedOperator& op, int s) const;
    QMatrix minus_block(const GradedOperator& op, int s) const;

private:
    const InducedModule& module_;
    std::vector<QuotientDegree> degrees_;
};

// eps_n = transpose inverse of the degree-n pairing between the quotients.
struct GluingTensorSeries {
    int mu = 0;
    std::vector<QMatrix> terms;
};

GluingTensorSeries gluing_tensor(const IntegrableQuotient& q);

// One named identity check and the largest absolute entry of its residual.
struct CheckResult {
    std::string name;
    DegreeWindow window;
    Rational residual_norm;
    bool pass() const { return residual_norm == 0; }
};

// (X t^n (x) 1) eps_{d+n} + (1 (x) X t^{-n}) eps_d for all generators, |n| <= nmax.
std::vector<CheckResult> check_gluing_recursion(const IntegrableQuotient& q, const GluingTensorSeries& eps, int nmax);

// eps_0 equals the transpose inverse of b on V_mu.
CheckResult check_gluing_constant_term(const GluingTensorSeries& eps);

// (T_0 (x) 1) eps_d = -(d + h) eps_d.
CheckResult check_gluing_eigenvector(const IntegrableQuotient& q, const GluingTensorSeries& eps);

// [T_k, X t^m] - m X t^{m+k}
std::vector<CheckResult> check_sugawara_derivation(const InducedModule& m, int kmax);
// [T_k, T_l] - (l - k) T_{k+l} - delta (k^3 - k)/12 * 3l/(l+2)
std::vector<CheckResult> check_sugawara_bracket(const InducedModule& m, int kmax);
// T_0 on each quotient degree d is -(d + c_mu/(2(l+2))).
std::vector<CheckResult> check_l0_spectrum(const IntegrableQuotient& q);

std::vector<CheckResult> check_virasoro_suite(int kmax, int d);

}  // namespace wzw
