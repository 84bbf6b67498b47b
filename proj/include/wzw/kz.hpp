#pragma once

#include "wzw/oracle.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace wzw {

// c^(i,j) = sum_a X_a^(i) X^a^(j) on V_1 (x) ... (x) V_n. Indices are 0-based.
QMatrix casimir_pair_matrix(const std::vector<int>& labels, int i, int j,
                            const RepMatrixProvider& provider = Sl2Provider());

// KZ matrices A_ij = -c^(i,j)/(l + h) descended to the classical coinvariants
// (V_1 (x) ... (x) V_n)_g.
struct KZSystem {
    int level = 0;
    int dual_coxeter = 2;
    std::vector<int> labels;
    std::size_t ambient_dim = 0;
    QMatrix projection;  // dim x ambient
    QMatrix section;     // ambient x dim
    std::map<std::pair<int, int>, QMatrix> a;          // i < j, on the quotient
    std::map<std::pair<int, int>, SparseMatrix> a_ambient;  // same, before descending
    std::vector<LieAction> actions;

    std::size_t dim() const { return projection.rows(); }
    // Symmetric access.
    const QMatrix& A(int i, int j) const;
};

KZSystem kz_system(int level, const std::vector<int>& labels, const RepMatrixProvider& provider = Sl2Provider());

// First failing Kohno relation, or nullopt:
//   [A_ij, A_ik + A_jk] = 0 for distinct i, j, k;  [A_ij, A_kl] = 0 for disjoint pairs.
std::optional<std::string> find_kohno_violation(const KZSystem& s);
bool flatness_check(const KZSystem& s);

// sum_{i<j} A_ij commutes with every A_kl.
bool total_casimir_check(const KZSystem& s);

// Omega_i(z) = sum_{j != i} A_ij / (z_i - z_j) on the quotient.
QMatrix connection_component(const KZSystem& s, const std::vector<Rational>& z, int i);

// sum_i Omega_i(z), which must vanish.
QMatrix translation_contraction(const KZSystem& s, const std::vector<Rational>& z);

// Image of (sum_i z_i X^(i))^(1+l) in the coinvariants: the subbundle cut out
// by the level condition. Returned as a basis (columns) in quotient coordinates.
QMatrix level_kernel(const KZSystem& s, const std::vector<Rational>& z);

// The level subbundle is preserved by the flat sections of d - Omega, checked
// exactly at the point z: for every ambient v and every i,
//   d/dz_i (P_z v) - Omega_i P_z v  lies in  gV + im P_z.
bool truncation_invariance_check(const KZSystem& s, const std::vector<Rational>& z);

// ---------------------------------------------------------------------------

using Complex = std::complex<double>;
using CMatrix = std::vector<std::vector<Complex>>;

// Piecewise-linear path: waypoints[w][i] is z_i at waypoint w.
struct KZPath {
    std::vector<std::vector<Complex>> waypoints;
    bool closed = false;
};

struct TransportResult {
    CMatrix matrix;
    std::size_t steps = 0;
    double error_estimate = 0;
    bool converged = false;
};

// RK4 for Y' = (sum_{i<j} A_ij (z_i' - z_j') / (z_i - z_j)) Y, Y(0) = 1.
// `steps` is the total step count over the whole path; the error estimate
// compares against a run with twice as many steps.
TransportResult parallel_transport(const KZSystem& s, const KZPath& path, std::size_t steps,
                                   double tolerance = 1e-6);

// log2 of successive step-halving differences at N, 2N, 4N.
double observed_order(const KZSystem& s, const KZPath& path, std::size_t steps);

double distance_to_identity(const CMatrix& m);
double distance(const CMatrix& a, const CMatrix& b);

}  // namespace wzw
