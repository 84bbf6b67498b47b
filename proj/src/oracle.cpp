#include "wzw/oracle.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <set>

namespace wzw {

RepMatrices sl2_irrep_matrices(int m) {
    if (m < 0) throw Rejection("sl2 label must be nonnegative, got " + std::to_string(m));
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    RepMatrices r{m, QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
    for (int j = 0; j <= m; ++j) {
        r.h(j, j) = m - 2 * j;
        if (j >= 1) r.e(j - 1, j) = m - j + 1;
        if (j + 1 <= m) r.f(j + 1, j) = j + 1;
    }
    return r;
}

LieAction Sl2Provider::action(int label) const {
    RepMatrices r = sl2_irrep_matrices(label);
    // c = E (x) F + F (x) E + 1/2 H (x) H for the trace form on sl2.
    LieAction a{{r.e, r.f, r.h}, {r.f, r.e, Rational(1, 2) * r.h}, r.e, {}};
    for (int j = 0; j <= label; ++j) a.weights.push_back({label - 2 * j});
    return a;
}

// ---------------------------------------------------------------------------

TensorSpace::TensorSpace(std::vector<std::size_t> dims) : dims_(std::move(dims)), stride_(dims_.size()) {
    for (std::size_t i = dims_.size(); i-- > 0;) {
        stride_[i] = total_;
        total_ *= dims_[i];
    }
}

SparseMatrix TensorSpace::local(std::size_t i, const QMatrix& op) const {
    SparseMatrix out(total_, total_);
    const std::size_t d = dims_[i], s = stride_[i];
    for (std::size_t col = 0; col < total_; ++col) {
        const std::size_t a = (col / s) % d;
        const std::size_t base = col - a * s;
        for (std::size_t b = 0; b < d; ++b)
            if (op(b, a) != 0) out.add(base + b * s, col, op(b, a));
    }
    return out;
}

SparseMatrix TensorSpace::diagonal_sum(const std::vector<QMatrix>& ops, const std::vector<Rational>& coeffs) const {
    SparseMatrix out(total_, total_);
    for (std::size_t i = 0; i < dims_.size(); ++i)
        if (coeffs[i] != 0) out = out + coeffs[i] * local(i, ops[i]);
    return out;
}

SparseMatrix TensorSpace::kronecker(const std::vector<QMatrix>& ops) const {
    SparseMatrix out = SparseMatrix::identity(total_);
    for (std::size_t i = 0; i < dims_.size(); ++i) out = local(i, ops[i]) * out;
    return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::map<std::size_t, Rational>> columns(const SparseMatrix& m) {
    std::vector<std::map<std::size_t, Rational>> cols(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) cols[c][r] = v;
    return cols;
}

QMatrix power(const QMatrix& a, int p) {
    QMatrix out = QMatrix::identity(a.rows());
    for (int i = 0; i < p; ++i) out = out * a;
    return out;
}

std::vector<std::size_t> dims_of(const std::vector<int>& labels) {
    std::vector<std::size_t> d;
    for (int m : labels) d.push_back(static_cast<std::size_t>(m) + 1);
    return d;
}

}  // namespace

std::vector<std::map<std::size_t, Rational>> diagonal_action_images(const TensorSpace& space,
                                                                    const std::vector<LieAction>& actions) {
    std::vector<std::map<std::size_t, Rational>> out;
    if (actions.empty()) return out;
    const std::size_t gdim = actions.front().basis.size();
    for (std::size_t a = 0; a < gdim; ++a) {
        std::vector<QMatrix> ops;
        for (const auto& act : actions) ops.push_back(act.basis[a]);
        auto cols = columns(space.diagonal_sum(ops, std::vector<Rational>(actions.size(), 1)));
        for (auto& c : cols)
            if (!c.empty()) out.push_back(std::move(c));
    }
    return out;
}

RankReport three_point_rank(int level, int m1, int m2, int m3) {
    const std::vector<int> labels{m1, m2, m3};
    for (int m : labels) {
        if (m < 0) throw Rejection("sl2 label must be nonnegative, got " + std::to_string(m));
        if (m > level)
            throw Rejection("label " + std::to_string(m) + " is not in P_" + std::to_string(level));
    }
    TensorSpace space(dims_of(labels));
    Sl2Provider provider;
    std::vector<LieAction> actions;
    for (int m : labels) actions.push_back(provider.action(m));

    SpanBuilder span(space.dim());
    for (const auto& v : diagonal_action_images(space, actions)) span.insert(v);
    RankReport report;
    report.classical_rank = span.corank();

    // E^p vanishes on V_m for p > m, so p, q, r are bounded by the labels.
    for (int p = 0; p <= m1; ++p)
        for (int q = 0; q <= m2; ++q)
            for (int r = 0; r <= m3; ++r) {
                if (p + q + r <= level) continue;
                auto op = space.kronecker({power(actions[0].highest_root_vector, p),
                                           power(actions[1].highest_root_vector, q),
                                           power(actions[2].highest_root_vector, r)});
                for (const auto& c : columns(op))
                    if (!c.empty()) span.insert(c);
            }
    report.rank = span.corank();
    return report;
}

void validate_problem(const CoinvariantProblem& problem) {
    if (problem.level < 0) throw Rejection("level must be nonnegative");
    if (problem.points.size() != problem.labels.size())
        throw Rejection("need exactly one point per label (" + std::to_string(problem.labels.size()) + " labels, " +
                        std::to_string(problem.points.size()) + " points)");
    for (int m : problem.labels) {
        if (m < 0) throw Rejection("sl2 label must be nonnegative, got " + std::to_string(m));
        if (m > problem.level)
            throw Rejection("label " + std::to_string(m) + " is not in P_" + std::to_string(problem.level));
    }
    std::set<Rational> seen;
    for (const auto& z : problem.points)
        if (!seen.insert(z).second) throw Rejection("coincident points at z = " + to_string(z));
}

RankReport npoint_block_rank(const CoinvariantProblem& problem) {
    validate_problem(problem);
    TensorSpace space(dims_of(problem.labels));
    Sl2Provider provider;
    std::vector<LieAction> actions;
    for (int m : problem.labels) actions.push_back(provider.action(m));

    SpanBuilder span(space.dim());
    for (const auto& v : diagonal_action_images(space, actions)) span.insert(v);
    RankReport report;
    report.classical_rank = span.corank();

    if (!problem.labels.empty()) {
        std::vector<QMatrix> xs;
        for (const auto& a : actions) xs.push_back(a.highest_root_vector);
        const SparseMatrix y = space.diagonal_sum(xs, problem.points);
        SparseMatrix p = SparseMatrix::identity(space.dim());
        for (int i = 0; i <= problem.level; ++i) p = y * p;
        for (const auto& c : columns(p))
            if (!c.empty()) span.insert(c);
    }
    report.rank = span.corank();
    return report;
}

bool propagation_check(int level, const std::vector<int>& labels, const std::vector<Rational>& points,
                       std::optional<Rational> fresh_point) {
    CoinvariantProblem base{level, labels, points};
    const auto before = npoint_block_rank(base);
    Rational z;
    if (fresh_point) {
        z = *fresh_point;
    } else if (std::find(points.begin(), points.end(), Rational(0)) == points.end()) {
        z = 0;
    } else {
        Rational big = 0;
        for (const auto& p : points) big = std::max(big, Rational(abs(p)));
        z = big + 1;
    }
    CoinvariantProblem extended = base;
    extended.labels.push_back(0);
    extended.points.push_back(z);
    return npoint_block_rank(extended).rank == before.rank;
}

}  // namespace wzw
