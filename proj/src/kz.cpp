#include "wzw/kz.hpp"

#include "wzw/errors.hpp"

#include <cmath>
#include <set>

namespace wzw {

namespace {

std::vector<std::size_t> dims_of(const std::vector<int>& labels) {
    std::vector<std::size_t> d;
    for (int m : labels) d.push_back(static_cast<std::size_t>(m) + 1);
    return d;
}

std::vector<LieAction> actions_for(const std::vector<int>& labels, const RepMatrixProvider& provider) {
    std::vector<LieAction> out;
    for (int m : labels) {
        if (m < 0) throw Rejection("labels must be nonnegative, got " + std::to_string(m));
        out.push_back(provider.action(m));
    }
    return out;
}

SparseMatrix pair_casimir(const TensorSpace& space, const std::vector<LieAction>& actions, int i, int j) {
    SparseMatrix c(space.dim(), space.dim());
    const auto& ai = actions[i];
    const auto& aj = actions[j];
    for (std::size_t a = 0; a < ai.basis.size(); ++a)
        c = c + space.local(i, ai.basis[a]) * space.local(j, aj.dual_basis[a]);
    return c;
}

void check_pair(std::size_t n, int i, int j) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
        throw Rejection("factor index out of range (n = " + std::to_string(n) + ")");
    if (i == j) throw Rejection("c^(i,j) needs two distinct factors");
}

// Weight of each ambient basis vector (mixed radix, first factor most significant).
std::vector<std::vector<std::int64_t>> ambient_weights(const TensorSpace& space, const std::vector<LieAction>& actions) {
    std::vector<std::vector<std::int64_t>> out(space.dim());
    for (std::size_t idx = 0; idx < space.dim(); ++idx) {
        std::size_t rem = idx;
        std::vector<std::int64_t> w;
        for (std::size_t f = space.factors(); f-- > 0;) {
            const std::size_t d = space.factor_dim(f);
            const auto& wf = actions[f].weights[rem % d];
            rem /= d;
            if (w.empty()) w.assign(wf.size(), 0);
            for (std::size_t r = 0; r < wf.size(); ++r) w[r] += wf[r];
        }
        out[idx] = std::move(w);
    }
    return out;
}

bool is_zero_weight(const std::vector<std::int64_t>& w) {
    return std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; });
}

// P * column c of m, where P has nonzero columns only where `proj` says.
std::vector<Rational> project_column(const QMatrix& proj, const std::map<std::size_t, Rational>& col) {
    std::vector<Rational> out(proj.rows());
    for (const auto& [r, v] : col)
        for (std::size_t q = 0; q < proj.rows(); ++q)
            if (proj(q, r) != 0) out[q] += v * proj(q, r);
    return out;
}

std::vector<std::map<std::size_t, Rational>> sparse_columns(const SparseMatrix& m) {
    std::vector<std::map<std::size_t, Rational>> cols(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) cols[c][r] = v;
    return cols;
}

Rational inverse_of(int x) {
    Rational r(1, x);
    r.canonicalize();
    return r;
}

}  // namespace

QMatrix casimir_pair_matrix(const std::vector<int>& labels, int i, int j, const RepMatrixProvider& provider) {
    check_pair(labels.size(), i, j);
    const auto actions = actions_for(labels, provider);
    TensorSpace space(dims_of(labels));
    return pair_casimir(space, actions, i, j).to_dense();
}

const QMatrix& KZSystem::A(int i, int j) const {
    check_pair(labels.size(), i, j);
    return a.at({std::min(i, j), std::max(i, j)});
}

KZSystem kz_system(int level, const std::vector<int>& labels, const RepMatrixProvider& provider) {
    if (level < 0) throw Rejection("level must be nonnegative");
    if (labels.size() < 2) throw Rejection("the KZ system needs at least two points");
    for (int m : labels)
        if (m > provider.max_label(level))
            throw Rejection("label " + std::to_string(m) + " is not in P_" + std::to_string(level));

    KZSystem s;
    s.level = level;
    s.dual_coxeter = provider.dual_coxeter();
    s.labels = labels;
    s.actions = actions_for(labels, provider);
    TensorSpace space(dims_of(labels));
    s.ambient_dim = space.dim();

    // Every vector of nonzero weight lies in hV, so V_g = V_0 / (gV)_0.
    const auto weights = ambient_weights(space, s.actions);
    std::vector<std::size_t> zero;
    std::vector<long> zero_pos(space.dim(), -1);
    for (std::size_t i = 0; i < space.dim(); ++i)
        if (is_zero_weight(weights[i])) {
            zero_pos[i] = static_cast<long>(zero.size());
            zero.push_back(i);
        }
    std::vector<std::vector<Rational>> spanning;
    for (const auto& col : diagonal_action_images(space, s.actions)) {
        if (zero_pos[col.begin()->first] < 0) continue;
        std::vector<Rational> row(zero.size());
        for (const auto& [r, v] : col) row[zero_pos[r]] = v;
        spanning.push_back(std::move(row));
    }
    QuotientSpace q(zero.size(), spanning);
    s.projection = QMatrix(q.dim(), space.dim());
    s.section = QMatrix(space.dim(), q.dim());
    for (std::size_t r = 0; r < q.dim(); ++r)
        for (std::size_t c = 0; c < zero.size(); ++c) {
            s.projection(r, zero[c]) = q.projection()(r, c);
            s.section(zero[c], r) = q.section()(c, r);
        }

    const Rational scale = -inverse_of(level + s.dual_coxeter);
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(labels.size()); ++j) {
            SparseMatrix amb = scale * pair_casimir(space, s.actions, i, j);
            const auto cols = sparse_columns(amb);
            QMatrix down(q.dim(), q.dim());
            for (std::size_t b = 0; b < q.dim(); ++b) {
                std::size_t src = 0;
                for (std::size_t k = 0; k < space.dim(); ++k)
                    if (s.section(k, b) != 0) src = k;
                const auto v = project_column(s.projection, cols[src]);
                for (std::size_t r = 0; r < q.dim(); ++r) down(r, b) = v[r];
            }
            s.a.emplace(std::make_pair(i, j), std::move(down));
            s.a_ambient.emplace(std::make_pair(i, j), std::move(amb));
        }
    return s;
}

std::optional<std::string> find_kohno_violation(const KZSystem& s) {
    const int n = static_cast<int>(s.labels.size());
    auto pair = [](int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (!commutator(s.A(i, j), s.A(i, k) + s.A(j, k)).is_zero())
                    return "[A" + pair(i, j) + ", A" + pair(i, k) + " + A" + pair(j, k) + "] != 0";
                for (int l = k + 1; l < n; ++l) {
                    if (l == i || l == j) continue;
                    if (!commutator(s.A(i, j), s.A(k, l)).is_zero())
                        return "[A" + pair(i, j) + ", A" + pair(k, l) + "] != 0";
                }
            }
    return std::nullopt;
}

bool flatness_check(const KZSystem& s) { return !find_kohno_violation(s).has_value(); }

bool total_casimir_check(const KZSystem& s) {
    QMatrix total(s.dim(), s.dim());
    for (const auto& [ij, m] : s.a) total = total + m;
    for (const auto& [ij, m] : s.a)
        if (!commutator(total, m).is_zero()) return false;
    return true;
}

namespace {

void check_points(const KZSystem& s, const std::vector<Rational>& z) {
    if (z.size() != s.labels.size()) throw Rejection("need exactly one point per label");
    std::set<Rational> seen(z.begin(), z.end());
    if (seen.size() != z.size()) throw Rejection("points must be pairwise distinct");
}

}  // namespace

QMatrix connection_component(const KZSystem& s, const std::vector<Rational>& z, int i) {
    check_points(s, z);
    QMatrix out(s.dim(), s.dim());
    for (int j = 0; j < static_cast<int>(z.size()); ++j)
        if (j != i) out = out + Rational(1 / (z[i] - z[j])) * s.A(i, j);
    return out;
}

QMatrix translation_contraction(const KZSystem& s, const std::vector<Rational>& z) {
    QMatrix out(s.dim(), s.dim());
    for (int i = 0; i < static_cast<int>(z.size()); ++i) out = out + connection_component(s, z, i);
    return out;
}

namespace {

struct LevelOperators {
    std::vector<SparseMatrix> y_powers;  // Y^0 .. Y^N
    std::vector<SparseMatrix> x_local;   // X^(i)
};

LevelOperators level_operators(const KZSystem& s, const std::vector<Rational>& z) {
    TensorSpace space(dims_of(s.labels));
    LevelOperators ops;
    std::vector<QMatrix> xs;
    for (const auto& a : s.actions) xs.push_back(a.highest_root_vector);
    const SparseMatrix y = space.diagonal_sum(xs, z);
    ops.y_powers.push_back(SparseMatrix::identity(space.dim()));
    for (int p = 1; p <= s.level + 1; ++p) ops.y_powers.push_back(y * ops.y_powers.back());
    for (std::size_t i = 0; i < xs.size(); ++i) ops.x_local.push_back(space.local(i, xs[i]));
    return ops;
}

}  // namespace

QMatrix level_kernel(const KZSystem& s, const std::vector<Rational>& z) {
    check_points(s, z);
    const auto ops = level_operators(s, z);
    std::vector<std::vector<Rational>> rows;
    for (const auto& col : sparse_columns(ops.y_powers.back())) {
        auto v = project_column(s.projection, col);
        if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x != 0; })) rows.push_back(std::move(v));
    }
    QMatrix m(rows.size(), s.dim());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c) m(r, c) = rows[r][c];
    return m.select_rows(independent_rows(m)).transpose();
}

bool truncation_invariance_check(const KZSystem& s, const std::vector<Rational>& z) {
    check_points(s, z);
    const auto ops = level_operators(s, z);
    const int big_n = s.level + 1;
    const SparseMatrix& p = ops.y_powers.back();
    const std::size_t n = s.labels.size();

    SpanBuilder kernel(s.dim());
    auto to_vec = [](const std::vector<Rational>& v) {
        SpanBuilder::Vector out;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) out[i] = v[i];
        return out;
    };
    const auto p_cols = sparse_columns(p);
    for (const auto& col : p_cols) kernel.insert(to_vec(project_column(s.projection, col)));

    for (std::size_t i = 0; i < n; ++i) {
        // d/dz_i Y^N = sum_{a+b=N-1} Y^a X^(i) Y^b
        SparseMatrix dp(s.ambient_dim, s.ambient_dim);
        for (int a = 0; a < big_n; ++a) dp = dp + ops.y_powers[a] * ops.x_local[i] * ops.y_powers[big_n - 1 - a];
        SparseMatrix omega(s.ambient_dim, s.ambient_dim);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) {
                const auto& aij = s.a_ambient.at({std::min(i, j), std::max(i, j)});
                omega = omega + Rational(1 / (z[i] - z[j])) * aij;
            }
        const SparseMatrix lhs = dp - omega * p;
        for (const auto& col : sparse_columns(lhs))
            if (!kernel.contains(to_vec(project_column(s.projection, col)))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

using CM = CMatrix;

CM zeros(std::size_t n) { return CM(n, std::vector<Complex>(n)); }

CM eye(std::size_t n) {
    CM m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

CM mul(const CM& a, const CM& b) {
    const std::size_t n = a.size();
    CM c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != Complex(0))
                for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

CM axpy(const CM& y, Complex s, const CM& x) {
    CM out = y;
    for (std::size_t i = 0; i < y.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) out[i][j] += s * x[i][j];
    return out;
}

struct NumericSystem {
    std::size_t dim;
    std::vector<std::pair<std::pair<int, int>, CM>> a;
};

NumericSystem numeric(const KZSystem& s) {
    NumericSystem ns{s.dim(), {}};
    for (const auto& [ij, m] : s.a) {
        CM c = zeros(s.dim());
        for (std::size_t r = 0; r < s.dim(); ++r)
            for (std::size_t k = 0; k < s.dim(); ++k) c[r][k] = m(r, k).get_d();
        ns.a.emplace_back(ij, std::move(c));
    }
    return ns;
}

CM rhs(const NumericSystem& ns, const std::vector<Complex>& z, const std::vector<Complex>& dz) {
    CM m = zeros(ns.dim);
    for (const auto& [ij, a] : ns.a) {
        const auto [i, j] = ij;
        m = axpy(m, (dz[i] - dz[j]) / (z[i] - z[j]), a);
    }
    return m;
}

std::vector<std::vector<std::vector<Complex>>> segments(const KZPath& path) {
    std::vector<std::vector<Complex>> pts = path.waypoints;
    if (path.closed && !pts.empty()) pts.push_back(pts.front());
    std::vector<std::vector<std::vector<Complex>>> out;
    for (std::size_t w = 0; w + 1 < pts.size(); ++w) out.push_back({pts[w], pts[w + 1]});
    return out;
}

void validate_path(const KZSystem& s, const KZPath& path) {
    if (path.waypoints.empty()) throw Rejection("path has no waypoints");
    for (const auto& w : path.waypoints)
        if (w.size() != s.labels.size())
            throw Rejection("each waypoint needs " + std::to_string(s.labels.size()) + " points");
    for (const auto& seg : segments(path)) {
        for (std::size_t i = 0; i < s.labels.size(); ++i)
            for (std::size_t j = i + 1; j < s.labels.size(); ++j) {
                // min over t in [0,1] of |a + b t|
                const Complex a = seg[0][i] - seg[0][j];
                const Complex b = (seg[1][i] - seg[1][j]) - a;
                double t = std::norm(b) == 0 ? 0 : -std::real(std::conj(b) * a) / std::norm(b);
                t = std::clamp(t, 0.0, 1.0);
                if (std::abs(a + b * t) < 1e-12)
                    throw Rejection("path meets the diagonal z_" + std::to_string(i + 1) + " = z_" +
                                    std::to_string(j + 1));
            }
    }
    if (path.waypoints.size() == 1) {
        const auto& w = path.waypoints[0];
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                if (std::abs(w[i] - w[j]) < 1e-12) throw Rejection("path starts on a diagonal");
    }
}

CM integrate(const NumericSystem& ns, const KZPath& path, std::size_t steps) {
    const auto segs = segments(path);
    CM y = eye(ns.dim);
    if (segs.empty()) return y;
    const std::size_t per = std::max<std::size_t>(1, (steps + segs.size() - 1) / segs.size());
    const double h = 1.0 / static_cast<double>(per);
    for (const auto& seg : segs) {
        std::vector<Complex> dz(seg[0].size());
        for (std::size_t i = 0; i < dz.size(); ++i) dz[i] = seg[1][i] - seg[0][i];
        auto at = [&](double t) {
            std::vector<Complex> z(dz.size());
            for (std::size_t i = 0; i < z.size(); ++i) z[i] = seg[0][i] + t * dz[i];
            return rhs(ns, z, dz);
        };
        for (std::size_t k = 0; k < per; ++k) {
            const double t = static_cast<double>(k) * h;
            const CM m0 = at(t), mh = at(t + h / 2), m1 = at(t + h);
            const CM k1 = mul(m0, y);
            const CM k2 = mul(mh, axpy(y, h / 2, k1));
            const CM k3 = mul(mh, axpy(y, h / 2, k2));
            const CM k4 = mul(m1, axpy(y, h, k3));
            CM sum = axpy(axpy(axpy(k1, 2, k2), 2, k3), 1, k4);
            y = axpy(y, h / 6, sum);
        }
    }
    return y;
}

}  // namespace

double distance(const CMatrix& a, const CMatrix& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[i][j] - b[i][j]));
    return m;
}

double distance_to_identity(const CMatrix& m) { return distance(m, eye(m.size())); }

TransportResult parallel_transport(const KZSystem& s, const KZPath& path, std::size_t steps, double tolerance) {
    if (steps < 100) throw Rejection("transport needs at least 100 steps");
    validate_path(s, path);
    const auto ns = numeric(s);
    TransportResult r;
    r.matrix = integrate(ns, path, steps);
    r.steps = steps;
    r.error_estimate = distance(r.matrix, integrate(ns, path, 2 * steps));
    r.converged = r.error_estimate < tolerance;
    return r;
}

double observed_order(const KZSystem& s, const KZPath& path, std::size_t steps) {
    validate_path(s, path);
    const auto ns = numeric(s);
    const CM y1 = integrate(ns, path, steps), y2 = integrate(ns, path, 2 * steps), y4 = integrate(ns, path, 4 * steps);
    return std::log2(distance(y1, y2) / distance(y2, y4));
}

}  // namespace wzw
