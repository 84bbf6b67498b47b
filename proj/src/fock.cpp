#include "wzw/fock.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <functional>

namespace wzw {

std::string DegreeWindow::to_string() const {
    if (empty()) return "[]";
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

DegreeWindow lowering_window(int k, int d) { return {0, std::min(d, d + k)}; }

// ---------------------------------------------------------------------------

GradedOperator::GradedOperator(std::vector<std::size_t> dims, int shift, DegreeWindow window)
    : dims_(std::move(dims)), shift_(shift), window_(window) {
    const int d = static_cast<int>(dims_.size()) - 1;
    window_ = window_.intersect({0, d});
    for (int s = window_.lo; s <= window_.hi; ++s) {
        const int t = s + shift_;
        if (t > d) throw InvariantViolation("graded operator window exceeds the truncation");
        blocks_.emplace(s, SparseMatrix(t < 0 ? 0 : dims_[t], dims_[s]));
    }
}

GradedOperator GradedOperator::identity(const std::vector<std::size_t>& dims) {
    GradedOperator id(dims, 0, {0, static_cast<int>(dims.size()) - 1});
    for (auto& [s, b] : id.blocks_) b = SparseMatrix::identity(dims[s]);
    return id;
}

bool GradedOperator::is_zero() const {
    return std::all_of(blocks_.begin(), blocks_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

Rational GradedOperator::max_abs() const {
    Rational m = 0;
    for (const auto& [s, b] : blocks_)
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (const auto& [c, v] : b.row(r)) m = std::max(m, Rational(abs(v)));
    return m;
}

GradedOperator compose(const GradedOperator& a, const GradedOperator& b) {
    // valid where b is valid and its image is either zero or inside a's window
    DegreeWindow w{0, -1};
    for (int s = b.window_.lo; s <= b.window_.hi; ++s) {
        const int t = s + b.shift_;
        const int d = static_cast<int>(b.dims_.size()) - 1;
        const bool ok = t < 0 ? s + a.shift_ + b.shift_ <= d : a.window_.contains(t);
        if (ok && w.empty()) w = {s, s};
        else if (ok && s == w.hi + 1) w.hi = s;
        else if (!ok && !w.empty()) break;
    }
    GradedOperator out(b.dims_, a.shift_ + b.shift_, w);
    for (auto& [s, blk] : out.blocks_) {
        const int t = s + b.shift_;
        if (t < 0 || s + out.shift_ < 0) continue;
        blk = a.block(t) * b.block(s);
    }
    return out;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
    if (a.shift_ != b.shift_) throw InvariantViolation("adding graded operators of different degree");
    GradedOperator out(a.dims_, a.shift_, a.window_.intersect(b.window_));
    for (auto& [s, blk] : out.blocks_) blk = a.block(s) + b.block(s);
    return out;
}

GradedOperator operator*(const Rational& c, const GradedOperator& a) {
    GradedOperator out = a;
    for (auto& [s, blk] : out.blocks_) blk = c * blk;
    return out;
}

GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return a + Rational(-1) * b; }

GradedOperator commutator(const GradedOperator& a, const GradedOperator& b) { return compose(a, b) - compose(b, a); }

// ---------------------------------------------------------------------------

namespace {

void partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

using FockVector = std::map<Partition, Rational>;

FockVector apply_t(int m, const FockVector& v) {
    FockVector out;
    if (m == 0) return out;
    for (const auto& [p, c] : v) {
        Partition q = p;
        if (m < 0) {
            q.insert(std::upper_bound(q.begin(), q.end(), -m, std::greater<int>()), -m);
            out[q] += c;
        } else {
            auto it = std::find(q.begin(), q.end(), m);
            if (it == q.end()) continue;
            const auto mult = std::count(q.begin(), q.end(), m);
            q.erase(it);
            out[q] += c * m * mult;
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace

FockBasis::FockBasis(int d) : d_(d), basis_(d + 1) {
    if (d < 0) throw Rejection("degree bound must be nonnegative");
    for (int n = 0; n <= d; ++n) {
        Partition cur;
        partitions(n, n, cur, basis_[n]);
        for (std::size_t i = 0; i < basis_[n].size(); ++i) index_.emplace(basis_[n][i], i);
    }
}

std::size_t FockBasis::index_of(const Partition& p) const { return index_.at(p); }

std::vector<std::size_t> FockBasis::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_) out.push_back(b.size());
    return out;
}

void require_degree(int k, int d) {
    if (d < 0) throw Rejection("degree bound must be nonnegative");
    if (std::abs(k) > d)
        throw Rejection("|k| = " + std::to_string(std::abs(k)) + " exceeds the degree bound " + std::to_string(d) +
                        "; the valid window is empty");
}

namespace {

template <class Fn>
GradedOperator build_fock(int k, int d, Fn&& image) {
    FockBasis basis(d);
    GradedOperator op(basis.dims(), -k, lowering_window(k, d));
    for (int s = op.window().lo; s <= op.window().hi; ++s) {
        if (s - k < 0) continue;
        auto& blk = op.block(s);
        const auto& src = basis.degree(s);
        for (std::size_t c = 0; c < src.size(); ++c)
            for (const auto& [p, v] : image(FockVector{{src[c], Rational(1)}}, s)) blk.add(basis.index_of(p), c, v);
    }
    return op;
}

}  // namespace

GradedOperator oscillator_op(int k, int d) {
    require_degree(k, d);
    return build_fock(k, d, [k](const FockVector& v, int) { return apply_t(k, v); });
}

GradedOperator virasoro_op(int k, int d) {
    require_degree(k, d);
    return build_fock(k, d, [k](const FockVector& v, int s) {
        FockVector acc;
        const int span = s + std::abs(k) + 1;
        for (int i = -span; i <= span; ++i) {
            const int j = k - i;
            if (i == 0 || j == 0) continue;
            const int first = std::max(i, j), second = std::min(i, j);
            if (first > s) continue;  // annihilates everything of degree s
            for (const auto& [p, c] : apply_t(second, apply_t(first, v))) acc[p] -= c / 2;
        }
        std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
        return acc;
    });
}

GradedOperator check_virasoro_bracket(int k, int l, int d) {
    require_degree(k, d);
    require_degree(l, d);
    require_degree(k + l, d);
    const auto lk = virasoro_op(k, d), ll = virasoro_op(l, d), lkl = virasoro_op(k + l, d);
    GradedOperator residual = commutator(lk, ll) - Rational(l - k) * lkl;
    if (k + l == 0) {
        Rational central(k * k * k - k, 12);
        central.canonicalize();
        residual = residual - central * GradedOperator::identity(lk.dims());
    }
    if (residual.window().empty())
        throw Rejection("empty valid window for (k, l) = (" + std::to_string(k) + ", " + std::to_string(l) +
                        ") at degree " + std::to_string(d));
    return residual;
}

std::vector<CheckResult> check_virasoro_suite(int kmax, int d) {
    std::vector<CheckResult> out;
    for (int k = -kmax; k <= kmax; ++k)
        for (int l = -kmax; l <= kmax; ++l) {
            auto r = check_virasoro_bracket(k, l, d);
            out.push_back({"virasoro [L_" + std::to_string(k) + ",L_" + std::to_string(l) + "]", r.window(),
                           r.max_abs()});
        }
    return out;
}

// ---------------------------------------------------------------------------

int Monomial::degree() const {
    int s = 0;
    for (const auto& f : factors) s += f.first;
    return s;
}

namespace {

// [X_a, X_b] in the basis E, F, H.
std::vector<std::pair<int, int>> bracket(int a, int b) {
    if (a == kE && b == kF) return {{kH, 1}};
    if (a == kF && b == kE) return {{kH, -1}};
    if (a == kH && b == kE) return {{kE, 2}};
    if (a == kE && b == kH) return {{kE, -2}};
    if (a == kH && b == kF) return {{kF, -2}};
    if (a == kF && b == kH) return {{kF, 2}};
    return {};
}

int form(int a, int b) {
    if ((a == kE && b == kF) || (a == kF && b == kE)) return 1;
    if (a == kH && b == kH) return 2;
    return 0;
}

const int generator_weight[3] = {2, -2, 0};

void add_into(ModuleVector& acc, const ModuleVector& v, const Rational& c) {
    if (c == 0) return;
    for (const auto& [m, x] : v) {
        auto& slot = acc[m];
        slot += c * x;
        if (slot == 0) acc.erase(m);
    }
}

void colored_partitions(int n, std::pair<int, int> max_key, std::vector<std::pair<int, int>>& cur,
                        std::vector<std::vector<std::pair<int, int>>>& out) {
    if (n == 0) {
        out.emplace_back(cur.rbegin(), cur.rend());  // innermost (smallest) first
        return;
    }
    for (int k = std::min(n, max_key.first); k >= 1; --k)
        for (int g = 2; g >= 0; --g) {
            if (std::make_pair(k, g) > max_key) continue;
            cur.push_back({k, g});
            colored_partitions(n - k, {k, g}, cur, out);
            cur.pop_back();
        }
}

}  // namespace

InducedModule::InducedModule(int level, int mu, int d) : level_(level), mu_(mu), d_(d), basis_(d + 1) {
    if (level < 0) throw Rejection("level must be nonnegative");
    if (mu < 0 || mu > level)
        throw Rejection("label " + std::to_string(mu) + " is not in P_" + std::to_string(level));
    if (d < 0) throw Rejection("degree bound must be nonnegative");
    for (int n = 0; n <= d; ++n) {
        std::vector<std::vector<std::pair<int, int>>> shapes;
        std::vector<std::pair<int, int>> cur;
        colored_partitions(n, {n, 2}, cur, shapes);
        for (const auto& f : shapes)
            for (int j = 0; j <= mu; ++j) basis_[n].push_back(Monomial{f, j});
        std::sort(basis_[n].begin(), basis_[n].end());
        for (std::size_t i = 0; i < basis_[n].size(); ++i) index_.emplace(basis_[n][i], i);
    }
}

std::vector<std::size_t> InducedModule::dims() const {
    std::vector<std::size_t> out;
    for (const auto& b : basis_) out.push_back(b.size());
    return out;
}

int InducedModule::weight(const Monomial& m) const {
    int w = mu_ - 2 * m.j;
    for (const auto& [k, g] : m.factors) w += generator_weight[g];
    return w;
}

const ModuleVector& InducedModule::act(int x, int n, const Monomial& m) const {
    const auto key = std::make_tuple(x, n, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    ModuleVector out;
    if (m.factors.empty()) {
        if (n < 0) {
            out[Monomial{{{-n, x}}, m.j}] = 1;
        } else if (n == 0) {
            const int j = m.j;
            if (x == kE && j >= 1) out[Monomial{{}, j - 1}] = mu_ - j + 1;
            if (x == kF && j < mu_) out[Monomial{{}, j + 1}] = j + 1;
            if (x == kH && mu_ - 2 * j != 0) out[Monomial{{}, j}] = mu_ - 2 * j;
        }
    } else {
        const auto outer = m.factors.back();
        if (n < 0 && std::make_pair(-n, x) >= outer) {
            Monomial grown = m;
            grown.factors.push_back({-n, x});
            out[grown] = 1;
        } else {
            // X t^n Y t^{-k} u = Y t^{-k} X t^n u + [X t^n, Y t^{-k}] u
            Monomial rest = m;
            rest.factors.pop_back();
            const auto [k, y] = outer;
            const ModuleVector inner = act(x, n, rest);
            out = apply(y, -k, inner);
            for (const auto& [z, c] : bracket(x, y)) add_into(out, act(z, n - k, rest), c);
            if (n == k && form(x, y) != 0) add_into(out, basis_vector(rest), Rational(n * form(x, y) * level_));
        }
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

ModuleVector InducedModule::apply(int generator, int n, const ModuleVector& v) const {
    ModuleVector out;
    for (const auto& [m, c] : v) {
        if (n > m.degree()) continue;
        add_into(out, act(generator, n, m), c);
    }
    return out;
}

GradedOperator InducedModule::loop_op(int generator, int n) const {
    GradedOperator op(dims(), -n, lowering_window(n, d_));
    for (int s = op.window().lo; s <= op.window().hi; ++s) {
        if (s - n < 0) continue;
        auto& blk = op.block(s);
        for (std::size_t c = 0; c < basis_[s].size(); ++c)
            for (const auto& [m, v] : act(generator, n, basis_[s][c])) blk.add(index_of(m), c, v);
    }
    return op;
}

GradedOperator InducedModule::sugawara_op(int k) const {
    require_degree(k, d_);
    std::map<std::pair<int, int>, GradedOperator> cache;
    auto loop = [&](int g, int n) -> const GradedOperator& {
        auto it = cache.find({g, n});
        if (it == cache.end()) it = cache.emplace(std::make_pair(g, n), loop_op(g, n)).first;
        return it->second;
    };
    // c = E (x) F + F (x) E + 1/2 H (x) H
    const std::array<std::tuple<int, int, Rational>, 3> casimir{
        {{kE, kF, Rational(1)}, {kF, kE, Rational(1)}, {kH, kH, Rational(1, 2)}}};

    GradedOperator sum(dims(), -k, lowering_window(k, d_));
    const int span = d_ + std::abs(k) + 1;
    for (int l = -span; l <= span; ++l) {
        const int i = k - l;  // index on X_a
        if (std::max(i, l) > d_) continue;
        for (const auto& [a, b, c] : casimir) {
            // the factor with the higher index acts first
            GradedOperator term = l >= i ? compose(loop(a, i), loop(b, l)) : compose(loop(b, l), loop(a, i));
            sum = sum + (c / 2) * term;
        }
    }
    Rational scale(-1, level_ + 2);
    scale.canonicalize();
    return scale * sum;
}

std::unique_ptr<InducedModule> induced_module(int level, int mu, int d) {
    return std::make_unique<InducedModule>(level, mu, d);
}

// ---------------------------------------------------------------------------

QMatrix degree_zero_pairing(int mu) {
    if (mu < 0) throw Rejection("sl2 label must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(mu) + 1;
    // rep matrices in the basis v_j, H v_j = (mu - 2j) v_j
    std::array<QMatrix, 3> x{QMatrix(n, n), QMatrix(n, n), QMatrix(n, n)};
    for (int j = 0; j <= mu; ++j) {
        x[kH](j, j) = mu - 2 * j;
        if (j >= 1) x[kE](j - 1, j) = mu - j + 1;
        if (j < mu) x[kF](j + 1, j) = j + 1;
    }
    // unknown B(i, j) at position i*n + j; b(X v_i, v_j) + b(v_i, X v_j) = 0
    QMatrix eq(3 * n * n, n * n);
    for (int g = 0; g < 3; ++g)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t row = (g * n + i) * n + j;
                for (std::size_t p = 0; p < n; ++p) {
                    eq(row, p * n + j) += x[g](p, i);
                    eq(row, i * n + p) += x[g](p, j);
                }
            }
    QMatrix ns = nullspace(eq);
    if (ns.cols() != 1) throw InvariantViolation("invariant pairing on V_" + std::to_string(mu) + " is not unique");
    QMatrix b(n, n);
    const Rational norm = ns(0 * n + (n - 1), 0);
    if (norm == 0) throw InvariantViolation("invariant pairing does not pair top and bottom weight vectors");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = ns(i * n + j, 0) / norm;
    return b;
}

IntegrableQuotient::IntegrableQuotient(const InducedModule& module) : module_(module) {
    const int d = module.degree_bound();
    degrees_.resize(d + 1);
    std::vector<GradedOperator> ann[3];
    for (int g = 0; g < 3; ++g)
        for (int k = 0; k <= d; ++k) ann[g].push_back(module.loop_op(g, k));

    for (int n = 0; n <= d; ++n) {
        const auto& basis = module.degree(n);
        QMatrix gram(basis.size(), basis.size());
        if (n == 0) {
            gram = degree_zero_pairing(module.mu());
        } else {
            // b(Y t^{-k} a', w) = -b(a', Y t^k w)
            for (std::size_t r = 0; r < basis.size(); ++r) {
                Monomial rest = basis[r];
                const auto [k, y] = rest.factors.back();
                rest.factors.pop_back();
                const std::size_t rr = module.index_of(rest);
                const QMatrix& lower = degrees_[n - k].gram;
                const SparseMatrix& a = ann[y][k].block(n);
                for (std::size_t w2 = 0; w2 < a.rows(); ++w2) {
                    const Rational& g = lower(rr, w2);
                    if (g == 0) continue;
                    for (const auto& [w, v] : a.row(w2)) gram(r, w) -= g * v;
                }
            }
        }

        // b pairs weight w with weight -w; find pivots blockwise.
        std::map<int, std::vector<std::size_t>> by_weight;
        for (std::size_t i = 0; i < basis.size(); ++i) by_weight[module.weight(basis[i])].push_back(i);
        std::vector<std::size_t> rows, cols;
        for (const auto& [w, ri] : by_weight) {
            auto ci_it = by_weight.find(-w);
            if (ci_it == by_weight.end()) continue;
            const auto& ci = ci_it->second;
            QMatrix sub = gram.select_rows(ri).select_cols(ci);
            auto pr = independent_rows(sub);
            auto pc = independent_rows(sub.select_rows(pr).transpose());
            for (auto i : pr) rows.push_back(ri[i]);
            for (auto i : pc) cols.push_back(ci[i]);
        }
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
        if (rows.size() != cols.size()) throw InvariantViolation("contravariant form has unequal left and right rank");

        QuotientDegree& q = degrees_[n];
        q.gram = std::move(gram);
        q.rows = rows;
        q.cols = cols;
        q.pairing = q.gram.select_rows(rows).select_cols(cols);
        if (!rows.empty()) {
            const QMatrix inv = inverse(q.pairing);
            q.plus_projection = inv.transpose() * q.gram.select_cols(cols).transpose();
            q.minus_projection = inv * q.gram.select_rows(rows);
        } else {
            q.plus_projection = QMatrix(0, basis.size());
            q.minus_projection = QMatrix(0, basis.size());
        }
        if (n == 0 && q.dim() != basis.size()) throw InvariantViolation("degree-zero pairing is singular");
    }
}

std::vector<std::size_t> IntegrableQuotient::dims() const {
    std::vector<std::size_t> out;
    for (const auto& q : degrees_) out.push_back(q.dim());
    return out;
}

bool IntegrableQuotient::in_radical(const ModuleVector& v) const {
    if (v.empty()) return true;
    const int n = v.begin()->first.degree();
    const QMatrix& g = degrees_.at(n).gram;
    for (std::size_t w = 0; w < g.cols(); ++w) {
        Rational acc = 0;
        for (const auto& [m, c] : v) {
            if (m.degree() != n) throw Rejection("in_radical expects a homogeneous vector");
            acc += c * g(module_.index_of(m), w);
        }
        if (acc != 0) return false;
    }
    return true;
}

namespace {

QMatrix restricted_block(const GradedOperator& op, int s, const std::vector<std::size_t>& source_cols) {
    const SparseMatrix& b = op.block(s);
    QMatrix out(b.rows(), source_cols.size());
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < source_cols.size(); ++c) out(r, c) = b.get(r, source_cols[c]);
    return out;
}

}  // namespace

QMatrix IntegrableQuotient::plus_block(const GradedOperator& op, int s) const {
    const int t = s + op.shift();
    if (t < 0) return QMatrix(0, degrees_[s].dim());
    return degrees_[t].plus_projection * restricted_block(op, s, degrees_[s].rows);
}

QMatrix IntegrableQuotient::minus_block(const GradedOperator& op, int s) const {
    const int t = s + op.shift();
    if (t < 0) return QMatrix(0, degrees_[s].dim());
    return degrees_[t].minus_projection * restricted_block(op, s, degrees_[s].cols);
}

// ---------------------------------------------------------------------------

namespace {

Rational max_abs(const QMatrix& m) {
    Rational out = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out = std::max(out, Rational(abs(m(r, c))));
    return out;
}

const char* generator_name(int g) { return g == kE ? "E" : g == kF ? "F" : "H"; }

Rational conformal_weight(int level, int mu) {
    Rational h(mu * (mu + 2), 4 * (level + 2));
    h.canonicalize();
    return h;
}

}  // namespace

GluingTensorSeries gluing_tensor(const IntegrableQuotient& q) {
    GluingTensorSeries out{q.module().mu(), {}};
    for (int n = 0; n <= q.module().degree_bound(); ++n) {
        const auto& deg = q.degree(n);
        out.terms.push_back(deg.dim() == 0 ? QMatrix() : inverse(deg.pairing).transpose());
    }
    return out;
}

std::vector<CheckResult> check_gluing_recursion(const IntegrableQuotient& q, const GluingTensorSeries& eps, int nmax) {
    const InducedModule& m = q.module();
    const int d = m.degree_bound();
    std::vector<CheckResult> out;
    for (int g = 0; g < 3; ++g)
        for (int n = -nmax; n <= nmax; ++n) {
            const auto plus = m.loop_op(g, n), minus = m.loop_op(g, -n);
            CheckResult res{"gluing (" + std::string(generator_name(g)) + "t^" + std::to_string(n) + ")", {}, 0};
            for (int dd = 0; dd <= d; ++dd) {
                if (dd + n < 0 || dd + n > d) continue;
                res.window = res.window.empty() ? DegreeWindow{dd, dd} : DegreeWindow{res.window.lo, dd};
                const std::size_t a = q.degree(dd).dim(), b = q.degree(dd + n).dim();
                if (a == 0 || b == 0) continue;
                const QMatrix lhs = q.plus_block(plus, dd + n) * eps.terms[dd + n];
                const QMatrix rhs = eps.terms[dd] * q.minus_block(minus, dd).transpose();
                res.residual_norm = std::max(res.residual_norm, max_abs(lhs + rhs));
            }
            out.push_back(res);
        }
    return out;
}

CheckResult check_gluing_constant_term(const GluingTensorSeries& eps) {
    const QMatrix expected = inverse(degree_zero_pairing(eps.mu)).transpose();
    return {"gluing eps_0 = transpose inverse of b", {0, 0}, max_abs(eps.terms.at(0) - expected)};
}

CheckResult check_gluing_eigenvector(const IntegrableQuotient& q, const GluingTensorSeries& eps) {
    const InducedModule& m = q.module();
    const auto t0 = m.sugawara_op(0);
    const Rational h = conformal_weight(m.level(), m.mu());
    CheckResult res{"gluing T_0 eigenvector", {0, m.degree_bound()}, 0};
    for (int dd = 0; dd <= m.degree_bound(); ++dd) {
        if (q.degree(dd).dim() == 0) continue;
        const QMatrix lhs = q.plus_block(t0, dd) * eps.terms[dd];
        res.residual_norm = std::max(res.residual_norm, max_abs(lhs + (dd + h) * eps.terms[dd]));
    }
    return res;
}

std::vector<CheckResult> check_sugawara_derivation(const InducedModule& m, int kmax) {
    std::vector<CheckResult> out;
    for (int k = -kmax; k <= kmax; ++k) {
        const auto tk = m.sugawara_op(k);
        for (int n = -kmax; n <= kmax; ++n) {
            CheckResult res{"sugawara [T_" + std::to_string(k) + ",Xt^" + std::to_string(n) + "]", {0, -1}, 0};
            for (int g = 0; g < 3; ++g) {
                const auto r = commutator(tk, m.loop_op(g, n)) - Rational(n) * m.loop_op(g, n + k);
                res.window = g == 0 ? r.window() : res.window.intersect(r.window());
                res.residual_norm = std::max(res.residual_norm, r.max_abs());
            }
            out.push_back(res);
        }
    }
    return out;
}

std::vector<CheckResult> check_sugawara_bracket(const InducedModule& m, int kmax) {
    std::map<int, GradedOperator> t;
    for (int k = -2 * kmax; k <= 2 * kmax; ++k) t.emplace(k, m.sugawara_op(k));
    Rational charge(3 * m.level(), m.level() + 2);
    charge.canonicalize();
    std::vector<CheckResult> out;
    for (int k = -kmax; k <= kmax; ++k)
        for (int l = -kmax; l <= kmax; ++l) {
            GradedOperator r = commutator(t.at(k), t.at(l)) - Rational(l - k) * t.at(k + l);
            if (k + l == 0) {
                Rational central(k * k * k - k, 12);
                central.canonicalize();
                r = r - (central * charge) * GradedOperator::identity(m.dims());
            }
            out.push_back({"sugawara [T_" + std::to_string(k) + ",T_" + std::to_string(l) + "]", r.window(),
                           r.max_abs()});
        }
    return out;
}

std::vector<CheckResult> check_l0_spectrum(const IntegrableQuotient& q) {
    const InducedModule& m = q.module();
    const auto t0 = m.sugawara_op(0);
    const Rational h = conformal_weight(m.level(), m.mu());
    std::vector<CheckResult> out;
    for (int dd = 0; dd <= m.degree_bound(); ++dd) {
        const QMatrix block = q.plus_block(t0, dd);
        const QMatrix expected = Rational(-(dd + h)) * QMatrix::identity(block.rows());
        out.push_back({"L_0 spectrum degree " + std::to_string(dd), {dd, dd}, max_abs(block - expected)});
    }
    return out;
}

}  // namespace wzw
