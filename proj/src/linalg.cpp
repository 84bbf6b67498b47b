#include "wzw/linalg.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <utility>

namespace wzw {

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Rejection("not a rational number: '" + s + "'");
    if (q.get_den() == 0) throw Rejection("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// QMatrix

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

bool QMatrix::is_scalar(Rational* value) const {
    if (rows_ != cols_) return false;
    Rational s = rows_ ? (*this)(0, 0) : Rational(0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? s : Rational(0))) return false;
    if (value) *value = s;
    return true;
}

QMatrix QMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    QMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(idx[i], c);
    return out;
}

QMatrix QMatrix::select_cols(const std::vector<std::size_t>& idx) const {
    QMatrix out(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < idx.size(); ++j) out(r, j) = (*this)(r, idx[j]);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw InvariantViolation("matrix product: shape mismatch");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) out(i, j) += x * b(k, j);
        }
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix sum: shape mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("matrix difference: shape mismatch");
    QMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

QMatrix operator*(const Rational& s, const QMatrix& a) {
    QMatrix out = a;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// Elimination

std::size_t bareiss_rank(const QMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        Integer den = 1;
        for (std::size_t c = 0; c < cols; ++c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    }

    Integer prev = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t p = rank;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[rank]);
        const Integer& piv = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[r][j] = a[r][j] * piv - a[rank][j] * a[r][c];
                mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots) {
    QMatrix a = m;
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
        std::size_t p = row;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, c) == 0) continue;
            Rational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
        }
        piv.push_back(c);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

QMatrix inverse(const QMatrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw InvariantViolation("inverse of a non-square matrix");
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    std::vector<std::size_t> piv;
    QMatrix red = rref(aug, &piv);
    if (piv.size() < n || piv[n - 1] >= n) throw InvariantViolation("inverse of a singular matrix");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
    return inv;
}

QMatrix nullspace(const QMatrix& m) {
    std::vector<std::size_t> piv;
    QMatrix red = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    QMatrix basis(m.cols(), free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) basis(piv[r], k) = -red(r, free[k]);
    }
    return basis;
}

std::vector<std::size_t> independent_rows(const QMatrix& m) {
    std::vector<std::size_t> piv;
    rref(m.transpose(), &piv);
    return piv;
}

// ---------------------------------------------------------------------------
// SparseMatrix

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const QMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c)
            if (d(r, c) != 0) m.data_[r][c] = d(r, c);
    return m;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
    if (v == 0) return;
    auto& row = data_[r];
    auto [it, inserted] = row.try_emplace(c, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

Rational SparseMatrix::get(std::size_t r, std::size_t c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Row& r) { return r.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

QMatrix SparseMatrix::to_dense() const {
    QMatrix d(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) d(r, c) = v;
    return d;
}

void SparseMatrix::prune(std::size_t r) {
    std::erase_if(data_[r], [](const auto& kv) { return kv.second == 0; });
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw InvariantViolation("sparse product: shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        auto& orow = out.data_[r];
        for (const auto& [k, x] : a.data_[r])
            for (const auto& [c, y] : b.data_[k]) orow[c] += x * y;
        out.prune(r);
    }
    return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvariantViolation("sparse sum: shape mismatch");
    SparseMatrix out = a;
    for (std::size_t r = 0; r < b.rows_; ++r)
        for (const auto& [c, v] : b.data_[r]) out.add(r, c, v);
    return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational(-1) * b; }

SparseMatrix operator*(const Rational& s, const SparseMatrix& a) {
    SparseMatrix out(a.rows_, a.cols_);
    if (s == 0) return out;
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (const auto& [c, v] : a.data_[r]) out.data_[r][c] = s * v;
    return out;
}

// ---------------------------------------------------------------------------
// SpanBuilder

namespace {

void make_primitive(std::map<std::size_t, Integer>& v) {
    Integer g = 0;
    for (const auto& [c, x] : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    if (v.begin()->second < 0) g = -g;
    if (g == 1) return;
    for (auto& [c, x] : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::map<std::size_t, Integer> clear_denominators(const std::map<std::size_t, Rational>& v) {
    Integer den = 1;
    for (const auto& [c, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::map<std::size_t, Integer> out;
    for (const auto& [c, x] : v)
        if (x != 0) out[c] = x.get_num() * (den / x.get_den());
    return out;
}

}  // namespace

SpanBuilder::IntRow SpanBuilder::reduce(IntRow v) const {
    // Left-to-right sweep: pivot rows have no entries left of their pivot, so
    // clearing column c never disturbs columns already passed.
    auto it = v.begin();
    while (it != v.end()) {
        auto piv = rows_.find(it->first);
        if (piv == rows_.end()) {
            ++it;
            continue;
        }
        const std::size_t col = it->first;
        const IntRow& p = piv->second;
        const Integer a = p.begin()->second;
        const Integer b = it->second;
        for (auto& [c, x] : v) x *= a;
        for (const auto& [c, y] : p) v[c] -= b * y;
        std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
        make_primitive(v);
        it = v.upper_bound(col);
    }
    return v;
}

bool SpanBuilder::insert(const Vector& v) {
    IntRow w = clear_denominators(v);
    if (!w.empty() && w.rbegin()->first >= dim_) throw InvariantViolation("SpanBuilder: coordinate out of range");
    w = reduce(std::move(w));
    if (w.empty()) return false;
    make_primitive(w);
    std::size_t lead = w.begin()->first;
    rows_.emplace(lead, std::move(w));
    return true;
}

bool SpanBuilder::contains(const Vector& v) const { return reduce(clear_denominators(v)).empty(); }

// ---------------------------------------------------------------------------
// QuotientSpace

QuotientSpace::QuotientSpace(std::size_t ambient, const std::vector<std::vector<Rational>>& spanning)
    : ambient_(ambient) {
    QMatrix s(spanning.size(), ambient);
    for (std::size_t r = 0; r < spanning.size(); ++r) {
        if (spanning[r].size() != ambient) throw InvariantViolation("QuotientSpace: vector length mismatch");
        for (std::size_t c = 0; c < ambient; ++c) s(r, c) = spanning[r][c];
    }
    std::vector<std::size_t> piv;
    QMatrix red = rref(s, &piv);
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : piv) is_pivot[p] = true;
    for (std::size_t c = 0; c < ambient; ++c)
        if (!is_pivot[c]) free_.push_back(c);

    // Reducing e_c: for a pivot column p (row r), e_p == -(sum over free f of red(r,f) e_f) mod span.
    proj_ = QMatrix(free_.size(), ambient);
    sect_ = QMatrix(ambient, free_.size());
    std::vector<std::size_t> free_index(ambient, ambient);
    for (std::size_t k = 0; k < free_.size(); ++k) {
        free_index[free_[k]] = k;
        proj_(k, free_[k]) = 1;
        sect_(free_[k], k) = 1;
    }
    for (std::size_t r = 0; r < piv.size(); ++r)
        for (std::size_t k = 0; k < free_.size(); ++k) proj_(k, piv[r]) = -red(r, free_[k]);
}

QMatrix QuotientSpace::descend(const QMatrix& op) const { return proj_ * op * sect_; }

}  // namespace wzw
