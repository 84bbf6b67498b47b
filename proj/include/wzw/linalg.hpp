#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wzw {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" (or "p" when q == 1).
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

// Dense row-major matrix over the rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    QMatrix transpose() const;
    bool is_zero() const;
    bool is_scalar(Rational* value = nullptr) const;

    // Rows/columns picked by index, in the given order.
    QMatrix select_rows(const std::vector<std::size_t>& idx) const;
    QMatrix select_cols(const std::vector<std::size_t>& idx) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
    friend QMatrix operator*(const Rational& s, const QMatrix& a);
    friend bool operator==(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);

// Rank by fraction-free (Bareiss) elimination. Rows are cleared of
// denominators first, so all intermediate values stay integral.
std::size_t bareiss_rank(const QMatrix& m);

// Reduced row echelon form over Q. `pivots` receives the pivot column of
// each nonzero row.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Throws InvariantViolation when singular.
QMatrix inverse(const QMatrix& m);

// Columns form a basis of {x : m x = 0}.
QMatrix nullspace(const QMatrix& m);

// Row indices of a maximal independent set of rows, chosen greedily from the top.
std::vector<std::size_t> independent_rows(const QMatrix& m);

// Sparse matrix: one ordered map per row.
class SparseMatrix {
public:
    using Row = std::map<std::size_t, Rational>;

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n);
    static SparseMatrix from_dense(const QMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t r, std::size_t c, const Rational& v);
    Rational get(std::size_t r, std::size_t c) const;
    const Row& row(std::size_t r) const { return data_[r]; }

    bool is_zero() const;
    std::size_t nonzeros() const;
    QMatrix to_dense() const;

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
    friend SparseMatrix operator*(const Rational& s, const SparseMatrix& a);

private:
    void prune(std::size_t r);

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Row> data_;
};

// Incrementally maintained span of sparse rational vectors in a space of
// fixed dimension. Rows are kept primitive integral (content 1) and reduced
// fraction-free, so growth stays bounded by the row content.
class SpanBuilder {
public:
    using Vector = std::map<std::size_t, Rational>;

    explicit SpanBuilder(std::size_t dimension) : dim_(dimension) {}

    // Returns true if v was independent of the current span.
    bool insert(const Vector& v);
    bool contains(const Vector& v) const;

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::size_t corank() const { return dim_ - rows_.size(); }

private:
    using IntRow = std::map<std::size_t, Integer>;
    IntRow reduce(IntRow v) const;

    std::size_t dim_;
    std::map<std::size_t, IntRow> rows_;  // keyed by pivot (leading) column
};

// Quotient of Q^n by a subspace given by spanning rows. Coordinates on the
// quotient are the non-pivot coordinates of the reduced representative.
class QuotientSpace {
public:
    QuotientSpace(std::size_t ambient, const std::vector<std::vector<Rational>>& spanning);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return free_.size(); }

    // dim() x ambient_dim(): reduces modulo the subspace.
    const QMatrix& projection() const { return proj_; }
    // ambient_dim() x dim(): the standard basis vectors chosen as representatives.
    const QMatrix& section() const { return sect_; }

    // Induced map of an operator that preserves the subspace.
    QMatrix descend(const QMatrix& op) const;

private:
    std::size_t ambient_;
    std::vector<std::size_t> free_;
    QMatrix proj_;
    QMatrix sect_;
};

}  // namespace wzw
