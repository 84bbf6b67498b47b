#include "wzw/liealg.hpp"

#include "wzw/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wzw {

DominantWeight::DominantWeight(Weight coords) : coords_(std::move(coords)) {
    for (auto c : coords_)
        if (c < 0) throw Rejection("weight " + to_string(coords_) + " is not dominant");
}

bool DominantWeight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::string to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

std::string to_string(const DominantWeight& w) { return to_string(w.coords()); }

namespace {

// Gram matrix of the simple roots, Bourbaki numbering, long roots of length^2 2.
QMatrix simple_root_gram(char series, int n) {
    QMatrix b(n, n);
    auto link = [&](int i, int j, Rational v) {  // 1-based
        b(i - 1, j - 1) = v;
        b(j - 1, i - 1) = v;
    };
    auto chain = [&](int from, int to, Rational v) {
        for (int i = from; i < to; ++i) link(i, i + 1, v);
    };
    for (int i = 0; i < n; ++i) b(i, i) = 2;
    switch (series) {
    case 'A':
        chain(1, n, -1);
        break;
    case 'B':
        chain(1, n, -1);
        b(n - 1, n - 1) = 1;
        break;
    case 'C':
        for (int i = 0; i < n - 1; ++i) b(i, i) = 1;
        chain(1, n - 1, Rational(-1, 2));
        link(n - 1, n, -1);
        break;
    case 'D':
        chain(1, n - 1, -1);
        link(n - 2, n, -1);
        break;
    case 'E':
        link(1, 3, -1);
        link(2, 4, -1);
        chain(3, n, -1);
        break;
    case 'F':
        b(2, 2) = 1;
        b(3, 3) = 1;
        link(1, 2, -1);
        link(2, 3, -1);
        link(3, 4, Rational(-1, 2));
        break;
    case 'G':
        b(0, 0) = Rational(2, 3);
        link(1, 2, -1);
        break;
    default:
        break;
    }
    return b;
}

void validate_type(char series, int rank) {
    bool ok = false;
    std::string constraint;
    switch (series) {
    case 'A': ok = rank >= 1; constraint = "A_n requires n >= 1"; break;
    case 'B': ok = rank >= 2; constraint = "B_n requires n >= 2"; break;
    case 'C': ok = rank >= 2; constraint = "C_n requires n >= 2"; break;
    case 'D': ok = rank >= 4; constraint = "D_n requires n >= 4"; break;
    case 'E': ok = rank >= 6 && rank <= 8; constraint = "E_n requires 6 <= n <= 8"; break;
    case 'F': ok = rank == 4; constraint = "F_n exists only for n = 4"; break;
    case 'G': ok = rank == 2; constraint = "G_n exists only for n = 2"; break;
    default: constraint = "series must be one of A,B,C,D,E,F,G"; break;
    }
    if (!ok)
        throw Rejection("invalid simple type " + std::string(1, series) + std::to_string(rank) + ": " + constraint);
}

}  // namespace

RootSystem::RootSystem(char series, int rank) : series_(series), rank_(rank) {
    validate_type(series, rank);
    const int n = rank;
    const QMatrix gram = simple_root_gram(series, n);

    cartan_.assign(n, std::vector<std::int64_t>(n));
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational a = 2 * gram(i, j) / gram(j, j);
            if (a.get_den() != 1) throw InvariantViolation("non-integral Cartan entry for " + name());
            cartan_[i][j] = a.get_num().get_si();
            m(i, j) = a;
        }

    // gram = M F M^T  =>  F = M^{-1} gram M^{-T}
    const QMatrix minv = inverse(m);
    form_ = minv * gram * minv.transpose();

    // Positive roots in simple-root coordinates, grown by height.
    std::vector<std::vector<std::int64_t>> roots;
    std::set<std::vector<std::int64_t>> known;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> e(n, 0);
        e[i] = 1;
        roots.push_back(e);
        known.insert(e);
    }
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        const auto beta = roots[idx];
        for (int i = 0; i < n; ++i) {
            // <beta, alpha_i^vee> = sum_j c_j a_{j i}
            std::int64_t pairing = 0;
            for (int j = 0; j < n; ++j) pairing += beta[j] * cartan_[j][i];
            std::int64_t p = 0;
            auto down = beta;
            while (true) {
                down[i] -= 1;
                if (!known.count(down)) break;
                ++p;
            }
            const std::int64_t q = p - pairing;
            if (q > 0) {
                auto up = beta;
                up[i] += 1;
                if (known.insert(up).second) roots.push_back(up);
            }
        }
    }

    std::size_t top = 0;
    auto height = [](const std::vector<std::int64_t>& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
    for (std::size_t k = 0; k < roots.size(); ++k) {
        Weight w(n, 0);
        for (int j = 0; j < n; ++j)
            for (int c = 0; c < n; ++c) w[c] += roots[k][j] * cartan_[j][c];
        positive_roots_.push_back(w);
        if (height(roots[k]) > height(roots[top])) top = k;
    }
    theta_ = positive_roots_[top];

    if (form(theta_, theta_) != 2) throw InvariantViolation("highest root of " + name() + " is not long");
    Rational h = 1 + form(theta_, rho());
    if (h.get_den() != 1) throw InvariantViolation("non-integral dual Coxeter number for " + name());
    dual_coxeter_ = static_cast<int>(h.get_num().get_si());
}

RootSystem RootSystem::parse(const std::string& name) {
    if (name.size() < 2) throw Rejection("algebra name must look like 'A1' or 'G2', got '" + name + "'");
    char series = name[0];
    if (series >= 'a' && series <= 'z') series = static_cast<char>(series - 'a' + 'A');
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9' || rank > 1000)
            throw Rejection("algebra name must look like 'A1' or 'G2', got '" + name + "'");
        rank = rank * 10 + (name[i] - '0');
    }
    return RootSystem(series, rank);
}

std::string RootSystem::name() const { return std::string(1, series_) + std::to_string(rank_); }

Rational RootSystem::form(const Weight& a, const Weight& b) const {
    Rational s = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < rank_; ++j)
            if (b[j] != 0) s += form_(i, j) * a[i] * b[j];
    }
    return s;
}

Weight RootSystem::reflect(const Weight& x, int i) const {
    Weight y = x;
    const std::int64_t xi = x[i];
    for (int j = 0; j < rank_; ++j) y[j] -= xi * cartan_[i][j];
    return y;
}

int RootSystem::to_dominant(Weight& x) const {
    int sign = 1;
    while (true) {
        int i = 0;
        while (i < rank_ && x[i] >= 0) ++i;
        if (i == rank_) return sign;
        x = reflect(x, i);
        sign = -sign;
    }
}

void require_dominant(const RootSystem& rs, const Weight& mu) {
    if (static_cast<int>(mu.size()) != rs.rank())
        throw Rejection("weight " + to_string(mu) + " has wrong length for " + rs.name());
    for (auto c : mu)
        if (c < 0) throw Rejection("weight " + to_string(mu) + " is not dominant");
}

Rational casimir_eigenvalue(const RootSystem& rs, const DominantWeight& mu) {
    require_dominant(rs, mu.coords());
    Weight shifted = mu.coords();
    for (auto& c : shifted) c += 2;
    return rs.form(mu.coords(), shifted);
}

std::int64_t level_of(const RootSystem& rs, const DominantWeight& mu) {
    require_dominant(rs, mu.coords());
    Rational l = rs.form(mu.coords(), rs.highest_root());
    if (l.get_den() != 1) throw InvariantViolation("non-integral level for " + to_string(mu));
    return l.get_num().get_si();
}

DominantWeight dual_weight(const RootSystem& rs, const DominantWeight& mu) {
    require_dominant(rs, mu.coords());
    Weight x = mu.coords();
    for (auto& c : x) c = -c;
    rs.to_dominant(x);
    return DominantWeight(x);
}

Integer weyl_dim(const RootSystem& rs, const DominantWeight& mu) {
    require_dominant(rs, mu.coords());
    Weight shifted = mu.coords();
    for (auto& c : shifted) c += 1;
    const Weight rho = rs.rho();
    Rational d = 1;
    for (const auto& a : rs.positive_roots()) d *= rs.form(shifted, a) / rs.form(rho, a);
    if (d.get_den() != 1) throw InvariantViolation("Weyl dimension is not an integer");
    return d.get_num();
}

WeightDiagram weight_multiplicities(const RootSystem& rs, const DominantWeight& mu) {
    require_dominant(rs, mu.coords());
    const int n = rs.rank();
    const Weight top = mu.coords();
    Weight top_rho = top;
    for (auto& c : top_rho) c += 1;
    const Rational norm_top = rs.form(top_rho, top_rho);

    WeightDiagram mult;
    mult[top] = 1;
    std::vector<Weight> layer{top};
    std::int64_t depth = 0;  // simple-root steps below the highest weight
    while (!layer.empty()) {
        ++depth;
        std::set<Weight> candidates;
        for (const auto& w : layer)
            for (int i = 0; i < n; ++i) {
                Weight c = w;
                for (int j = 0; j < n; ++j) c[j] -= rs.cartan_matrix()[i][j];
                candidates.insert(c);
            }
        std::vector<Weight> next;
        for (const auto& lam : candidates) {
            Weight lam_rho = lam;
            for (auto& c : lam_rho) c += 1;
            const Rational denom = norm_top - rs.form(lam_rho, lam_rho);
            Rational num = 0;
            for (const auto& a : rs.positive_roots()) {
                Weight shifted = lam;
                for (std::int64_t k = 1; k <= depth; ++k) {
                    for (int j = 0; j < n; ++j) shifted[j] += a[j];
                    auto it = mult.find(shifted);
                    if (it != mult.end()) num += it->second * rs.form(shifted, a);
                }
            }
            num *= 2;
            if (denom == 0) {
                if (num != 0) throw InvariantViolation("Freudenthal recursion: zero denominator with nonzero sum");
                continue;
            }
            Rational m = num / denom;
            if (m.get_den() != 1 || m < 0) throw InvariantViolation("Freudenthal recursion produced " + to_string(m));
            if (m == 0) continue;
            mult[lam] = m.get_num().get_si();
            next.push_back(lam);
        }
        layer = std::move(next);
    }
    return mult;
}

TensorDecomposition tensor_decompose(const RootSystem& rs, const DominantWeight& mu, const DominantWeight& nu) {
    require_dominant(rs, mu.coords());
    require_dominant(rs, nu.coords());
    // Walk the weights of the smaller factor.
    const bool swap = weyl_dim(rs, nu) > weyl_dim(rs, mu);
    const DominantWeight& big = swap ? nu : mu;
    const DominantWeight& small = swap ? mu : nu;

    std::map<Weight, std::int64_t> acc;
    for (const auto& [wt, m] : weight_multiplicities(rs, small)) {
        Weight x = big.coords();
        for (int j = 0; j < rs.rank(); ++j) x[j] += wt[j] + 1;
        const int sign = rs.to_dominant(x);
        if (std::any_of(x.begin(), x.end(), [](auto c) { return c == 0; })) continue;
        for (auto& c : x) c -= 1;
        acc[x] += sign * m;
    }
    TensorDecomposition out;
    for (const auto& [w, m] : acc) {
        if (m < 0) throw InvariantViolation("negative tensor multiplicity at " + to_string(w));
        if (m > 0) out.emplace(DominantWeight(w), m);
    }
    return out;
}

}  // namespace wzw
