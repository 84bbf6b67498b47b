#include "wzw/fusion.hpp"

#include "wzw/errors.hpp"

#include <algorithm>

namespace wzw {

namespace {

void enumerate_level(const RootSystem& rs, const std::vector<std::int64_t>& comarks, int level, Weight& cur,
                     int pos, std::int64_t used, std::vector<DominantWeight>& out) {
    if (pos == rs.rank()) {
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t c = 0; used + c * comarks[pos] <= level; ++c) {
        cur[pos] = c;
        enumerate_level(rs, comarks, level, cur, pos + 1, used + c * comarks[pos], out);
    }
    cur[pos] = 0;
}

}  // namespace

FusionAlphabet::FusionAlphabet(RootSystem rs, int level) : rs_(std::move(rs)), level_(level) {
    if (level < 0) throw Rejection("level must be nonnegative, got " + std::to_string(level));
    // level_of(omega_i) = form(omega_i, theta) is the i-th comark.
    std::vector<std::int64_t> comarks;
    for (int i = 0; i < rs_.rank(); ++i) {
        Weight e(rs_.rank(), 0);
        e[i] = 1;
        comarks.push_back(level_of(rs_, DominantWeight(e)));
    }
    Weight cur(rs_.rank(), 0);
    enumerate_level(rs_, comarks, level, cur, 0, 0, labels_);
    std::sort(labels_.begin(), labels_.end());
    for (const auto& mu : labels_) dual_.push_back(index_of(dual_weight(rs_, mu)));
}

bool FusionAlphabet::contains(const DominantWeight& mu) const {
    return std::binary_search(labels_.begin(), labels_.end(), mu);
}

std::size_t FusionAlphabet::index_of(const DominantWeight& mu) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), mu);
    if (static_cast<int>(mu.rank()) != rs_.rank() || it == labels_.end() || !(*it == mu))
        throw Rejection("label " + to_string(mu) + " is not in P_" + std::to_string(level_) + " for " + rs_.name());
    return static_cast<std::size_t>(it - labels_.begin());
}

FusionAlphabet alphabet(const RootSystem& rs, int level) { return FusionAlphabet(rs, level); }

TensorDecomposition fusion_product(const FusionAlphabet& a, const DominantWeight& lambda, const DominantWeight& mu) {
    const RootSystem& rs = a.root_system();
    a.index_of(lambda);
    a.index_of(mu);
    const std::int64_t shifted_level = a.level() + rs.dual_coxeter();
    const Weight& theta = rs.highest_root();

    std::map<Weight, std::int64_t> acc;
    for (const auto& [wt, m] : weight_multiplicities(rs, mu)) {
        Weight x = lambda.coords();
        for (int j = 0; j < rs.rank(); ++j) x[j] += wt[j] + 1;
        int sign = 1;
        bool on_wall = false;
        while (true) {
            sign *= rs.to_dominant(x);
            if (std::any_of(x.begin(), x.end(), [](auto c) { return c == 0; })) {
                on_wall = true;
                break;
            }
            Rational t = rs.form(x, theta);
            const std::int64_t excess = t.get_num().get_si() - shifted_level;
            if (excess == 0) {
                on_wall = true;
                break;
            }
            if (excess < 0) break;
            // affine reflection: x <- x - excess * theta^vee, and theta^vee = theta
            for (int j = 0; j < rs.rank(); ++j) x[j] -= excess * theta[j];
            sign = -sign;
        }
        if (on_wall) continue;
        for (auto& c : x) c -= 1;
        acc[x] += sign * m;
    }
    TensorDecomposition out;
    for (const auto& [w, m] : acc) {
        if (m < 0) throw InvariantViolation("negative fusion multiplicity at " + to_string(w));
        if (m > 0) out.emplace(DominantWeight(w), m);
    }
    return out;
}

std::int64_t fusion_coeff(const FusionAlphabet& a, const DominantWeight& lambda, const DominantWeight& mu,
                          const DominantWeight& nu) {
    const std::size_t k = a.index_of(nu);
    const auto product = fusion_product(a, lambda, mu);
    auto it = product.find(a.labels()[a.dual_index(k)]);
    return it == product.end() ? 0 : it->second;
}

FusionRing::FusionRing(FusionAlphabet a, std::vector<std::int64_t> coeffs) : alphabet_(std::move(a)), n_(std::move(coeffs)) {
    if (n_.size() != size() * size() * size()) throw InvariantViolation("fusion ring: coefficient array has wrong size");
}

std::vector<std::pair<std::array<std::size_t, 3>, std::int64_t>> FusionRing::nonzero_sorted() const {
    std::vector<std::pair<std::array<std::size_t, 3>, std::int64_t>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                if (auto v = (*this)(i, j, k); v != 0) out.push_back({{i, j, k}, v});
    return out;
}

std::optional<std::string> FusionRing::find_axiom_violation() const {
    const std::size_t n = size();
    const auto& labels = alphabet_.labels();
    auto name = [&](std::size_t i) { return to_string(labels[i]); };
    auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
        return "(" + name(i) + ", " + name(j) + ", " + name(k) + ")";
    };
    const std::size_t zero = alphabet_.index_of(DominantWeight(Weight(alphabet_.root_system().rank(), 0)));

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = (*this)(i, j, k);
                if (v < 0) return "nonnegativity violated at " + triple(i, j, k);
                if (v != (*this)(j, i, k) || v != (*this)(i, k, j) || v != (*this)(k, j, i))
                    return "symmetry violated at " + triple(i, j, k);
                const std::size_t di = alphabet_.dual_index(i), dj = alphabet_.dual_index(j),
                                  dk = alphabet_.dual_index(k);
                if (v != (*this)(di, dj, dk)) return "duality violated at " + triple(i, j, k);
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::int64_t expected = (j == alphabet_.dual_index(i)) ? 1 : 0;
            if ((*this)(zero, i, j) != expected) return "unit axiom violated at " + triple(zero, i, j);
        }
    // sum_s N_{i j s*} N_{s k l} must be symmetric in (i, j, k, l); it suffices
    // to compare against the transposition (j k), which with the S3 symmetry of
    // N generates all permutations.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    std::int64_t s_channel = 0, t_channel = 0;
                    for (std::size_t s = 0; s < n; ++s) {
                        const std::size_t ds = alphabet_.dual_index(s);
                        s_channel += (*this)(i, j, ds) * (*this)(s, k, l);
                        t_channel += (*this)(i, k, ds) * (*this)(s, j, l);
                    }
                    if (s_channel != t_channel)
                        return "associativity violated at (" + name(i) + ", " + name(j) + ", " + name(k) + ", " +
                               name(l) + ")";
                }
    return std::nullopt;
}

FusionRing fusion_table(const FusionAlphabet& a) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> coeffs(n * n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [nu, m] : fusion_product(a, a.labels()[i], a.labels()[j])) {
                const std::size_t k = a.dual_index(a.index_of(nu));
                coeffs[(i * n + j) * n + k] = m;
            }
    FusionRing ring(a, std::move(coeffs));
    if (auto bad = ring.find_axiom_violation())
        throw InvariantViolation("fusion table for " + a.root_system().name() + " at level " +
                                 std::to_string(a.level()) + ": " + *bad);
    return ring;
}

}  // namespace wzw
