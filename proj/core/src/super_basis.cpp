#include "gfsuper/super_basis.hpp"

#include <stdexcept>

namespace gfsuper {

std::uint32_t SuperBasis::add(BasisElement e) {
    if (by_name_.count(e.name)) throw std::invalid_argument("SuperBasis: duplicate name " + e.name);
    auto idx = static_cast<std::uint32_t>(elems_.size());
    by_name_[e.name] = idx;
    elems_.push_back(std::move(e));
    return idx;
}

std::optional<std::uint32_t> SuperBasis::index_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<Parity> SuperBasis::parities() const {
    std::vector<Parity> p;
    p.reserve(elems_.size());
    for (const auto& e : elems_) p.push_back(e.parity);
    return p;
}

void SignedVector::add(std::uint32_t i, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(i);
    if (it == terms_.end()) {
        terms_.emplace(i, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SignedVector::coeff(std::uint32_t i) const {
    auto it = terms_.find(i);
    return it == terms_.end() ? Rational(0) : it->second;
}

SignedVector& SignedVector::operator+=(const SignedVector& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

SignedVector SignedVector::operator*(const Rational& s) const {
    SignedVector out;
    if (s.is_zero()) return out;
    for (const auto& [i, c] : terms_) out.terms_.emplace(i, c * s);
    return out;
}

int koszul_sign(std::vector<std::uint32_t> word, const std::vector<Parity>& parities) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            if (parities[word[j]] == Parity::Odd && parities[word[j - 1]] == Parity::Odd) sign = -sign;
            std::swap(word[j], word[j - 1]);
        }
    return sign;
}

std::vector<ExtMonomial> super_exterior_basis(const std::vector<Parity>& parities, int degree) {
    std::vector<ExtMonomial> out;
    ExtMonomial cur;
    auto n = static_cast<std::uint32_t>(parities.size());
    // Depth-first in lexicographic order; even generators may not repeat.
    auto rec = [&](auto&& self, std::uint32_t min_next, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t g = min_next; g < n; ++g) {
            cur.push_back(g);
            self(self, parities[g] == Parity::Even ? g + 1 : g, remaining - 1);
            cur.pop_back();
        }
    };
    if (degree >= 0) rec(rec, 0, degree);
    return out;
}

std::optional<std::pair<ExtMonomial, int>> exterior_normalize(std::vector<std::uint32_t> word,
                                                              const std::vector<Parity>& parities) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            // Swap sign (-1)^{(p_a+1)(p_b+1)}: -1 only when both factors are even
            // (duals of odd generators commute with everything).
            if (parities[word[j]] == Parity::Even && parities[word[j - 1]] == Parity::Even)
                sign = -sign;
            std::swap(word[j], word[j - 1]);
        }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1] && parities[word[i]] == Parity::Even) return std::nullopt;
    return std::make_pair(std::move(word), sign);
}

std::optional<std::pair<ExtMonomial, int>> wedge_normalize(std::vector<std::uint32_t> word,
                                                           const std::vector<Parity>& parities) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            // -(-1)^{p_a p_b}: flips unless both factors are odd.
            if (parities[word[j]] == Parity::Even || parities[word[j - 1]] == Parity::Even)
                sign = -sign;
            std::swap(word[j], word[j - 1]);
        }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1] && parities[word[i]] == Parity::Even) return std::nullopt;
    return std::make_pair(std::move(word), sign);
}

std::vector<ExtMonomial> super_symmetric_basis(const std::vector<Parity>& parities, int degree) {
    std::vector<ExtMonomial> out;
    ExtMonomial cur;
    auto n = static_cast<std::uint32_t>(parities.size());
    auto rec = [&](auto&& self, std::uint32_t min_next, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t g = min_next; g < n; ++g) {
            cur.push_back(g);
            self(self, parities[g] == Parity::Odd ? g + 1 : g, remaining - 1);
            cur.pop_back();
        }
    };
    if (degree >= 0) rec(rec, 0, degree);
    return out;
}

std::optional<std::pair<ExtMonomial, int>> sym_normalize(std::vector<std::uint32_t> word,
                                                         const std::vector<Parity>& parities) {
    int sign = 1;
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t j = i; j > 0 && word[j] < word[j - 1]; --j) {
            if (parities[word[j]] == Parity::Odd && parities[word[j - 1]] == Parity::Odd)
                sign = -sign;
            std::swap(word[j], word[j - 1]);
        }
    for (std::size_t i = 1; i < word.size(); ++i)
        if (word[i] == word[i - 1] && parities[word[i]] == Parity::Odd) return std::nullopt;
    return std::make_pair(std::move(word), sign);
}

Parity exterior_total_parity(const ExtMonomial& mono, const std::vector<Parity>& parities) {
    int t = 0;
    for (auto g : mono) t += (parities[g] == Parity::Odd) ? 0 : 1;
    return (t % 2) ? Parity::Odd : Parity::Even;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

SparseMatrix super_tensor_power_action(const SparseMatrix& rho, Parity op_parity,
                                       const std::vector<Parity>& parities, int k) {
    auto n = static_cast<std::uint32_t>(parities.size());
    if (rho.nrows() != n || rho.ncols() != n)
        throw std::invalid_argument("super_tensor_power_action: operator shape mismatch");
    std::vector<std::vector<std::pair<std::uint32_t, const Rational*>>> cols(n);
    for (const auto& [rc, v] : rho.entries()) cols[rc.second].emplace_back(rc.first, &v);

    auto dim = pow_u64(n, k);
    SparseMatrix out(static_cast<SparseMatrix::Index>(dim), static_cast<SparseMatrix::Index>(dim));
    std::vector<std::uint32_t> t(static_cast<std::size_t>(k), 0);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        // Decode big-endian tuple.
        std::uint64_t rem = idx;
        for (int j = k - 1; j >= 0; --j) {
            t[j] = static_cast<std::uint32_t>(rem % n);
            rem /= n;
        }
        int sign = 1;
        std::uint64_t stride = (k > 0) ? pow_u64(n, k - 1) : 0;
        for (int j = 0; j < k; ++j) {
            for (const auto& [r, v] : cols[t[j]]) {
                std::uint64_t out_idx = idx + (static_cast<std::uint64_t>(r) - t[j]) * stride;
                Rational val = (sign < 0) ? -*v : *v;
                out.add(static_cast<SparseMatrix::Index>(out_idx),
                        static_cast<SparseMatrix::Index>(idx), val);
            }
            if (op_parity == Parity::Odd && parities[t[j]] == Parity::Odd) sign = -sign;
            stride /= n;
        }
    }
    return out;
}

SparseMatrix super_permutation_action(const std::vector<std::uint32_t>& sigma,
                                      const std::vector<Parity>& parities, bool with_sgn) {
    auto n = static_cast<std::uint32_t>(parities.size());
    int k = static_cast<int>(sigma.size());
    auto dim = pow_u64(n, k);
    int base = with_sgn ? permutation_sign(sigma) : 1;
    SparseMatrix out(static_cast<SparseMatrix::Index>(dim), static_cast<SparseMatrix::Index>(dim));
    std::vector<std::uint32_t> t(sigma.size(), 0), u(sigma.size(), 0);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        std::uint64_t rem = idx;
        for (int j = k - 1; j >= 0; --j) {
            t[j] = static_cast<std::uint32_t>(rem % n);
            rem /= n;
        }
        int sign = base;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (sigma[i] > sigma[j] && parities[t[i]] == Parity::Odd &&
                    parities[t[j]] == Parity::Odd)
                    sign = -sign;
        for (int j = 0; j < k; ++j) u[sigma[j]] = t[j];
        std::uint64_t out_idx = 0;
        for (int j = 0; j < k; ++j) out_idx = out_idx * n + u[j];
        out.add(static_cast<SparseMatrix::Index>(out_idx), static_cast<SparseMatrix::Index>(idx),
                Rational(sign));
    }
    return out;
}

int permutation_sign(const std::vector<std::uint32_t>& sigma) {
    int sign = 1;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        for (std::size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) sign = -sign;
    return sign;
}

}  // namespace gfsuper
