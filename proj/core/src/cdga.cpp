#include "gfsuper/cdga.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "gfsuper/sparse_matrix.hpp"

namespace gfsuper {

CDGAModel::CDGAModel(std::vector<CDGAGenerator> generators, int truncation,
                     std::map<std::uint32_t, Poly> differential)
    : gens_(std::move(generators)), truncation_(truncation), diff_(std::move(differential)) {
    par_.reserve(gens_.size());
    for (const auto& g : gens_) par_.push_back(g.degree % 2 ? Parity::Odd : Parity::Even);
    validate();
}

const CDGAModel::Poly& CDGAModel::differential(std::uint32_t i) const {
    static const Poly zero;
    auto it = diff_.find(i);
    return it == diff_.end() ? zero : it->second;
}

int CDGAModel::mono_degree(const Mono& m) const {
    int d = 0;
    for (auto i : m) d += gens_[i].degree;
    return d;
}

int CDGAModel::poly_degree(const Mono& m) const {
    int d = 0;
    for (auto i : m)
        if (par_[i] == Parity::Even) d += gens_[i].degree;
    return d;
}

CDGAModel::Poly CDGAModel::d(const Mono& m) const {
    Poly out;
    int prefix = 1;
    for (std::size_t t = 0; t < m.size(); ++t) {
        for (const auto& [dm, c] : differential(m[t])) {
            Mono spliced;
            spliced.reserve(m.size() - 1 + dm.size());
            spliced.insert(spliced.end(), m.begin(), m.begin() + static_cast<long>(t));
            spliced.insert(spliced.end(), dm.begin(), dm.end());
            spliced.insert(spliced.end(), m.begin() + static_cast<long>(t) + 1, m.end());
            auto norm = sym_normalize(spliced, par_);
            if (!norm) continue;
            if (poly_degree(norm->first) > truncation_) continue;
            Rational v = c * Rational(prefix * norm->second);
            auto [it, fresh] = out.emplace(norm->first, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        if (par_[m[t]] == Parity::Odd) prefix = -prefix;
    }
    return out;
}

std::vector<CDGAModel::Mono> CDGAModel::basis(int degree) const {
    std::vector<Mono> out;
    Mono word;
    std::function<void(std::uint32_t, int, int)> rec = [&](std::uint32_t from, int rem, int polyrem) {
        if (rem == 0) {
            out.push_back(word);
            return;
        }
        for (std::uint32_t i = from; i < gens_.size(); ++i) {
            int gd = gens_[i].degree;
            if (gd > rem) continue;
            bool even = (par_[i] == Parity::Even);
            if (even && gd > polyrem) continue;
            word.push_back(i);
            rec(i + (even ? 0u : 1u), rem - gd, polyrem - (even ? gd : 0));
            word.pop_back();
        }
    };
    if (degree >= 0) rec(0, degree, truncation_);
    return out;
}

void CDGAModel::validate() {
    if (truncation_ < 0) throw std::invalid_argument("CDGAModel: negative truncation");
    std::set<std::string> names;
    for (const auto& g : gens_) {
        if (g.degree < 1) throw std::invalid_argument("CDGAModel: generator degrees must be positive");
        if (g.name.empty() || !names.insert(g.name).second)
            throw std::invalid_argument("CDGAModel: generator names must be distinct and nonempty");
    }

    // Normalize the given differential and check the degrees.
    std::map<std::uint32_t, Poly> clean;
    for (const auto& [i, poly] : diff_) {
        if (i >= gens_.size()) throw std::invalid_argument("CDGAModel: differential of an unknown generator");
        Poly np;
        for (const auto& [mono, c] : poly) {
            if (c.is_zero()) continue;
            for (auto j : mono)
                if (j >= gens_.size())
                    throw std::invalid_argument("CDGAModel: differential uses an unknown generator");
            if (mono_degree(mono) != gens_[i].degree + 1)
                throw std::invalid_argument("CDGAModel: differential must raise degree by one");
            auto norm = sym_normalize(mono, par_);
            if (!norm) continue;
            if (poly_degree(norm->first) > truncation_) continue;
            Rational v = c * Rational(norm->second);
            auto [it, fresh] = np.emplace(norm->first, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) np.erase(it);
            }
        }
        if (!np.empty()) clean.emplace(i, std::move(np));
    }
    diff_ = std::move(clean);

    for (std::uint32_t i = 0; i < gens_.size(); ++i) {
        Poly dd;
        for (const auto& [mono, c] : differential(i)) {
            for (const auto& [m2, c2] : d(mono)) {
                Rational v = c * c2;
                auto [it, fresh] = dd.emplace(m2, v);
                if (!fresh) {
                    it->second = it->second + v;
                    if (it->second.is_zero()) dd.erase(it);
                }
            }
        }
        if (!dd.empty())
            throw std::invalid_argument("CDGAModel: differential does not square to zero");
    }
}

CDGAModel skeleton_bundle_model(int m, int trunc) {
    if (m < 0) throw std::invalid_argument("skeleton_bundle_model: negative rank");
    if (trunc < 0) throw std::invalid_argument("skeleton_bundle_model: negative truncation");
    std::vector<CDGAGenerator> gens;
    std::map<std::uint32_t, CDGAModel::Poly> diff;
    for (int i = 1; i <= m; ++i)
        gens.push_back({"e" + std::to_string(2 * i - 1), 2 * i - 1});
    for (int i = 1; i <= m; ++i) {
        if (2 * i > trunc) continue;
        auto ci = static_cast<std::uint32_t>(gens.size());
        gens.push_back({"c" + std::to_string(i), 2 * i});
        diff[static_cast<std::uint32_t>(i - 1)] = {{CDGAModel::Mono{ci}, Rational(1)}};
    }
    return CDGAModel(std::move(gens), trunc, std::move(diff));
}

BettiTable cdga_cohomology(const CDGAModel& model, int P) {
    if (P < 0) throw std::invalid_argument("cdga_cohomology: negative degree range");

    std::vector<std::vector<CDGAModel::Mono>> bases(static_cast<std::size_t>(P) + 2);
    std::vector<std::map<CDGAModel::Mono, std::uint32_t>> index(bases.size());
    for (int q = 0; q <= P + 1; ++q) {
        bases[q] = model.basis(q);
        for (std::uint32_t i = 0; i < bases[q].size(); ++i) index[q].emplace(bases[q][i], i);
    }

    std::vector<long> ranks(static_cast<std::size_t>(P) + 1, 0);
    for (int q = 0; q <= P; ++q) {
        SparseMatrix D(static_cast<std::uint32_t>(bases[q + 1].size()),
                       static_cast<std::uint32_t>(bases[q].size()));
        for (std::uint32_t c = 0; c < bases[q].size(); ++c) {
            for (const auto& [mono, v] : model.d(bases[q][c])) {
                auto it = index[q + 1].find(mono);
                if (it == index[q + 1].end())
                    throw std::logic_error("cdga differential left the enumerated basis");
                D.add(it->second, c, v);
            }
        }
        ranks[q] = D.rank();
    }

    BettiTable t;
    t.range = P;
    t.dims.assign(static_cast<std::size_t>(P) + 1, 0);
    for (int q = 0; q <= P; ++q) {
        long d = static_cast<long>(bases[q].size()) - ranks[q];
        if (q > 0) d -= ranks[q - 1];
        t.dims[static_cast<std::size_t>(q)] = d;
    }
    return t;
}

BettiTable suspend(const BettiTable& b, int N) {
    if (N < 0) throw std::invalid_argument("suspend: negative shift");
    if (N == 0) return b;
    BettiTable r;
    if (b.empty_space) {
        r.range = std::max(N - 1, 0);
        r.dims.assign(static_cast<std::size_t>(r.range) + 1, 0);
        r.dims[0] += 1;
        r.dims[static_cast<std::size_t>(N - 1)] += 1;
        return r;
    }
    int br = std::max(b.range, static_cast<int>(b.dims.size()) - 1);
    r.range = br + N;
    r.dims.assign(static_cast<std::size_t>(r.range) + 1, 0);
    r.dims[0] = 1;
    for (int i = 1; i <= br; ++i) r.dims[static_cast<std::size_t>(i + N)] = b.at(i);
    r.dims[static_cast<std::size_t>(N)] += b.at(0) - 1;
    return r;
}

std::vector<long> exterior_poincare(const std::vector<int>& degrees) {
    std::vector<long> coef{1};
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("exterior_poincare: negative degree");
        std::vector<long> next(coef.size() + static_cast<std::size_t>(d), 0);
        for (std::size_t i = 0; i < coef.size(); ++i) {
            next[i] += coef[i];
            next[i + static_cast<std::size_t>(d)] += coef[i];
        }
        coef = std::move(next);
    }
    return coef;
}

BettiTable predicted_betti(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("predicted_betti: negative dimensions");
    if (m < n) return suspend(BettiTable::empty(), 2 * n);
    if (m == n) {
        std::vector<int> degs;
        for (int i = 1; i <= m; ++i) degs.push_back(2 * i - 1);
        return suspend(BettiTable::of_dims(exterior_poincare(degs)), 2 * n);
    }
    int trunc = 2 * (m - n);
    CDGAModel model = skeleton_bundle_model(m, trunc);
    // Largest possible monomial degree: all odd generators plus a polynomial
    // part of degree trunc.
    int top = m * m + trunc;
    return suspend(cdga_cohomology(model, top), 2 * n);
}

}  // namespace gfsuper
