#include "gfsuper/lie_superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gfsuper {

const SignedVector LieSuperalgebra::zero_{};

LieSuperalgebra::LieSuperalgebra(SuperBasis basis,
                                 std::map<std::pair<std::uint32_t, std::uint32_t>, SignedVector> table,
                                 SignedVector euler, std::vector<SignedVector> cartan,
                                 std::vector<std::vector<int>> characters, AlgebraInfo info)
    : basis_(std::move(basis)),
      table_(std::move(table)),
      euler_(std::move(euler)),
      cartan_(std::move(cartan)),
      characters_(std::move(characters)),
      info_(std::move(info)) {
    validate();
}

const SignedVector& LieSuperalgebra::bracket(std::uint32_t i, std::uint32_t j) const {
    auto it = table_.find({i, j});
    return it == table_.end() ? zero_ : it->second;
}

SignedVector LieSuperalgebra::bracket(const SignedVector& a, const SignedVector& b) const {
    SignedVector out;
    for (const auto& [i, ci] : a.terms())
        for (const auto& [j, cj] : b.terms()) out += bracket(i, j) * (ci * cj);
    return out;
}

void LieSuperalgebra::validate() const {
    auto n = static_cast<std::uint32_t>(basis_.size());
    if (characters_.size() != n)
        throw std::logic_error("LieSuperalgebra: character table size mismatch");

    auto wt = [&](std::uint32_t i) { return basis_.weight(i); };
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            const auto& br = bracket(i, j);
            // Super-antisymmetry: odd-odd brackets are symmetric, all others flip.
            int s = (basis_.parity(i) == Parity::Odd && basis_.parity(j) == Parity::Odd) ? -1 : 1;
            SignedVector sym = br;
            sym += bracket(j, i) * Rational(s);
            if (!sym.is_zero())
                throw std::logic_error("LieSuperalgebra: antisymmetry fails at pair " +
                                       basis_[i].name + ", " + basis_[j].name);
            // Weight and character additivity.
            for (const auto& [k, c] : br.terms()) {
                if (wt(k) != wt(i) + wt(j))
                    throw std::logic_error("LieSuperalgebra: bracket does not add weights at " +
                                           basis_[i].name + ", " + basis_[j].name);
                for (std::size_t t = 0; t < cartan_.size(); ++t)
                    if (characters_[k][t] != characters_[i][t] + characters_[j][t])
                        throw std::logic_error("LieSuperalgebra: bracket does not add characters at " +
                                               basis_[i].name + ", " + basis_[j].name);
                if (basis_.parity(k) != parity_product(basis_.parity(i), basis_.parity(j)))
                    throw std::logic_error("LieSuperalgebra: bracket parity mismatch at " +
                                           basis_[i].name + ", " + basis_[j].name);
            }
        }

    // The diagonal family: commuting, and ad acts diagonally with the
    // declared characters; the Euler element with the declared weights.
    for (const auto& s : cartan_)
        for (const auto& t : cartan_)
            if (!bracket(s, t).is_zero())
                throw std::logic_error("LieSuperalgebra: diagonal family does not commute");
    for (std::uint32_t j = 0; j < n; ++j) {
        SignedVector unit;
        unit.add(j, Rational(1));
        SignedVector e = bracket(euler_, unit);
        e += unit * Rational(-wt(j));
        if (!e.is_zero())
            throw std::logic_error("LieSuperalgebra: Euler weight mismatch at " + basis_[j].name);
        for (std::size_t t = 0; t < cartan_.size(); ++t) {
            SignedVector c = bracket(cartan_[t], unit);
            c += unit * Rational(-characters_[j][t]);
            if (!c.is_zero())
                throw std::logic_error("LieSuperalgebra: character mismatch at " + basis_[j].name);
        }
    }

    // Super Jacobi [[x,y],z] = [x,[y,z]] - (-1)^{xy}[y,[x,z]] on all triples
    // whose intermediate brackets cannot have been truncated.
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i; j < n; ++j)
            for (std::uint32_t k = j; k < n; ++k) {
                if (!info_.exact) {
                    int wij = wt(i) + wt(j), wik = wt(i) + wt(k), wjk = wt(j) + wt(k);
                    if (wij > info_.dmax || wik > info_.dmax || wjk > info_.dmax) continue;
                    if (wt(i) + wt(j) + wt(k) > info_.dmax) continue;
                }
                SignedVector vi, vj, vk;
                vi.add(i, Rational(1));
                vj.add(j, Rational(1));
                vk.add(k, Rational(1));
                SignedVector lhs = bracket(bracket(vi, vj), vk);
                lhs += bracket(vi, bracket(vj, vk)) * Rational(-1);
                int s = (basis_.parity(i) == Parity::Odd && basis_.parity(j) == Parity::Odd) ? 1 : -1;
                lhs += bracket(vj, bracket(vi, vk)) * Rational(-s);
                if (!lhs.is_zero())
                    throw std::logic_error("LieSuperalgebra: Jacobi fails at triple " +
                                           basis_[i].name + ", " + basis_[j].name + ", " +
                                           basis_[k].name);
            }
}

AlgebraPtr gl(int m, int n) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("gl: need m+n >= 1");
    int d = m + n;
    auto bar = [&](int i) { return i >= m; };  // 0-based row/col index parity
    SuperBasis basis;
    std::vector<std::vector<int>> characters;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            std::ostringstream name;
            name << "E" << (i + 1) << "_" << (j + 1);
            basis.add({name.str(), (bar(i) ^ bar(j)) ? Parity::Odd : Parity::Even, 0});
            std::vector<int> chi(d, 0);
            chi[i] += 1;
            chi[j] -= 1;
            characters.push_back(std::move(chi));
        }
    auto idx = [&](int i, int j) { return static_cast<std::uint32_t>(i * d + j); };

    std::map<std::pair<std::uint32_t, std::uint32_t>, SignedVector> table;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k)
                for (int l = 0; l < d; ++l) {
                    SignedVector br;
                    if (j == k) br.add(idx(i, l), Rational(1));
                    int sign = ((bar(i) ^ bar(j)) && (bar(k) ^ bar(l))) ? -1 : 1;
                    if (l == i) br.add(idx(k, j), Rational(-sign));
                    if (!br.is_zero()) table[{idx(i, j), idx(k, l)}] = std::move(br);
                }

    SignedVector euler;
    std::vector<SignedVector> cartan;
    for (int i = 0; i < d; ++i) {
        euler.add(idx(i, i), Rational(1));
        SignedVector t;
        t.add(idx(i, i), Rational(1));
        cartan.push_back(std::move(t));
    }
    AlgebraInfo info{"gl", m, n, 0, true};
    return std::make_shared<const LieSuperalgebra>(std::move(basis), std::move(table),
                                                   std::move(euler), std::move(cartan),
                                                   std::move(characters), std::move(info));
}

namespace {

// Monomial vector field x^a xi^mask d/d(dvar); dvar < m is d/dx, else d/dxi.
struct FieldMono {
    std::vector<int> a;
    unsigned mask;
    int dvar;
    bool operator<(const FieldMono& o) const {
        return std::tie(a, mask, dvar) < std::tie(o.a, o.mask, o.dvar);
    }
};

int popcount(unsigned v) { return std::popcount(v); }

// Sign of sorting the concatenation xi^A xi^B: (-1)^{#(p in A, q in B, p>q)}.
int interleave_sign(unsigned A, unsigned B) {
    int inv = 0;
    for (int q = 0; q < 32; ++q)
        if (B & (1u << q)) inv += popcount(A >> (q + 1));
    return inv % 2 ? -1 : 1;
}

struct FieldTerm {
    FieldMono mono;
    long coef;
};

// f * d(g)/d(u) * d/d(v), one term of the Leibniz bracket; empty when zero.
std::vector<FieldTerm> derive_and_multiply(const FieldMono& f, const FieldMono& g, int m) {
    int u = f.dvar;
    std::vector<int> ga = g.a;
    unsigned gmask = g.mask;
    long coef = 1;
    if (u < m) {
        if (ga[u] == 0) return {};
        coef = ga[u];
        ga[u] -= 1;
    } else {
        unsigned bit = 1u << (u - m);
        if (!(gmask & bit)) return {};
        coef = (popcount(gmask & (bit - 1)) % 2) ? -1 : 1;
        gmask &= ~bit;
    }
    if (f.mask & gmask) return {};
    FieldTerm t;
    t.mono.a.resize(f.a.size());
    for (std::size_t i = 0; i < f.a.size(); ++i) t.mono.a[i] = f.a[i] + ga[i];
    t.mono.mask = f.mask | gmask;
    t.mono.dvar = g.dvar;
    t.coef = coef * interleave_sign(f.mask, gmask);
    return {t};
}

int field_degree(const FieldMono& f) {
    int d = popcount(f.mask);
    for (int v : f.a) d += v;
    return d;
}

Parity field_parity(const FieldMono& f, int m) {
    int p = popcount(f.mask) + (f.dvar >= m ? 1 : 0);
    return p % 2 ? Parity::Odd : Parity::Even;
}

// Full (untruncated) Leibniz bracket of two monomial fields.
std::vector<FieldTerm> field_bracket(const FieldMono& F, const FieldMono& G, int m) {
    std::vector<FieldTerm> out = derive_and_multiply(F, G, m);
    int sign = (field_parity(F, m) == Parity::Odd && field_parity(G, m) == Parity::Odd) ? 1 : -1;
    for (auto t : derive_and_multiply(G, F, m)) {
        t.coef *= sign;
        out.push_back(t);
    }
    return out;
}

std::string field_name(const FieldMono& f, int m) {
    std::ostringstream s;
    for (std::size_t i = 0; i < f.a.size(); ++i) {
        if (f.a[i] == 0) continue;
        s << "x" << (i + 1);
        if (f.a[i] > 1) s << "^" << f.a[i];
        s << "*";
    }
    for (int j = 0; j < 32; ++j)
        if (f.mask & (1u << j)) s << "xi" << (j + 1) << "*";
    if (f.dvar < m)
        s << "dx" << (f.dvar + 1);
    else
        s << "dxi" << (f.dvar - m + 1);
    return s.str();
}

void exponents_rec(int m, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m - 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        exponents_rec(m, total - v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> exponent_vectors(int m, int total) {
    if (m == 0) {
        if (total == 0) return {{}};
        return {};
    }
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    exponents_rec(m, total, cur, out);
    return out;
}

}  // namespace

AlgebraPtr vect_truncated(int m, int n, int dmax) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("vect_truncated: need m+n >= 1");
    if (dmax < 0) throw std::invalid_argument("vect_truncated: dmax must be >= 0");

    SuperBasis basis;
    std::vector<FieldMono> monos;
    std::map<FieldMono, std::uint32_t> index;
    std::vector<std::vector<int>> characters;
    for (int deg = 0; deg <= dmax + 1; ++deg) {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (popcount(mask) > deg) continue;
            for (const auto& a : exponent_vectors(m, deg - popcount(mask))) {
                for (int dvar = 0; dvar < m + n; ++dvar) {
                    FieldMono f{a, mask, dvar};
                    auto id = basis.add({field_name(f, m), field_parity(f, m), deg - 1});
                    index[f] = id;
                    monos.push_back(f);
                    std::vector<int> chi(m + n, 0);
                    for (int i = 0; i < m; ++i) chi[i] = a[i];
                    for (int j = 0; j < n; ++j) chi[m + j] = (mask >> j) & 1;
                    chi[dvar] -= 1;
                    characters.push_back(std::move(chi));
                }
            }
        }
    }

    bool exact = true;
    std::map<std::pair<std::uint32_t, std::uint32_t>, SignedVector> table;
    auto dim = static_cast<std::uint32_t>(monos.size());
    for (std::uint32_t i = 0; i < dim; ++i)
        for (std::uint32_t j = 0; j < dim; ++j) {
            // Cancel duplicate monomials first so the exactness flag only
            // reacts to terms that actually survive.
            std::map<FieldMono, long> net;
            for (const auto& t : field_bracket(monos[i], monos[j], m)) net[t.mono] += t.coef;
            SignedVector br;
            for (const auto& [mono, coef] : net) {
                if (coef == 0) continue;
                if (field_degree(mono) - 1 > dmax) {
                    exact = false;
                    continue;
                }
                br.add(index.at(mono), Rational(coef));
            }
            if (!br.is_zero()) table[{i, j}] = std::move(br);
        }

    SignedVector euler;
    std::vector<SignedVector> cartan(m + n);
    for (std::uint32_t i = 0; i < dim; ++i) {
        const auto& f = monos[i];
        if (field_degree(f) != 1) continue;
        if (f.dvar < m && f.mask == 0 && f.a[f.dvar] == 1) {
            euler.add(i, Rational(1));
            cartan[f.dvar].add(i, Rational(1));
        } else if (f.dvar >= m && f.mask == (1u << (f.dvar - m))) {
            euler.add(i, Rational(1));
            cartan[f.dvar].add(i, Rational(1));
        }
    }

    AlgebraInfo info{"vect", m, n, dmax, exact};
    return std::make_shared<const LieSuperalgebra>(std::move(basis), std::move(table),
                                                   std::move(euler), std::move(cartan),
                                                   std::move(characters), std::move(info));
}

}  // namespace gfsuper
