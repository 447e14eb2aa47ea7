#include "gfsuper/super_module.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gfsuper {

SuperModule::SuperModule(AlgebraPtr g, SuperBasis basis, std::vector<SparseMatrix> action,
                         std::vector<std::vector<int>> characters)
    : g_(std::move(g)), basis_(std::move(basis)), action_(std::move(action)),
      characters_(std::move(characters)) {
    validate();
}

SparseMatrix SuperModule::action(const SignedVector& x) const {
    SparseMatrix out(dim(), dim());
    for (const auto& [i, c] : x.terms()) out = out + action_[i].scaled(c);
    return out;
}

void SuperModule::validate() const {
    const auto& g = *g_;
    auto gdim = static_cast<std::uint32_t>(g.dim());
    auto d = dim();
    if (action_.size() != gdim) throw std::logic_error("SuperModule: one action matrix per algebra element required");
    if (characters_.size() != d) throw std::logic_error("SuperModule: character table size mismatch");
    for (std::uint32_t x = 0; x < gdim; ++x) {
        const auto& mat = action_[x];
        if (mat.nrows() != d || mat.ncols() != d)
            throw std::logic_error("SuperModule: action matrix shape mismatch");
        for (const auto& [rc, v] : mat.entries()) {
            auto r = rc.first, c = rc.second;
            if (basis_.parity(r) != parity_product(basis_.parity(c), g.basis().parity(x)))
                throw std::logic_error("SuperModule: action is not parity homogeneous");
            if (basis_.weight(r) != basis_.weight(c) + g.basis().weight(x))
                throw std::logic_error("SuperModule: action does not shift weights correctly");
            for (std::size_t t = 0; t < g.cartan().size(); ++t)
                if (characters_[r][t] != characters_[c][t] + g.character(x)[t])
                    throw std::logic_error("SuperModule: action does not shift characters correctly");
        }
    }

    SparseMatrix euler_diag(d, d), actual = action(g.euler());
    for (std::uint32_t v = 0; v < d; ++v) euler_diag.set(v, v, Rational(basis_.weight(v)));
    if (!(actual == euler_diag)) throw std::logic_error("SuperModule: Euler element is not diagonal with the declared weights");
    for (std::size_t t = 0; t < g.cartan().size(); ++t) {
        SparseMatrix diag(d, d);
        for (std::uint32_t v = 0; v < d; ++v) diag.set(v, v, Rational(characters_[v][t]));
        if (!(action(g.cartan()[t]) == diag))
            throw std::logic_error("SuperModule: diagonal family member is not diagonal with the declared characters");
    }

    for (std::uint32_t i = 0; i < gdim; ++i)
        for (std::uint32_t j = i; j < gdim; ++j) {
            int s = (g.basis().parity(i) == Parity::Odd && g.basis().parity(j) == Parity::Odd) ? 1 : -1;
            SparseMatrix lhs = action_[i] * action_[j] + (action_[j] * action_[i]).scaled(Rational(s));
            if (!(lhs == action(g.bracket(i, j))))
                throw std::logic_error("SuperModule: representation identity fails at pair " +
                                       g.basis()[i].name + ", " + g.basis()[j].name);
        }
}

SuperModule trivial_module(AlgebraPtr g) {
    SuperBasis b;
    b.add({"1", Parity::Even, 0});
    std::vector<SparseMatrix> action(g->dim(), SparseMatrix(1, 1));
    std::vector<std::vector<int>> chars{std::vector<int>(g->cartan().size(), 0)};
    return SuperModule(std::move(g), std::move(b), std::move(action), std::move(chars));
}

SuperModule standard_module(AlgebraPtr g) {
    if (g->info().kind != "gl") throw std::invalid_argument("standard_module: defined for gl(m,n)");
    int m = g->info().m, n = g->info().n, d = m + n;
    SuperBasis b;
    std::vector<std::vector<int>> chars;
    for (int i = 0; i < d; ++i) {
        b.add({"v" + std::to_string(i + 1), i < m ? Parity::Even : Parity::Odd, 1});
        std::vector<int> chi(d, 0);
        chi[i] = 1;
        chars.push_back(std::move(chi));
    }
    std::vector<SparseMatrix> action;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            SparseMatrix mat(d, d);
            mat.set(i, j, Rational(1));
            action.push_back(std::move(mat));
        }
    return SuperModule(std::move(g), std::move(b), std::move(action), std::move(chars));
}

SuperModule dual_module(const SuperModule& M) {
    auto d = M.dim();
    const auto& g = M.algebra();
    SuperBasis b;
    std::vector<std::vector<int>> chars;
    for (std::uint32_t i = 0; i < d; ++i) {
        b.add({M.basis()[i].name + "'", M.basis().parity(i), -M.basis().weight(i)});
        std::vector<int> chi = M.character(i);
        for (auto& v : chi) v = -v;
        chars.push_back(std::move(chi));
    }
    std::vector<SparseMatrix> action;
    for (std::uint32_t x = 0; x < g.dim(); ++x) {
        SparseMatrix mat(d, d);
        bool xodd = g.basis().parity(x) == Parity::Odd;
        for (const auto& [rc, v] : M.action(x).entries()) {
            auto i = rc.first, j = rc.second;
            bool fodd = M.basis().parity(i) == Parity::Odd;
            mat.add(j, i, (xodd && fodd) ? v : -v);
        }
        action.push_back(std::move(mat));
    }
    return SuperModule(M.algebra_ptr(), std::move(b), std::move(action), std::move(chars));
}

SuperModule tensor_module(const SuperModule& M, const SuperModule& N) {
    if (M.algebra_ptr().get() != N.algebra_ptr().get())
        throw std::invalid_argument("tensor_module: factors over different algebras");
    const auto& g = M.algebra();
    auto dm = M.dim(), dn = N.dim();
    auto d = dm * dn;
    SuperBasis b;
    std::vector<std::vector<int>> chars;
    for (std::uint32_t i = 0; i < dm; ++i)
        for (std::uint32_t j = 0; j < dn; ++j) {
            b.add({M.basis()[i].name + "|" + N.basis()[j].name,
                   parity_product(M.basis().parity(i), N.basis().parity(j)),
                   M.basis().weight(i) + N.basis().weight(j)});
            std::vector<int> chi = M.character(i);
            for (std::size_t t = 0; t < chi.size(); ++t) chi[t] += N.character(j)[t];
            chars.push_back(std::move(chi));
        }
    std::vector<SparseMatrix> action;
    for (std::uint32_t x = 0; x < g.dim(); ++x) {
        SparseMatrix mat(d, d);
        bool xodd = g.basis().parity(x) == Parity::Odd;
        for (const auto& [rc, v] : M.action(x).entries())
            for (std::uint32_t j = 0; j < dn; ++j)
                mat.add(rc.first * dn + j, rc.second * dn + j, v);
        for (const auto& [rc, v] : N.action(x).entries())
            for (std::uint32_t i = 0; i < dm; ++i) {
                bool iodd = M.basis().parity(i) == Parity::Odd;
                mat.add(i * dn + rc.first, i * dn + rc.second, (xodd && iodd) ? -v : v);
            }
        action.push_back(std::move(mat));
    }
    return SuperModule(M.algebra_ptr(), std::move(b), std::move(action), std::move(chars));
}

namespace {

// Shared derivation action on power monomials; normalize re-sorts a word
// after one factor is replaced, with the convention of the power in use.
template <typename Normalize>
SuperModule power_module(const SuperModule& M, int p, const std::vector<ExtMonomial>& monos,
                         const char* sep, Normalize&& normalize) {
    const auto& g = M.algebra();
    auto par = M.basis().parities();
    std::map<ExtMonomial, std::uint32_t> index;
    SuperBasis b;
    std::vector<std::vector<int>> chars;
    for (const auto& mono : monos) {
        index[mono] = static_cast<std::uint32_t>(index.size());
        std::string name;
        int weight = 0, ptot = 0;
        std::vector<int> chi(g.cartan().size(), 0);
        for (auto f : mono) {
            if (!name.empty()) name += sep;
            name += M.basis()[f].name;
            weight += M.basis().weight(f);
            ptot += M.basis().parity(f) == Parity::Odd ? 1 : 0;
            for (std::size_t t = 0; t < chi.size(); ++t) chi[t] += M.character(f)[t];
        }
        if (mono.empty()) name = "1";
        b.add({name, ptot % 2 ? Parity::Odd : Parity::Even, weight});
        chars.push_back(std::move(chi));
    }
    auto d = static_cast<std::uint32_t>(monos.size());

    std::vector<SparseMatrix> action;
    for (std::uint32_t x = 0; x < g.dim(); ++x) {
        bool xodd = g.basis().parity(x) == Parity::Odd;
        std::vector<std::vector<std::pair<std::uint32_t, const Rational*>>> cols(M.dim());
        for (const auto& [rc, v] : M.action(x).entries()) cols[rc.second].emplace_back(rc.first, &v);
        SparseMatrix mat(d, d);
        for (std::uint32_t c = 0; c < d; ++c) {
            const auto& mono = monos[c];
            int prefix = 1;
            for (int t = 0; t < p; ++t) {
                for (const auto& [r, v] : cols[mono[t]]) {
                    auto word = mono;
                    word[t] = r;
                    if (auto norm = normalize(std::move(word), par))
                        mat.add(index.at(norm->first), c, *v * Rational(prefix * norm->second));
                }
                if (xodd && par[mono[t]] == Parity::Odd) prefix = -prefix;
            }
        }
        action.push_back(std::move(mat));
    }
    return SuperModule(M.algebra_ptr(), std::move(b), std::move(action), std::move(chars));
}

}  // namespace

SuperModule exterior_power_module(const SuperModule& M, int p) {
    if (p < 0) throw std::invalid_argument("exterior_power_module: p must be >= 0");
    auto monos = super_exterior_basis(M.basis().parities(), p);
    return power_module(M, p, monos, "^",
                        [](std::vector<std::uint32_t> w, const std::vector<Parity>& par) {
                            return wedge_normalize(std::move(w), par);
                        });
}

SuperModule symmetric_power_module(const SuperModule& M, int p) {
    if (p < 0) throw std::invalid_argument("symmetric_power_module: p must be >= 0");
    auto monos = super_symmetric_basis(M.basis().parities(), p);
    return power_module(M, p, monos, "*",
                        [](std::vector<std::uint32_t> w, const std::vector<Parity>& par) {
                            return sym_normalize(std::move(w), par);
                        });
}

namespace {

// All permutations fixing each block of positions setwise, as full
// permutations of 0..k-1; sorted enumeration per block for determinism.
std::vector<std::vector<std::uint32_t>> block_permutations(
    const std::vector<std::vector<std::uint32_t>>& blocks, int k) {
    std::vector<std::uint32_t> identity(k);
    for (int i = 0; i < k; ++i) identity[i] = i;
    std::vector<std::vector<std::uint32_t>> out{identity};
    for (const auto& block : blocks) {
        std::vector<std::uint32_t> arr = block;
        std::vector<std::vector<std::uint32_t>> next;
        std::sort(arr.begin(), arr.end());
        do {
            for (auto sigma : out) {
                for (std::size_t t = 0; t < block.size(); ++t) sigma[block[t]] = arr[t];
                next.push_back(std::move(sigma));
            }
        } while (std::next_permutation(arr.begin(), arr.end()));
        out = std::move(next);
    }
    return out;
}

// Exact solve of B X = Y where the columns of B are independent.
SparseMatrix solve_columns(const SparseMatrix& B, const SparseMatrix& Y) {
    auto nrows = B.nrows();
    auto r = B.ncols(), c = Y.ncols();
    std::vector<std::vector<Rational>> aug(nrows, std::vector<Rational>(r + c));
    for (const auto& [rc, v] : B.entries()) aug[rc.first][rc.second] = v;
    for (const auto& [rc, v] : Y.entries()) aug[rc.first][r + rc.second] = v;

    std::vector<std::uint32_t> pivot_row(r);
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < r; ++col) {
        std::uint32_t p = rank;
        while (p < nrows && aug[p][col].is_zero()) ++p;
        if (p == nrows) throw std::logic_error("solve_columns: columns are not independent");
        std::swap(aug[p], aug[rank]);
        Rational inv = Rational(1) / aug[rank][col];
        for (auto& v : aug[rank]) v *= inv;
        for (std::uint32_t q = 0; q < nrows; ++q) {
            if (q == rank || aug[q][col].is_zero()) continue;
            Rational f = aug[q][col];
            for (std::uint32_t t = col; t < r + c; ++t) aug[q][t] -= f * aug[rank][t];
        }
        pivot_row[col] = rank;
        ++rank;
    }
    for (std::uint32_t q = rank; q < nrows; ++q)
        for (std::uint32_t t = r; t < r + c; ++t)
            if (!aug[q][t].is_zero())
                throw std::logic_error("solve_columns: right-hand side is outside the column span");
    SparseMatrix X(r, c);
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < c; ++j)
            if (!aug[pivot_row[i]][r + j].is_zero()) X.set(i, j, aug[pivot_row[i]][r + j]);
    return X;
}

}  // namespace

SuperModule schur_module(const SuperModule& M, const Partition& lambda) {
    const auto& g = M.algebra();
    int k = lambda.size();
    if (k == 0) return trivial_module(M.algebra_ptr());
    auto par = M.basis().parities();
    auto n = static_cast<std::uint32_t>(par.size());
    std::uint64_t dimT = 1;
    for (int i = 0; i < k; ++i) dimT *= n;

    // Canonical tableau numbered row-major; row and column position blocks.
    std::vector<std::vector<std::uint32_t>> rows, cols;
    {
        std::uint32_t next = 0;
        for (int i = 1; i <= lambda.height(); ++i) {
            std::vector<std::uint32_t> row;
            for (int j = 0; j < lambda.row(i); ++j) row.push_back(next++);
            rows.push_back(std::move(row));
        }
        auto lt = transpose(lambda);
        for (int j = 1; j <= lt.height(); ++j) {
            std::vector<std::uint32_t> col;
            std::uint32_t start = 0;
            for (int i = 1; i <= lt.row(j); ++i) {
                col.push_back(start + j - 1);
                start += lambda.row(i);
            }
            cols.push_back(std::move(col));
        }
    }

    SparseMatrix sym(dimT, dimT), antisym(dimT, dimT);
    for (const auto& sigma : block_permutations(rows, k))
        sym = sym + super_permutation_action(sigma, par, false);
    for (const auto& tau : block_permutations(cols, k))
        antisym = antisym + super_permutation_action(tau, par, true);
    SparseMatrix symmetrizer = antisym * sym;

    auto picked = symmetrizer.independent_columns();
    auto r = static_cast<std::uint32_t>(picked.size());
    SparseMatrix B(dimT, r);
    {
        std::map<SparseMatrix::Index, std::uint32_t> col_of;
        for (std::uint32_t t = 0; t < r; ++t) col_of[picked[t]] = t;
        for (const auto& [rc, v] : symmetrizer.entries()) {
            auto it = col_of.find(rc.second);
            if (it != col_of.end()) B.set(rc.first, it->second, v);
        }
    }

    // Basis bookkeeping: every image vector is homogeneous because the
    // symmetrizer only permutes tensor factors.
    SuperBasis basis;
    std::vector<std::vector<int>> chars;
    std::vector<std::vector<std::uint32_t>> support_tuple(r);
    for (const auto& [rc, v] : B.entries())
        if (support_tuple[rc.second].empty()) {
            std::vector<std::uint32_t> tuple(k);
            std::uint64_t rem = rc.first;
            for (int t = k - 1; t >= 0; --t) {
                tuple[t] = static_cast<std::uint32_t>(rem % n);
                rem /= n;
            }
            support_tuple[rc.second] = std::move(tuple);
        }
    for (std::uint32_t t = 0; t < r; ++t) {
        int weight = 0, ptot = 0;
        std::vector<int> chi(g.cartan().size(), 0);
        for (auto f : support_tuple[t]) {
            weight += M.basis().weight(f);
            ptot += M.basis().parity(f) == Parity::Odd ? 1 : 0;
            for (std::size_t s = 0; s < chi.size(); ++s) chi[s] += M.character(f)[s];
        }
        basis.add({"y" + std::to_string(t), ptot % 2 ? Parity::Odd : Parity::Even, weight});
        chars.push_back(std::move(chi));
    }

    std::vector<SparseMatrix> action;
    for (std::uint32_t x = 0; x < g.dim(); ++x) {
        auto lifted = super_tensor_power_action(M.action(x), g.basis().parity(x), par, k);
        action.push_back(solve_columns(B, lifted * B));
    }
    return SuperModule(M.algebra_ptr(), std::move(basis), std::move(action), std::move(chars));
}

SuperModule delta_module(AlgebraPtr g, const Partition& lambda) {
    auto std_mod = standard_module(g);
    auto left = schur_module(std_mod, lambda);
    auto right = schur_module(dual_module(std_mod), lambda);
    return tensor_module(left, right);
}

namespace {

// Rewrites a word of algebra generators into the normal form used by the
// coinduced module: any term with an even generator surviving on the far
// left is killed by the augmentation; odd generators are sorted ascending,
// with squares resolved through (1/2)[o,o].
std::map<unsigned, Rational> pbw_normalize(const std::vector<std::uint32_t>& start,
                                           const Rational& coef0, const LieSuperalgebra& g,
                                           const std::vector<int>& odd_pos) {
    std::map<unsigned, Rational> result;
    std::vector<std::pair<std::vector<std::uint32_t>, Rational>> work{{start, coef0}};
    while (!work.empty()) {
        auto [word, coef] = std::move(work.back());
        work.pop_back();
        if (coef.is_zero()) continue;

        std::size_t even_at = word.size();
        for (std::size_t i = 0; i < word.size(); ++i)
            if (g.basis().parity(word[i]) == Parity::Even) {
                even_at = i;
                break;
            }
        if (even_at == 0) continue;  // augmentation kills it
        if (even_at < word.size()) {
            // o x = x o + [o, x] with x even just right of an odd letter.
            auto swapped = word;
            std::swap(swapped[even_at - 1], swapped[even_at]);
            work.emplace_back(std::move(swapped), coef);
            for (const auto& [t, c] : g.bracket(word[even_at - 1], word[even_at]).terms()) {
                auto shorter = word;
                shorter[even_at - 1] = t;
                shorter.erase(shorter.begin() + static_cast<long>(even_at));
                work.emplace_back(std::move(shorter), coef * c);
            }
            continue;
        }

        bool reduced = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] == word[i + 1]) {
                for (const auto& [t, c] : g.bracket(word[i], word[i]).terms()) {
                    auto shorter = word;
                    shorter[i] = t;
                    shorter.erase(shorter.begin() + static_cast<long>(i + 1));
                    work.emplace_back(std::move(shorter), coef * c * Rational(1, 2));
                }
                reduced = true;
                break;
            }
            if (word[i] > word[i + 1]) {
                auto swapped = word;
                std::swap(swapped[i], swapped[i + 1]);
                work.emplace_back(std::move(swapped), -coef);
                for (const auto& [t, c] : g.bracket(word[i], word[i + 1]).terms()) {
                    auto shorter = word;
                    shorter[i] = t;
                    shorter.erase(shorter.begin() + static_cast<long>(i + 1));
                    work.emplace_back(std::move(shorter), coef * c);
                }
                reduced = true;
                break;
            }
        }
        if (reduced) continue;

        unsigned mask = 0;
        for (auto letter : word) mask |= 1u << odd_pos[letter];
        auto it = result.find(mask);
        if (it == result.end()) {
            result.emplace(mask, coef);
        } else {
            it->second += coef;
            if (it->second.is_zero()) result.erase(it);
        }
    }
    return result;
}

}  // namespace

SuperModule coinduced_trivial(AlgebraPtr g) {
    if (g->info().kind != "gl") throw std::invalid_argument("coinduced_trivial: defined for gl(m,n)");
    const auto& alg = *g;
    std::vector<std::uint32_t> odd;
    std::vector<int> odd_pos(alg.dim(), -1);
    for (std::uint32_t i = 0; i < alg.dim(); ++i)
        if (alg.basis().parity(i) == Parity::Odd) {
            odd_pos[i] = static_cast<int>(odd.size());
            odd.push_back(i);
        }
    auto q = static_cast<int>(odd.size());
    auto d = static_cast<std::uint32_t>(1u << q);

    SuperBasis basis;
    std::vector<std::vector<int>> chars;
    for (std::uint32_t mask = 0; mask < d; ++mask) {
        int weight = 0, ptot = 0;
        std::vector<int> chi(alg.cartan().size(), 0);
        for (int j = 0; j < q; ++j)
            if (mask & (1u << j)) {
                weight -= alg.basis().weight(odd[j]);
                ptot += 1;
                for (std::size_t t = 0; t < chi.size(); ++t) chi[t] -= alg.character(odd[j])[t];
            }
        basis.add({"f" + std::to_string(mask), ptot % 2 ? Parity::Odd : Parity::Even, weight});
        chars.push_back(std::move(chi));
    }

    std::vector<SparseMatrix> action;
    for (std::uint32_t x = 0; x < alg.dim(); ++x) {
        SparseMatrix mat(d, d);
        for (std::uint32_t tmask = 0; tmask < d; ++tmask) {
            std::vector<std::uint32_t> word;
            for (int j = 0; j < q; ++j)
                if (tmask & (1u << j)) word.push_back(odd[j]);
            word.push_back(x);
            for (const auto& [smask, c] : pbw_normalize(word, Rational(1), alg, odd_pos))
                mat.add(tmask, smask, c);
        }
        action.push_back(std::move(mat));
    }
    return SuperModule(std::move(g), std::move(basis), std::move(action), std::move(chars));
}

long invariants_dim(const SuperModule& M) {
    const auto& g = M.algebra();
    auto d = M.dim();
    auto gdim = static_cast<std::uint32_t>(g.dim());
    SparseMatrix stacked(gdim * d, d);
    for (std::uint32_t x = 0; x < gdim; ++x)
        for (const auto& [rc, v] : M.action(x).entries())
            stacked.set(x * d + rc.first, rc.second, v);
    return static_cast<long>(stacked.kernel_dim());
}

}  // namespace gfsuper
