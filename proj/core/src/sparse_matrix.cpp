#include "gfsuper/sparse_matrix.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace gfsuper {

namespace {

using Index = SparseMatrix::Index;

// One matrix row in cleared-denominator form: sorted (col, integer) pairs.
using IRow = std::vector<std::pair<Index, mpz_class>>;

// r := (p*r - f*pr), then divide by the gcd content. Entries stay integral
// throughout; removing the content is what keeps growth in check.
IRow eliminate_row(const IRow& r, const IRow& pr, const mpz_class& p, const mpz_class& f) {
    IRow out;
    out.reserve(r.size() + pr.size());
    std::size_t i = 0, j = 0;
    mpz_class content = 0;
    while (i < r.size() || j < pr.size()) {
        mpz_class v;
        Index col;
        if (j >= pr.size() || (i < r.size() && r[i].first < pr[j].first)) {
            col = r[i].first;
            v = p * r[i].second;
            ++i;
        } else if (i >= r.size() || pr[j].first < r[i].first) {
            col = pr[j].first;
            v = -f * pr[j].second;
            ++j;
        } else {
            col = r[i].first;
            v = p * r[i].second - f * pr[j].second;
            ++i;
            ++j;
        }
        if (sgn(v) != 0) {
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
            out.emplace_back(col, std::move(v));
        }
    }
    if (content > 1) {
        for (auto& [c, v] : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

}  // namespace

void SparseMatrix::set(Index r, Index c, const Rational& v) {
    if (r >= nrows_ || c >= ncols_) throw std::out_of_range("SparseMatrix::set: index out of range");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void SparseMatrix::add(Index r, Index c, const Rational& v) {
    if (r >= nrows_ || c >= ncols_) throw std::out_of_range("SparseMatrix::add: index out of range");
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

Rational SparseMatrix::at(Index r, Index c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(ncols_, nrows_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
    if (ncols_ != o.nrows_) throw std::invalid_argument("SparseMatrix: dimension mismatch in multiply");
    // Column-major view of `o` for cache of rows of *this.
    std::vector<std::vector<std::pair<Index, const Rational*>>> rows_of_o(o.nrows_);
    for (const auto& [rc, v] : o.entries_) rows_of_o[rc.first].emplace_back(rc.second, &v);
    SparseMatrix out(nrows_, o.ncols_);
    for (const auto& [rc, v] : entries_) {
        for (const auto& [c2, v2] : rows_of_o[rc.second]) out.add(rc.first, c2, v * *v2);
    }
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_) throw std::invalid_argument("SparseMatrix: shape mismatch");
    SparseMatrix out = *this;
    for (const auto& [rc, v] : o.entries_) out.add(rc.first, rc.second, v);
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
    return *this + o.scaled(Rational(-1));
}

SparseMatrix SparseMatrix::scaled(const Rational& s) const {
    SparseMatrix out(nrows_, ncols_);
    if (s.is_zero()) return out;
    for (const auto& [rc, v] : entries_) out.entries_[rc] = v * s;
    return out;
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && entries_ == o.entries_;
}

SparseMatrix::Index SparseMatrix::rank() const {
    // Clear denominators row by row; row scaling does not change rank.
    std::vector<std::vector<std::pair<Index, const Rational*>>> qrows(nrows_);
    for (const auto& [rc, v] : entries_) qrows[rc.first].emplace_back(rc.second, &v);
    std::vector<IRow> rows(nrows_);
    for (Index r = 0; r < nrows_; ++r) {
        if (qrows[r].empty()) continue;
        mpz_class lcm = 1;
        for (auto& [c, v] : qrows[r]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v->den().get_mpz_t());
        rows[r].reserve(qrows[r].size());
        for (auto& [c, v] : qrows[r]) rows[r].emplace_back(c, v->num() * (lcm / v->den()));
    }
    qrows.clear();

    std::vector<Index> col_count(ncols_, 0);
    std::vector<bool> active(nrows_, false);
    std::size_t live = 0;
    for (Index r = 0; r < nrows_; ++r) {
        if (rows[r].empty()) continue;
        active[r] = true;
        ++live;
        for (auto& [c, v] : rows[r]) ++col_count[c];
    }

    Index rank = 0;
    while (live > 0) {
        // Markowitz: among a handful of shortest active rows minimize
        // (row_nnz-1)*(col_nnz-1); ties broken by (col, row) for determinism.
        constexpr std::size_t kCandidates = 8;
        std::vector<Index> shortest;  // kept sorted by (nnz, row)
        for (Index r = 0; r < nrows_; ++r) {
            if (!active[r]) continue;
            auto pos = std::upper_bound(shortest.begin(), shortest.end(), r, [&](Index a, Index b) {
                return rows[a].size() < rows[b].size();
            });
            if (pos != shortest.end() || shortest.size() < kCandidates) shortest.insert(pos, r);
            if (shortest.size() > kCandidates) shortest.pop_back();
        }

        Index prow = 0, pcol = 0;
        unsigned long best = std::numeric_limits<unsigned long>::max();
        bool have = false;
        for (Index r : shortest) {
            for (auto& [c, v] : rows[r]) {
                unsigned long score =
                    static_cast<unsigned long>(rows[r].size() - 1) * (col_count[c] - 1);
                if (!have || score < best || (score == best && (c < pcol || (c == pcol && r < prow)))) {
                    have = true;
                    best = score;
                    prow = r;
                    pcol = c;
                }
            }
        }

        const IRow pivot_row = std::move(rows[prow]);
        active[prow] = false;
        --live;
        ++rank;
        for (auto& [c, v] : pivot_row) --col_count[c];
        mpz_class pval;
        for (auto& [c, v] : pivot_row)
            if (c == pcol) pval = v;

        for (Index r = 0; r < nrows_; ++r) {
            if (!active[r]) continue;
            auto hit = std::lower_bound(rows[r].begin(), rows[r].end(), pcol,
                                        [](const auto& e, Index c) { return e.first < c; });
            if (hit == rows[r].end() || hit->first != pcol) continue;
            mpz_class f = hit->second;
            for (auto& [c, v] : rows[r]) --col_count[c];
            rows[r] = eliminate_row(rows[r], pivot_row, pval, f);
            if (rows[r].empty()) {
                active[r] = false;
                --live;
            } else {
                for (auto& [c, v] : rows[r]) ++col_count[c];
            }
        }
    }
    return rank;
}

std::vector<SparseMatrix::Index> SparseMatrix::independent_columns() const {
    // Incremental Gaussian reduction of columns taken in order.
    std::vector<Index> picked;
    // Reduced basis rows: each is a column vector stored sparse, with a pivot row.
    struct BasisVec {
        Index pivot;
        std::vector<std::pair<Index, Rational>> v;  // sorted by row
    };
    std::vector<BasisVec> basis;

    std::vector<std::vector<std::pair<Index, Rational>>> cols(ncols_);
    for (const auto& [rc, v] : entries_) cols[rc.second].emplace_back(rc.first, v);

    for (Index c = 0; c < ncols_; ++c) {
        std::vector<std::pair<Index, Rational>> cur = cols[c];
        for (const auto& b : basis) {
            auto hit = std::lower_bound(cur.begin(), cur.end(), b.pivot,
                                        [](const auto& e, Index r) { return e.first < r; });
            if (hit == cur.end() || hit->first != b.pivot) continue;
            Rational f = hit->second;
            // cur -= f * b.v
            std::vector<std::pair<Index, Rational>> next;
            next.reserve(cur.size() + b.v.size());
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < b.v.size()) {
                if (j >= b.v.size() || (i < cur.size() && cur[i].first < b.v[j].first)) {
                    next.push_back(cur[i++]);
                } else if (i >= cur.size() || b.v[j].first < cur[i].first) {
                    next.emplace_back(b.v[j].first, -(f * b.v[j].second));
                    ++j;
                } else {
                    Rational val = cur[i].second - f * b.v[j].second;
                    if (!val.is_zero()) next.emplace_back(cur[i].first, val);
                    ++i;
                    ++j;
                }
            }
            cur = std::move(next);
        }
        if (cur.empty()) continue;
        // Normalize so the pivot entry is 1.
        Rational inv = Rational(1) / cur.front().second;
        for (auto& [r, v] : cur) v *= inv;
        basis.push_back({cur.front().first, std::move(cur)});
        picked.push_back(c);
    }
    return picked;
}

}  // namespace gfsuper
