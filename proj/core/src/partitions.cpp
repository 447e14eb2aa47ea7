#include "gfsuper/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gfsuper {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::row(int i) const {
    if (i < 1 || i > height()) return 0;
    return parts_[i - 1];
}

std::string to_string(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    return s;
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0") return Partition{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        std::string tok = s.substr(pos, next - pos);
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("Partition: bad token '" + tok + "'");
        parts.push_back(v);
        pos = next + 1;
    }
    return Partition(std::move(parts));
}

Partition transpose(const Partition& p) {
    std::vector<int> out;
    int cols = p.row(1);
    out.reserve(cols);
    for (int j = 1; j <= cols; ++j) {
        int h = 0;
        for (int i = 1; i <= p.height(); ++i)
            if (p.row(i) >= j) h = i;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

bool fits_thick_hook(const Partition& lambda, int m, int n) {
    for (int i = m + 1; i <= lambda.height(); ++i)
        if (lambda.row(i) > n) return false;
    return true;
}

Partition tilde(const Partition& lambda) {
    int p = lambda.size();
    std::vector<int> out;
    out.reserve(p);
    for (int i = 1; i <= p; ++i) out.push_back(lambda.row(i) + 1);
    return Partition(std::move(out));
}

Partition plus(const Partition& lambda) {
    auto parts = lambda.parts();
    parts.push_back(1);
    return Partition(std::move(parts));
}

int prefix_row_sum(const Partition& lambda, int k) {
    int s = 0;
    for (int i = 1; i <= k; ++i) s += lambda.row(i);
    return s;
}

std::vector<std::pair<Partition, int>> horizontal_strip_subdiagrams(const Partition& lambda) {
    std::vector<std::pair<Partition, int>> out;
    int h = lambda.height();
    std::vector<int> beta(h, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > h) {
            std::vector<int> parts;
            for (int v : beta)
                if (v > 0) parts.push_back(v);
            Partition b(std::move(parts));
            out.emplace_back(b, lambda.size() - b.size());
            return;
        }
        for (int v = lambda.row(i); v >= lambda.row(i + 1); --v) {
            beta[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

std::optional<int> flippable_count(const Partition& lambda, const Partition& beta) {
    if (lambda.size() != beta.size()) return std::nullopt;
    int h = std::max(lambda.height(), beta.height());
    // Row i of a valid alpha ranges over [max(lambda_{i+1}, beta_i - 1),
    // min(lambda_i, beta_i)]; the minimal-strip alpha takes the upper end.
    std::vector<int> alpha;
    alpha.reserve(h);
    for (int i = 1; i <= h; ++i) {
        int lo = std::max(lambda.row(i + 1), beta.row(i) - 1);
        int up = std::min(lambda.row(i), beta.row(i));
        if (lo > up) return std::nullopt;
        alpha.push_back(up);
    }
    Partition lt = transpose(lambda);
    int count = 0;
    for (int i = 1; i <= h; ++i) {
        int j = beta.row(i);
        if (j >= 1 && j <= alpha[i - 1] && lt.row(j) == i) ++count;
    }
    return count;
}

namespace {

// Berele-Regev tableaux, filled cell by cell in row-major order. Entries
// 0..m-1 are unprimed, m..m+n-1 primed.
void count_tableaux(const Partition& lambda, int m, int n, std::vector<std::vector<int>>& cells,
                    int i, int j, int primed, long& even, long& odd) {
    if (i > lambda.height()) {
        (primed % 2 == 0 ? even : odd) += 1;
        return;
    }
    if (j > lambda.row(i)) {
        count_tableaux(lambda, m, n, cells, i + 1, 1, primed, even, odd);
        return;
    }
    for (int e = 0; e < m + n; ++e) {
        bool is_primed = e >= m;
        if (j > 1) {
            int left = cells[i - 1][j - 2];
            if (e < left || (e == left && is_primed)) continue;
        }
        if (i > 1) {
            // Rows weakly decrease, so the cell above always exists.
            int up = cells[i - 2][j - 1];
            if (e < up || (e == up && !is_primed)) continue;
        }
        cells[i - 1][j - 1] = e;
        count_tableaux(lambda, m, n, cells, i, j + 1, primed + (is_primed ? 1 : 0), even, odd);
    }
}

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::pair<long, long> super_schur_dim(const Partition& lambda, int m, int n) {
    if (!fits_thick_hook(lambda, m, n)) return {0, 0};
    long even = 0, odd = 0;
    std::vector<std::vector<int>> cells(lambda.height());
    for (int i = 1; i <= lambda.height(); ++i) cells[i - 1].assign(lambda.row(i), -1);
    count_tableaux(lambda, m, n, cells, 1, 1, 0, even, odd);
    return {even, odd};
}

std::vector<Partition> partitions_of(int p) {
    std::vector<Partition> out;
    std::vector<int> cur;
    if (p >= 0) partitions_rec(p, p == 0 ? 1 : p, cur, out);
    return out;
}

std::vector<std::pair<Partition, Partition>> cauchy_exterior(int p) {
    std::vector<std::pair<Partition, Partition>> out;
    for (const auto& lam : partitions_of(p)) out.emplace_back(lam, transpose(lam));
    return out;
}

long invariant_diagram_count(int m, int n, int p) {
    long count = 0;
    for (const auto& lam : partitions_of(p))
        if (fits_thick_hook(tilde(lam), m, n)) ++count;
    return count;
}

}  // namespace gfsuper
