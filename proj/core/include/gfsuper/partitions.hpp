#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfsuper {

// Young diagram: weakly decreasing positive parts; empty list = empty diagram.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int height() const { return static_cast<int>(parts_.size()); }
    int size() const;
    // 1-indexed row length; rows past the height have length 0.
    int row(int i) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    std::vector<int> parts_;
};

std::string to_string(const Partition& p);
// Comma-separated parts, e.g. "2,1"; "" or "0" denotes the empty diagram.
Partition parse_partition(const std::string& s);

Partition transpose(const Partition& p);

// lambda_i <= n for all i > m.
bool fits_thick_hook(const Partition& lambda, int m, int n);

// Add a first column of height |lambda|: row i of the result is lambda_i + 1
// for 1 <= i <= |lambda|.
Partition tilde(const Partition& lambda);

// Add one box in the first column (an extra part of size 1).
Partition plus(const Partition& lambda);

// Sum of the first k rows.
int prefix_row_sum(const Partition& lambda, int k);

// All subdiagrams beta of lambda whose complement is a horizontal strip
// (at most one box per column: lambda_{i+1} <= beta_i <= lambda_i), with the
// strip size k = |lambda| - |beta|.
std::vector<std::pair<Partition, int>> horizontal_strip_subdiagrams(const Partition& lambda);

// Number of flippable boxes for the pair (lambda, beta): with alpha the
// unique common subdiagram of minimal strip size such that lambda\alpha is a
// horizontal strip and beta\alpha a vertical strip, counts boxes (i,j) of
// alpha that end their row in beta (beta_i = j) and end their column in
// lambda (lambda'_j = i). nullopt when no such alpha exists.
std::optional<int> flippable_count(const Partition& lambda, const Partition& beta);

// Dimensions (even part, odd part) of the Schur functor applied to a super
// vector space of dimension (m|n), by counting (m,n)-semistandard tableaux:
// unprimed entries 1..m increase weakly along rows and strictly down
// columns, primed entries 1'..n' strictly along rows and weakly down
// columns, all unprimed before all primed. Zero iff the diagram does not fit
// the (m,n) thick hook.
std::pair<long, long> super_schur_dim(const Partition& lambda, int m, int n);

// Partitions of p in reverse lexicographic order, largest first.
std::vector<Partition> partitions_of(int p);

// The pairs (lambda, lambda') over all |lambda| = p, in the order of
// partitions_of.
std::vector<std::pair<Partition, Partition>> cauchy_exterior(int p);

// #{lambda of size p : tilde(lambda) fits the (m,n) thick hook}.
long invariant_diagram_count(int m, int n, int p);

}  // namespace gfsuper
