#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gfsuper/betti_table.hpp"
#include "gfsuper/lie_superalgebra.hpp"
#include "gfsuper/partitions.hpp"
#include "gfsuper/super_module.hpp"

namespace gfsuper {

// Thrown before assembling a differential whose estimated entry count
// exceeds the configured cap.
struct ResourceCapError : std::runtime_error {
    ResourceCapError(std::uint64_t estimated_, std::uint64_t cap_, std::string what_)
        : std::runtime_error(std::move(what_)), estimated(estimated_), cap(cap_) {}
    std::uint64_t estimated;
    std::uint64_t cap;
};

// Cochain complex of a Lie superalgebra with coefficients in a module,
// split into finite blocks by the weight of the Euler element. Duals of
// even generators anticommute, duals of odd generators are polynomial.
// d^2 = 0 is asserted on every stored pair of consecutive differentials;
// a violation is a hard error.
class CochainComplex {
  public:
    struct Options {
        // Weights to build; nullopt builds every weight that occurs, which
        // is only allowed for algebras with an untruncated bracket table.
        std::optional<std::vector<int>> weights = std::vector<int>{0};
        bool reverse_basis = false;
        // Drop basis vectors with a nonzero diagonal-family character; the
        // nonzero-character summands are acyclic, so Betti tables agree.
        // Requires weights == {0}.
        bool zero_character_only = false;
        // Cap on the estimated entry count of any one differential; 0 = off.
        std::uint64_t max_entries = 0;
    };

    CochainComplex(AlgebraPtr g, SuperModule M, int pmax, Options opt);
    // Weight 0 only, no cap.
    CochainComplex(AlgebraPtr g, SuperModule M, int pmax);

    int pmax() const { return pmax_; }
    const LieSuperalgebra& algebra() const { return *g_; }
    const SuperModule& module() const { return M_; }
    const std::vector<int>& weights() const { return weights_; }

    long block_dim(int p, int w) const;
    // Rank of the differential out of block (p,w); 0 outside the stored range.
    long rank(int p, int w) const;
    // Betti numbers summed over all built weights; range must be <= pmax-1.
    BettiTable betti(int range) const;
    BettiTable betti_weight(int w, int range) const;

    // Whole differential d_{p,w} over global block indices. Test hook;
    // assembles eagerly without the group split.
    SparseMatrix assemble_full(int p, int w) const;

  private:
    struct Block {
        std::vector<ExtMonomial> words;
        std::vector<std::uint32_t> mvals;
        std::map<std::pair<ExtMonomial, std::uint32_t>, std::uint32_t> index;
        std::vector<std::vector<int>> chis;
        std::map<std::vector<int>, std::vector<std::uint32_t>> groups;  // character -> members
        std::vector<std::uint32_t> local_of;                            // index within its group
        long dim() const { return static_cast<long>(words.size()); }
    };
    struct RevTerm {
        std::uint32_t a, b;
        Rational coef;  // folded differential coefficient for this pair
    };

    void enumerate_blocks();
    void check_truncation_guard() const;
    void require_weight(int w) const;
    std::vector<int> character_of(const ExtMonomial& word, std::uint32_t v) const;
    int weight_of(const ExtMonomial& word, std::uint32_t v) const;
    // Image of a basis cochain under d, as (word, module index, coefficient).
    std::vector<std::tuple<ExtMonomial, std::uint32_t, Rational>> image_of(
        const ExtMonomial& word, std::uint32_t v) const;
    void compute_weight_ranks(int w) const;
    void enforce_cap() const;

    AlgebraPtr g_;
    SuperModule M_;
    int pmax_;
    Options opt_;
    std::vector<int> weights_;
    bool all_weights_ = false;
    std::vector<Parity> gpar_;
    std::vector<bool> dual_strict_;  // dual of an even generator anticommutes
    std::vector<std::vector<RevTerm>> rev_;  // k -> pairs contributing to d(eta^k)
    std::vector<std::vector<std::vector<std::pair<std::uint32_t, Rational>>>> action_cols_;
    std::map<std::pair<int, int>, Block> blocks_;

    mutable std::map<std::pair<int, int>, long> rank_cache_;
    mutable std::map<int, bool> weight_done_;
    mutable std::mutex mutex_;
};

// Betti table of H^p(V_{m,n}, k) for p <= P via the weight-0 subcomplex of
// the truncated vector-field algebra; dmax defaults to P, the minimal depth
// for which the weight-0 blocks in range are exact.
BettiTable vfield_cohomology(int m, int n, int P, int dmax = -1,
                             const CochainComplex::Options& extra = CochainComplex::Options{});

// Betti table of H^p(gl(n,1), Delta^lambda) for p <= P.
BettiTable gl_coefficient_cohomology(int n, const Partition& lambda, int P,
                                     const CochainComplex::Options& extra = CochainComplex::Options{});

// True iff every block of nonzero weight |w| <= wmax is acyclic through
// degree pmax. For a truncated algebra too shallow to host those blocks the
// algebra is rebuilt at the required depth (trivial coefficients only).
bool nonzero_weight_acyclicity_check(AlgebraPtr g, const SuperModule& M, int pmax, int wmax);

// True iff H^p(gl(n,1), Sigma^alpha(V) (x) Sigma^beta(V*)) = 0 for p <= P.
// Rejects alpha == beta or |alpha| != |beta|.
bool vanishing_offdiagonal_check(int n, const Partition& alpha, const Partition& beta, int P,
                                 const CochainComplex::Options& extra = CochainComplex::Options{});

}  // namespace gfsuper
