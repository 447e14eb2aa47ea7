#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gfsuper/betti_table.hpp"
#include "gfsuper/rational.hpp"
#include "gfsuper/super_basis.hpp"

namespace gfsuper {

struct CDGAGenerator {
    std::string name;
    int degree = 1;
};

// Free graded-commutative algebra on the generators (odd-degree generators
// square to zero), with every monomial whose polynomial part exceeds
// `truncation` in total degree set to zero, and a degree +1 differential
// given on generators and extended as a derivation. The differential must
// square to zero; that is validated at construction.
class CDGAModel {
  public:
    using Mono = std::vector<std::uint32_t>;  // sorted generator indices, repeats allowed
    using Poly = std::map<Mono, Rational>;

    CDGAModel(std::vector<CDGAGenerator> generators, int truncation,
              std::map<std::uint32_t, Poly> differential);

    const std::vector<CDGAGenerator>& generators() const { return gens_; }
    int truncation() const { return truncation_; }
    const Poly& differential(std::uint32_t i) const;

    int mono_degree(const Mono& m) const;
    // Total degree of the even-degree factors only.
    int poly_degree(const Mono& m) const;
    // Derivation applied to a monomial, reduced modulo the truncation ideal.
    Poly d(const Mono& m) const;
    // All monomials of the given total degree, lexicographically ordered.
    std::vector<Mono> basis(int degree) const;

  private:
    void validate();

    std::vector<CDGAGenerator> gens_;
    std::vector<Parity> par_;  // degree mod 2
    int truncation_;
    std::map<std::uint32_t, Poly> diff_;
};

// Lambda[e_1, e_3, ..., e_{2m-1}] (x) k[c_1, ..., c_m] with deg c_i = 2i,
// d(e_{2i-1}) = c_i, polynomial degrees above trunc dropped (including the
// generators c_i with 2i > trunc).
CDGAModel skeleton_bundle_model(int m, int trunc);

// Betti numbers of the model through degree P.
BettiTable cdga_cohomology(const CDGAModel& model, int P);

// Betti table of the N-fold suspension: reduced classes shift up by N; the
// empty table suspends to the (N-1)-sphere.
BettiTable suspend(const BettiTable& b, int N);

// Coefficients of prod_d (1 + t^d) over the listed degrees.
std::vector<long> exterior_poincare(const std::vector<int>& degrees);

// Predicted vector field cohomology of the (m,n) superspace: the suspended
// skeleton bundle table for m > n, the suspended exterior table on degrees
// 1, 3, ..., 2m-1 for m = n, a sphere for m < n.
BettiTable predicted_betti(int m, int n);

}  // namespace gfsuper
