#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gfsuper/super_basis.hpp"

namespace gfsuper {

struct AlgebraInfo {
    std::string kind;  // "gl" or "vect"
    int m = 0;
    int n = 0;
    int dmax = 0;   // vect only: largest retained weight
    bool exact = true;  // false when some bracket was truncated away
};

// Finite-dimensional Lie superalgebra with a weight-graded basis, a full
// bracket table, an Euler element and a commuting diagonal family.
//
// Construction validates super-antisymmetry on all pairs, additivity of
// weights and diagonal characters on every bracket, and the super Jacobi
// identity. For a truncated algebra Jacobi is asserted on exactly the
// triples where truncation cannot interfere (all pairwise weight sums
// within range); triples that mix a truncated intermediate bracket with an
// in-range result genuinely violate Jacobi, which is why consumers must
// respect the weight guard documented in the cohomology interfaces.
class LieSuperalgebra {
  public:
    LieSuperalgebra(SuperBasis basis, std::map<std::pair<std::uint32_t, std::uint32_t>, SignedVector> table,
                    SignedVector euler, std::vector<SignedVector> cartan,
                    std::vector<std::vector<int>> characters, AlgebraInfo info);

    const SuperBasis& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }
    const SignedVector& bracket(std::uint32_t i, std::uint32_t j) const;
    // Bracket extended bilinearly to sparse vectors.
    SignedVector bracket(const SignedVector& a, const SignedVector& b) const;
    const SignedVector& euler() const { return euler_; }
    const std::vector<SignedVector>& cartan() const { return cartan_; }
    // Eigenvalue tuple of ad(cartan) on basis element i.
    const std::vector<int>& character(std::uint32_t i) const { return characters_[i]; }
    const AlgebraInfo& info() const { return info_; }

  private:
    void validate() const;

    SuperBasis basis_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, SignedVector> table_;
    SignedVector euler_;
    std::vector<SignedVector> cartan_;
    std::vector<std::vector<int>> characters_;
    AlgebraInfo info_;
    static const SignedVector zero_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

// General linear superalgebra on m even and n odd dimensions: basis E_ij,
// bracket [E_ij, E_kl] = d_jk E_il - (-1)^{(i+j)(k+l) parities} d_li E_kj.
// All Euler weights are zero (the Euler element is central).
AlgebraPtr gl(int m, int n);

// Vector fields on the (m,n) affine superspace, truncated: monomial fields
// x^a xi^b d/du of total degree <= dmax+1, weight = degree - 1. Brackets are
// the Leibniz brackets with any component of weight > dmax dropped; info().exact
// records whether anything was dropped.
AlgebraPtr vect_truncated(int m, int n, int dmax);

}  // namespace gfsuper
