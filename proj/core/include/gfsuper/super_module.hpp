#pragma once

#include <memory>
#include <vector>

#include "gfsuper/lie_superalgebra.hpp"
#include "gfsuper/partitions.hpp"
#include "gfsuper/sparse_matrix.hpp"
#include "gfsuper/super_basis.hpp"

namespace gfsuper {

// Finite-dimensional module over a LieSuperalgebra: one action matrix per
// algebra basis element, columns indexed by module basis vectors.
//
// Construction validates, on every algebra basis pair, the representation
// identity rho([x,y]) = rho(x)rho(y) - (-1)^{xy} rho(y)rho(x); that every
// action matrix is parity-, weight- and character-homogeneous; and that the
// Euler element and the diagonal family act diagonally with the declared
// weights and characters.
class SuperModule {
  public:
    SuperModule(AlgebraPtr g, SuperBasis basis, std::vector<SparseMatrix> action,
                std::vector<std::vector<int>> characters);

    const LieSuperalgebra& algebra() const { return *g_; }
    const AlgebraPtr& algebra_ptr() const { return g_; }
    const SuperBasis& basis() const { return basis_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const SparseMatrix& action(std::uint32_t algebra_index) const { return action_[algebra_index]; }
    // Action extended linearly to a sparse algebra element.
    SparseMatrix action(const SignedVector& x) const;
    // Eigenvalue tuple of the diagonal family on module basis vector v.
    const std::vector<int>& character(std::uint32_t v) const { return characters_[v]; }

  private:
    void validate() const;

    AlgebraPtr g_;
    SuperBasis basis_;
    std::vector<SparseMatrix> action_;
    std::vector<std::vector<int>> characters_;
};

SuperModule trivial_module(AlgebraPtr g);

// Standard module of gl(m,n): column vectors with E_ij v_k = d_jk v_i.
SuperModule standard_module(AlgebraPtr g);

// Dual with <x f, v> = -(-1)^{|x||f|} <f, x v>.
SuperModule dual_module(const SuperModule& M);

SuperModule tensor_module(const SuperModule& M, const SuperModule& N);

// Super exterior and symmetric powers, acting by signed derivations.
SuperModule exterior_power_module(const SuperModule& M, int p);
SuperModule symmetric_power_module(const SuperModule& M, int p);

// Image of the Young symmetrizer (row symmetrization followed by signed
// column antisymmetrization) inside M^{tensor |lambda|}.
SuperModule schur_module(const SuperModule& M, const Partition& lambda);

// schur(V, lambda) tensor schur(V*, lambda) for the standard module V.
SuperModule delta_module(AlgebraPtr g, const Partition& lambda);

// Functions on the enveloping algebra linear over the even part acting on
// the trivial module, (x f)(u) = f(u x); dimension 2^(number of odd basis
// elements). Realized on dual functionals of ordered products of odd
// generators via normal-ordering rewriting.
SuperModule coinduced_trivial(AlgebraPtr g);

// Dimension of the subspace killed by every algebra basis element.
long invariants_dim(const SuperModule& M);

}  // namespace gfsuper
