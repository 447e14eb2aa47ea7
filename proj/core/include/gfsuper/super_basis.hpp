#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gfsuper/rational.hpp"
#include "gfsuper/sparse_matrix.hpp"

namespace gfsuper {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity parity_product(Parity a, Parity b) {
    return (a == b) ? Parity::Even : Parity::Odd;
}

struct BasisElement {
    std::string name;
    Parity parity = Parity::Even;
    int weight = 0;
};

// Ordered homogeneous basis of a super vector space, with name lookup.
class SuperBasis {
  public:
    std::uint32_t add(BasisElement e);
    std::size_t size() const { return elems_.size(); }
    const BasisElement& operator[](std::uint32_t i) const { return elems_[i]; }
    Parity parity(std::uint32_t i) const { return elems_[i].parity; }
    int weight(std::uint32_t i) const { return elems_[i].weight; }
    std::optional<std::uint32_t> index_of(const std::string& name) const;
    std::vector<Parity> parities() const;

  private:
    std::vector<BasisElement> elems_;
    std::map<std::string, std::uint32_t> by_name_;
};

// Sparse vector over a basis; zero coefficients are pruned eagerly.
class SignedVector {
  public:
    SignedVector() = default;
    void add(std::uint32_t i, const Rational& c);
    const std::map<std::uint32_t, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(std::uint32_t i) const;
    SignedVector& operator+=(const SignedVector& o);
    SignedVector operator*(const Rational& s) const;
    bool operator==(const SignedVector& o) const { return terms_ == o.terms_; }

  private:
    std::map<std::uint32_t, Rational> terms_;
};

// Sign accumulated when sorting `word` ascending in a graded-commutative
// algebra whose generator parities are given: each adjacent swap of entries
// a, b contributes (-1)^{p_a p_b}. Repeats are the caller's concern.
int koszul_sign(std::vector<std::uint32_t> word, const std::vector<Parity>& parities);

// Monomials in the super exterior algebra of a space with the given
// parities: even generators anticommute (multiplicity at most one), odd
// generators commute (arbitrary multiplicity). A monomial is the sorted
// vector of its factors' indices.
using ExtMonomial = std::vector<std::uint32_t>;

std::vector<ExtMonomial> super_exterior_basis(const std::vector<Parity>& parities, int degree);

// Sort an arbitrary word of generators into monomial form, collecting the
// sign; nullopt when the product vanishes (a repeated even generator).
// Swapping factors of parities a, b contributes (-1)^{(p_a+1)(p_b+1)}.
std::optional<std::pair<ExtMonomial, int>> exterior_normalize(std::vector<std::uint32_t> word,
                                                              const std::vector<Parity>& parities);

// Total parity of a monomial in the super exterior algebra: each factor of
// parity p contributes p+1.
Parity exterior_total_parity(const ExtMonomial& mono, const std::vector<Parity>& parities);

// Wedge monomials inside a tensor power (the super exterior power of a
// module, not the shifted cochain algebra): factors obey
// v w = -(-1)^{p_v p_w} w v, so mixed-parity factors anticommute and only
// odd factors may repeat. Same basis enumeration as super_exterior_basis.
std::optional<std::pair<ExtMonomial, int>> wedge_normalize(std::vector<std::uint32_t> word,
                                                           const std::vector<Parity>& parities);

// Super symmetric power: v w = (-1)^{p_v p_w} w v; even factors repeat
// freely, odd factors square to zero.
std::vector<ExtMonomial> super_symmetric_basis(const std::vector<Parity>& parities, int degree);
std::optional<std::pair<ExtMonomial, int>> sym_normalize(std::vector<std::uint32_t> word,
                                                         const std::vector<Parity>& parities);

// Action of a parity-homogeneous operator on the k-th tensor power of V.
// Basis of V^{tensor k} is indexed by tuples (t_0..t_{k-1}) big-endian:
// linear index = sum t_j * n^{k-1-j}. Moving an odd operator past the first
// j factors contributes (-1)^{p(t_0)+...+p(t_{j-1})}.
SparseMatrix super_tensor_power_action(const SparseMatrix& rho, Parity op_parity,
                                       const std::vector<Parity>& parities, int k);

// Place permutation of tensor factors: factor at position j moves to
// position sigma[j], with the Koszul sign from reordering homogeneous
// factors; multiplied by sgn(sigma) when with_sgn is set.
SparseMatrix super_permutation_action(const std::vector<std::uint32_t>& sigma,
                                      const std::vector<Parity>& parities, bool with_sgn);

int permutation_sign(const std::vector<std::uint32_t>& sigma);

}  // namespace gfsuper
