#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehpcalc/simplicial.hpp"

namespace ehpcalc {

inline constexpr std::size_t kDefaultProductCap = 20000;
inline constexpr std::size_t kDefaultIsomorphismCap = 512;

// Minimal model: a basepoint and one nondegenerate n-cell whose faces all sit at the basepoint.
// S^0 is the basepoint plus one free vertex.
SSet build_sphere(int n);
SSet point();

SSet wedge(const SSet& a, const SSet& b);

struct Quotient {
  SSet sset;
  std::vector<std::optional<GeneratorId>> image;  // nullopt: collapsed to the basepoint
};

// Collapses the subcomplex marked in `collapse` (it must contain the basepoint) to a point.
Quotient quotient(const SSet& k, const std::vector<bool>& collapse);

// Categorical product of finitely many pointed simplicial sets. Nondegenerate m-simplices are
// tuples of m-simplices whose degeneracy positions have empty common intersection.
class ProductComplex {
 public:
  explicit ProductComplex(std::vector<SSet> factors, std::string separator = ",",
                          std::size_t cap = kDefaultProductCap);

  const SSet& sset() const { return sset_; }
  const std::vector<SSet>& factors() const { return factors_; }

  // Simplex of the product with the given components (all of one dimension).
  Simplex combine(std::span<const Simplex> components) const;
  std::vector<Simplex> components(const Simplex& s) const;
  const std::vector<Simplex>& tuple(GeneratorId id) const { return tuples_.at(static_cast<std::size_t>(id)); }

 private:
  std::vector<SSet> factors_;
  SSet sset_;
  std::vector<std::vector<Simplex>> tuples_;
  std::map<std::vector<Simplex>, GeneratorId> index_;
};

// Iterated smash product, the quotient of the product by its fat wedge.
class SmashComplex {
 public:
  explicit SmashComplex(std::vector<SSet> factors, std::size_t cap = kDefaultProductCap);

  const SSet& sset() const { return sset_; }
  const std::vector<SSet>& factors() const { return product_.factors(); }
  std::size_t arity() const { return product_.factors().size(); }

  // x_1 ^ ... ^ x_r; the degenerate basepoint when some component is at a basepoint.
  Simplex combine(std::span<const Simplex> components) const;
  // Components of a simplex away from the basepoint; basepoints of the factors for the basepoint.
  std::vector<Simplex> components(const Simplex& s) const;

 private:
  ProductComplex product_;
  SSet sset_;
  std::vector<std::optional<GeneratorId>> to_smash_;
  std::vector<GeneratorId> to_product_;
};

SSet product(const SSet& a, const SSet& b);
SSet smash(const SSet& a, const SSet& b);
SSet smash_power(const SSet& k, int r);
// S^1 ^ K.
SSet suspension(const SSet& k);

struct IsomorphismResult {
  bool isomorphic = false;
  std::vector<GeneratorId> mapping;  // generator of A -> generator of B when isomorphic
};

// Exact backtracking search for a basepoint-preserving bijection of generators that
// commutes with all face data. Throws CapExceeded above `cap` generators.
IsomorphismResult is_isomorphic(const SSet& a, const SSet& b, std::size_t cap = kDefaultIsomorphismCap);

}  // namespace ehpcalc
