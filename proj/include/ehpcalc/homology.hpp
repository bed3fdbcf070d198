#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ehpcalc/simplicial.hpp"

namespace ehpcalc {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_diagonal() const;

  IntegerMatrix operator*(const IntegerMatrix& other) const;
  bool operator==(const IntegerMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

// Fraction-free Gaussian elimination; square matrices only.
mpz_class determinant(const IntegerMatrix& m);

struct SmithForm {
  std::vector<mpz_class> factors;  // nonzero diagonal entries d_1 | d_2 | ...
  IntegerMatrix u;                 // unimodular, rows x rows
  IntegerMatrix v;                 // unimodular, cols x cols; u * m * v is diagonal
};

// Pivot: nonzero entry of least absolute value, ties broken in row-major order.
SmithForm smith_normal_form(const IntegerMatrix& m);
// Same factors without tracking the transforms.
std::vector<mpz_class> invariant_factors(const IntegerMatrix& m);

// Normalized chains on the nondegenerate simplices. boundary(n) maps degree n to degree n-1
// (rows index basis(n-1), columns index basis(n)).
class ChainComplex {
 public:
  ChainComplex(std::vector<std::vector<GeneratorId>> bases, std::vector<IntegerMatrix> boundaries);

  int top_degree() const { return static_cast<int>(bases_.size()) - 1; }
  const std::vector<GeneratorId>& basis(int n) const;
  std::size_t rank(int n) const { return basis(n).size(); }
  // Zero-row or zero-column matrix outside 1..top_degree.
  IntegerMatrix boundary(int n) const;

 private:
  std::vector<std::vector<GeneratorId>> bases_;
  std::vector<IntegerMatrix> boundaries_;  // boundaries_[n] for n >= 1; boundaries_[0] is empty
};

// Throws InvalidComplex if the boundary does not square to zero.
ChainComplex normalized_chain_complex(const SSet& k, bool reduced = false);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // each >= 2, each dividing the next

  bool trivial() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
  // "0", "Z", "Z^2 + Z/2 + Z/4"
  std::string to_string() const;
};

// Direct sum.
HomologyGroup operator+(const HomologyGroup& a, const HomologyGroup& b);

// Trivial degrees are omitted.
using HomologyMap = std::map<int, HomologyGroup>;

HomologyMap homology(const ChainComplex& c);
HomologyMap reduced_homology(const SSet& k);
HomologyMap integral_homology(const SSet& k);

// Degreewise direct sum.
HomologyMap direct_sum(const HomologyMap& a, const HomologyMap& b);

long euler_characteristic(const HomologyMap& h);
long euler_characteristic(const SSet& k);

// [{"degree": n, "free_rank": r, "torsion": [...]}] sorted by degree.
nlohmann::ordered_json homology_to_json(const HomologyMap& h);
std::string homology_to_text(const HomologyMap& h);

}  // namespace ehpcalc
