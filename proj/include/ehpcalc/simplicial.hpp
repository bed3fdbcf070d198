#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ehpcalc {

using GeneratorId = int;

// Degeneracy operator s_{i_k} ... s_{i_1} in Eilenberg-Zilber normal form.
// Indices are stored as written, strictly decreasing; s_{i_1} acts first.
class DegeneracyWord {
 public:
  DegeneracyWord() = default;
  explicit DegeneracyWord(std::vector<int> decreasing);

  // Positions may come in any order; duplicates are rejected.
  static DegeneracyWord from_positions(std::vector<int> positions);

  const std::vector<int>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }
  std::size_t length() const { return indices_.size(); }
  bool contains(int i) const;

  // "s2 s0", empty string for the identity.
  std::string to_string() const;

  auto operator<=>(const DegeneracyWord&) const = default;

 private:
  std::vector<int> indices_;
};

// A simplex of a simplicial set: a nondegenerate generator with a degeneracy word applied.
struct Simplex {
  GeneratorId generator = 0;
  DegeneracyWord degeneracies;
  int dim = 0;

  bool is_degenerate() const { return !degeneracies.empty(); }
  auto operator<=>(const Simplex&) const = default;
};

struct SimplicialOperator {
  enum class Kind { Face, Degeneracy };
  Kind kind = Kind::Face;
  int index = 0;

  static SimplicialOperator face(int i) { return {Kind::Face, i}; }
  static SimplicialOperator degeneracy(int i) { return {Kind::Degeneracy, i}; }
};

// Surjection [dim] -> [dim - |word|] encoded by a degeneracy word, and back.
std::vector<int> surjection_of(const DegeneracyWord& word, int dim);
DegeneracyWord degeneracies_of_surjection(std::span<const int> surjection);

struct CommonDegeneracies {
  DegeneracyWord common;
  std::vector<Simplex> reduced;
};

// Writes a family of simplices of equal dimension as s_P applied to a family with no
// degeneracy shared by all members. Used for products, smash products and James words.
CommonDegeneracies factor_common_degeneracies(std::span<const Simplex> simplices, int dim);

// A finite pointed simplicial set stored through its nondegenerate generators.
// Generator ids are ordered by dimension; degenerate simplices are never stored.
class SSet {
 public:
  struct Generator {
    std::string name;
    int dim = 0;
    std::vector<Simplex> faces;  // d_0 ... d_dim, empty for vertices

    bool operator==(const Generator&) const = default;
  };

  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(GeneratorId id) const { return gens_.at(static_cast<std::size_t>(id)); }
  std::size_t size() const { return gens_.size(); }
  GeneratorId basepoint() const { return base_; }
  int max_dim() const;

  // Number of nondegenerate generators in each dimension 0..max_dim.
  std::vector<std::size_t> counts() const;
  std::vector<GeneratorId> generators_of_dim(int dim) const;
  std::optional<GeneratorId> find(std::string_view name) const;

  Simplex simplex(GeneratorId id) const;
  Simplex degenerate_basepoint(int dim) const;
  bool is_basepoint(const Simplex& s) const { return s.generator == base_; }

  Simplex face(const Simplex& s, int i) const;
  Simplex degeneracy(const Simplex& s, int i) const;
  Simplex apply(const Simplex& s, SimplicialOperator op) const;
  // Applies the word to s, innermost operator first.
  Simplex degenerate(const Simplex& s, const DegeneracyWord& word) const;

  // Every simplex of dimension dim, degenerate ones included.
  std::vector<Simplex> simplices_of_dim(int dim) const;

  // "s1 s0 name"
  std::string simplex_name(const Simplex& s) const;

  bool operator==(const SSet&) const = default;

 private:
  friend class SSetBuilder;
  std::vector<Generator> gens_;
  GeneratorId base_ = 0;
};

class SSetBuilder {
 public:
  // Generators must be added in nondecreasing dimension; faces may only refer to
  // generators already added.
  GeneratorId add(std::string name, int dim, std::vector<Simplex> faces = {});
  void set_basepoint(GeneratorId id) { base_ = id; }
  std::size_t size() const { return gens_.size(); }

  // Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) on every generator.
  SSet build() &&;

 private:
  std::vector<SSet::Generator> gens_;
  std::set<std::string, std::less<>> names_;
  std::optional<GeneratorId> base_;
};

// Pointed simplicial map given by the images of the generators.
class SimplicialMap {
 public:
  SimplicialMap(std::shared_ptr<const SSet> source, std::shared_ptr<const SSet> target,
                std::vector<Simplex> images);

  Simplex operator()(const Simplex& s) const;
  const SSet& source() const { return *source_; }
  const SSet& target() const { return *target_; }
  const std::vector<Simplex>& images() const { return images_; }

  // True iff f(d_i x) = d_i f(x) for every generator x and every i, and f(*) = *.
  bool commutes_with_faces() const;

 private:
  std::shared_ptr<const SSet> source_;
  std::shared_ptr<const SSet> target_;
  std::vector<Simplex> images_;
};

}  // namespace ehpcalc
