#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/simplicial.hpp"

namespace ehpcalc {

inline constexpr std::size_t kDefaultJamesCap = 2000;

// A simplex of J(K): letters of one dimension, basepoint letters deleted.
struct JamesWord {
  int dim = 0;
  std::vector<Simplex> letters;

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const JamesWord&) const = default;
};

JamesWord reduce_word(const SSet& k, JamesWord w);
JamesWord word_face(const SSet& k, const JamesWord& w, int i);
JamesWord word_degeneracy(const SSet& k, const JamesWord& w, int i);
// "(x|s0 y)", "()" for the empty word.
std::string word_name(const SSet& k, const JamesWord& w);

// J_n(K) as a finite simplicial set. Its nondegenerate simplices are reduced words of length at
// most n whose letters share no degeneracy.
class JamesComplex {
 public:
  JamesComplex(SSet k, int n, std::size_t cap = kDefaultJamesCap);

  const SSet& sset() const { return *sset_; }
  std::shared_ptr<const SSet> shared() const { return sset_; }
  const SSet& base() const { return *base_; }
  std::shared_ptr<const SSet> shared_base() const { return base_; }
  int level() const { return n_; }

  // Throws InvalidComplex if the reduced word is longer than the truncation level.
  Simplex simplex_of(const JamesWord& w) const;
  JamesWord word_of(const Simplex& s) const;
  const JamesWord& generator_word(GeneratorId id) const { return words_.at(static_cast<std::size_t>(id)); }
  bool contains(const JamesWord& w) const;

 private:
  std::shared_ptr<const SSet> base_;
  int n_;
  std::shared_ptr<const SSet> sset_;
  std::vector<JamesWord> words_;
  std::map<std::vector<Simplex>, GeneratorId> index_;
};

inline SSet james_truncation(const SSet& k, int n, std::size_t cap = kDefaultJamesCap) {
  return JamesComplex(k, n, cap).sset();
}

// E: K -> J_n(K), x -> (x).
SimplicialMap suspension_unit_E(const JamesComplex& j);

// Strictly increasing r-tuples of 0..q-1 in lexicographic order.
std::vector<std::vector<int>> increasing_index_tuples(int q, int r);

long binomial(int n, int r);

// x_1...x_q -> product over increasing tuples of combine(x_{i_1}, ..., x_{i_r}), unreduced.
template <class Letter, class Combine>
std::vector<Letter> james_hopf_letters(const std::vector<Letter>& letters, int r, Combine combine) {
  std::vector<Letter> out;
  for (const auto& tuple : increasing_index_tuples(static_cast<int>(letters.size()), r)) {
    std::vector<Letter> picked;
    picked.reserve(tuple.size());
    for (int i : tuple) picked.push_back(letters[i]);
    out.push_back(combine(picked));
  }
  return out;
}

// Symbolic letters: "*" is the basepoint; r-fold smashes are written "x^y" and collapse to "*"
// when a component is "*".
std::vector<std::string> james_hopf_symbolic(const std::vector<std::string>& letters, int r);
// "(x^y)(x^z)(y^z)", "()" for the empty word.
std::string format_symbolic_word(const std::vector<std::string>& letters);

// H_r on J_n(K), valued in reduced words over K^r (smash power).
class JamesHopfMap {
 public:
  JamesHopfMap(SSet k, int n, int r, std::size_t cap = kDefaultJamesCap);

  const JamesComplex& source() const { return source_; }
  const SmashComplex& smash() const { return smash_; }
  int r() const { return r_; }
  // Truncation level C(n, r) of the target.
  long target_level() const { return binomial(source_.level(), r_); }

  JamesWord image(const JamesWord& w) const;
  JamesWord image(const Simplex& s) const { return image(source_.word_of(s)); }

  // H(d_i w) = d_i H(w) and H(s_i w) = s_i H(w) on every nondegenerate simplex of the source.
  bool verify_simplicial() const;
  // H as a map of finite simplicial sets J_n(K) -> J_{C(n,r)}(K^r); the target is enumerated
  // and may exceed the cap.
  SimplicialMap as_simplicial_map(std::size_t cap = kDefaultJamesCap) const;

 private:
  JamesComplex source_;
  SmashComplex smash_;
  int r_;
};

struct JamesQuotient {
  SSet sset;
  IsomorphismResult witness;  // against the n-fold smash power
};

// J_n(K)/J_{n-1}(K) with an isomorphism witness to K^n.
JamesQuotient james_quotient(const SSet& k, int n, std::size_t cap = kDefaultJamesCap);

// H_2(x_1...x_q) equals the concatenation over i < j of the one-letter words (x_i ^ x_j),
// both sides reduced.
bool cartan_word_check(const SSet& k, const std::vector<Simplex>& letters);
bool cartan_word_check(const std::vector<std::string>& letters);

// J(f) commutes with H_r on every nondegenerate simplex of J_n(source).
bool hopf_naturality_holds(const SimplicialMap& f, int n, int r);

// Every word of J_{n+1}(K) of length at most n is a simplex of J_n(K).
bool filtration_inclusion_holds(const SSet& k, int n, std::size_t cap = kDefaultJamesCap);

}  // namespace ehpcalc
