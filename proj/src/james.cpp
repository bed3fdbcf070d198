#include "ehpcalc/james.hpp"

#include <cstdint>
#include <functional>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

JamesWord reduce_word(const SSet& k, JamesWord w) {
  std::erase_if(w.letters, [&](const Simplex& s) { return k.is_basepoint(s); });
  return w;
}

JamesWord word_face(const SSet& k, const JamesWord& w, int i) {
  if (w.dim == 0) throw IndexOutOfRange("a vertex has no faces");
  if (i < 0 || i > w.dim) throw IndexOutOfRange("face index " + std::to_string(i) + " out of range");
  JamesWord out{w.dim - 1, {}};
  for (const auto& x : w.letters) out.letters.push_back(k.face(x, i));
  return reduce_word(k, std::move(out));
}

JamesWord word_degeneracy(const SSet& k, const JamesWord& w, int i) {
  if (i < 0 || i > w.dim) throw IndexOutOfRange("degeneracy index " + std::to_string(i) + " out of range");
  JamesWord out{w.dim + 1, {}};
  for (const auto& x : w.letters) out.letters.push_back(k.degeneracy(x, i));
  return reduce_word(k, std::move(out));
}

std::string word_name(const SSet& k, const JamesWord& w) {
  std::string out = "(";
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    if (j) out += '|';
    out += k.simplex_name(w.letters[j]);
  }
  return out + ')';
}

namespace {

std::uint64_t position_mask(const Simplex& s) {
  std::uint64_t mask = 0;
  for (int i : s.degeneracies.indices()) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace

JamesComplex::JamesComplex(SSet k, int n, std::size_t cap)
    : base_(std::make_shared<const SSet>(std::move(k))), n_(n) {
  if (n < 1) throw IndexOutOfRange("truncation level must be at least 1");
  const SSet& base = *base_;
  const int top = n * base.max_dim();
  if (top >= 63) throw CapExceeded("James truncation dimension too large");

  SSetBuilder b;
  const GeneratorId empty = b.add("*", 0);
  b.set_basepoint(empty);
  words_.push_back({0, {}});
  index_.emplace(std::vector<Simplex>{}, empty);

  for (int m = 0; m <= top; ++m) {
    std::vector<Simplex> letters;
    for (const auto& s : base.simplices_of_dim(m))
      if (!base.is_basepoint(s)) letters.push_back(s);
    const std::uint64_t all = m == 0 ? 0 : ((std::uint64_t{1} << m) - 1);

    for (int len = 1; len <= n; ++len) {
      std::vector<Simplex> current;
      std::function<void(std::uint64_t)> visit = [&](std::uint64_t shared) {
        if (static_cast<int>(current.size()) == len) {
          if (shared != 0) return;
          JamesWord w{m, current};
          std::vector<Simplex> faces;
          for (int i = 0; m > 0 && i <= m; ++i) faces.push_back(simplex_of(word_face(base, w, i)));
          const GeneratorId id = b.add(word_name(base, w), m, std::move(faces));
          index_.emplace(current, id);
          words_.push_back(std::move(w));
          if (b.size() > cap)
            throw CapExceeded("J_" + std::to_string(n) + " exceeds " + std::to_string(cap) +
                              " nondegenerate simplices");
          return;
        }
        for (const auto& x : letters) {
          current.push_back(x);
          visit(shared & position_mask(x));
          current.pop_back();
        }
      };
      visit(all);
    }
  }
  sset_ = std::make_shared<const SSet>(std::move(b).build());
}

Simplex JamesComplex::simplex_of(const JamesWord& w) const {
  const JamesWord r = reduce_word(*base_, w);
  if (static_cast<int>(r.length()) > n_)
    throw InvalidComplex("word of length " + std::to_string(r.length()) + " is not in J_" + std::to_string(n_));
  if (r.letters.empty()) {
    std::vector<int> all(static_cast<std::size_t>(w.dim));
    for (int k = 0; k < w.dim; ++k) all[k] = w.dim - 1 - k;
    return {sset_ ? sset_->basepoint() : 0, DegeneracyWord(std::move(all)), w.dim};
  }
  auto factored = factor_common_degeneracies(r.letters, r.dim);
  auto it = index_.find(factored.reduced);
  if (it == index_.end()) throw InvalidComplex("word is not a simplex of the truncation");
  return {it->second, factored.common, r.dim};
}

JamesWord JamesComplex::word_of(const Simplex& s) const {
  const JamesWord& w = generator_word(s.generator);
  JamesWord out{s.dim, {}};
  for (const auto& x : w.letters) out.letters.push_back(base_->degenerate(x, s.degeneracies));
  return out;
}

bool JamesComplex::contains(const JamesWord& w) const {
  const JamesWord r = reduce_word(*base_, w);
  if (static_cast<int>(r.length()) > n_) return false;
  if (r.letters.empty()) return true;
  return index_.contains(factor_common_degeneracies(r.letters, r.dim).reduced);
}

SimplicialMap suspension_unit_E(const JamesComplex& j) {
  const SSet& k = j.base();
  std::vector<Simplex> images;
  images.reserve(k.size());
  for (std::size_t g = 0; g < k.size(); ++g) {
    const Simplex x = k.simplex(static_cast<GeneratorId>(g));
    images.push_back(j.simplex_of({x.dim, {x}}));
  }
  return SimplicialMap(j.shared_base(), j.shared(), std::move(images));
}

std::vector<std::vector<int>> increasing_index_tuples(int q, int r) {
  std::vector<std::vector<int>> out;
  if (r < 1) throw IndexOutOfRange("Hopf invariant index must be at least 1");
  if (r > q) return out;
  std::vector<int> t(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) t[k] = k;
  for (;;) {
    out.push_back(t);
    int k = r - 1;
    while (k >= 0 && t[k] == q - r + k) --k;
    if (k < 0) break;
    ++t[k];
    for (int j = k + 1; j < r; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long out = 1;
  for (int k = 1; k <= r; ++k) out = out * (n - r + k) / k;
  return out;
}

std::vector<std::string> james_hopf_symbolic(const std::vector<std::string>& letters, int r) {
  std::vector<std::string> reduced;
  for (const auto& x : letters)
    if (x != "*") reduced.push_back(x);
  auto out = james_hopf_letters(reduced, r, [](const std::vector<std::string>& picked) {
    std::string s;
    for (const auto& x : picked) {
      if (x == "*") return std::string("*");
      if (!s.empty()) s += '^';
      s += x;
    }
    return s;
  });
  std::erase(out, std::string("*"));
  return out;
}

std::string format_symbolic_word(const std::vector<std::string>& letters) {
  if (letters.empty()) return "()";
  std::string out;
  for (const auto& x : letters) out += "(" + x + ")";
  return out;
}

JamesHopfMap::JamesHopfMap(SSet k, int n, int r, std::size_t cap)
    : source_(k, n, cap), smash_(std::vector<SSet>(static_cast<std::size_t>(r < 1 ? 1 : r), k)), r_(r) {
  if (r < 1) throw IndexOutOfRange("Hopf invariant index must be at least 1");
}

JamesWord JamesHopfMap::image(const JamesWord& w) const {
  const JamesWord reduced = reduce_word(source_.base(), w);
  JamesWord out{w.dim, james_hopf_letters(reduced.letters, r_, [&](const std::vector<Simplex>& picked) {
                  return smash_.combine(picked);
                })};
  return reduce_word(smash_.sset(), std::move(out));
}

bool JamesHopfMap::verify_simplicial() const {
  const SSet& j = source_.sset();
  const SSet& k = source_.base();
  const SSet& target = smash_.sset();
  for (std::size_t g = 0; g < j.size(); ++g) {
    const JamesWord& w = source_.generator_word(static_cast<GeneratorId>(g));
    const JamesWord hw = image(w);
    for (int i = 0; w.dim > 0 && i <= w.dim; ++i)
      if (image(word_face(k, w, i)) != word_face(target, hw, i)) return false;
    for (int i = 0; i <= w.dim; ++i)
      if (image(word_degeneracy(k, w, i)) != word_degeneracy(target, hw, i)) return false;
  }
  return true;
}

SimplicialMap JamesHopfMap::as_simplicial_map(std::size_t cap) const {
  const int level = static_cast<int>(std::max(1L, target_level()));
  JamesComplex target(smash_.sset(), level, cap);
  const SSet& j = source_.sset();
  std::vector<Simplex> images;
  images.reserve(j.size());
  for (std::size_t g = 0; g < j.size(); ++g)
    images.push_back(target.simplex_of(image(source_.generator_word(static_cast<GeneratorId>(g)))));
  return SimplicialMap(source_.shared(), target.shared(), std::move(images));
}

JamesQuotient james_quotient(const SSet& k, int n, std::size_t cap) {
  JamesComplex j(k, n, cap);
  const SSet& js = j.sset();
  std::vector<bool> collapse(js.size());
  for (std::size_t g = 0; g < js.size(); ++g)
    collapse[g] = static_cast<int>(j.generator_word(static_cast<GeneratorId>(g)).length()) < n;
  JamesQuotient out{quotient(js, collapse).sset, {}};
  out.witness = is_isomorphic(out.sset, smash_power(k, n));
  return out;
}

bool cartan_word_check(const SSet& k, const std::vector<Simplex>& letters) {
  if (letters.empty()) return true;
  const int dim = letters.front().dim;
  for (const auto& x : letters)
    if (x.dim != dim) throw DegreeMismatch("letters of a word must share one dimension");
  const SmashComplex sm({k, k});
  auto combine = [&](const std::vector<Simplex>& picked) { return sm.combine(picked); };
  const JamesWord reduced = reduce_word(k, {dim, letters});
  const JamesWord lhs = reduce_word(sm.sset(), {dim, james_hopf_letters(reduced.letters, 2, combine)});
  JamesWord rhs{dim, {}};
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      JamesWord one = reduce_word(sm.sset(), {dim, {sm.combine(std::vector<Simplex>{letters[i], letters[j]})}});
      rhs.letters.insert(rhs.letters.end(), one.letters.begin(), one.letters.end());
    }
  return lhs == rhs;
}

bool cartan_word_check(const std::vector<std::string>& letters) {
  const auto lhs = james_hopf_symbolic(letters, 2);
  std::vector<std::string> rhs;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      auto one = james_hopf_symbolic({letters[i], letters[j]}, 2);
      rhs.insert(rhs.end(), one.begin(), one.end());
    }
  return lhs == rhs;
}

bool hopf_naturality_holds(const SimplicialMap& f, int n, int r) {
  const SSet& a = f.source();
  const SSet& b = f.target();
  JamesHopfMap ha(a, n, r), hb(b, n, r);
  const SmashComplex& sa = ha.smash();
  const SmashComplex& sb = hb.smash();
  const SSet& ja = ha.source().sset();
  for (std::size_t g = 0; g < ja.size(); ++g) {
    const JamesWord& w = ha.source().generator_word(static_cast<GeneratorId>(g));
    JamesWord fw{w.dim, {}};
    for (const auto& x : w.letters) fw.letters.push_back(f(x));
    const JamesWord lhs = hb.image(reduce_word(b, std::move(fw)));

    JamesWord rhs{w.dim, {}};
    for (const auto& letter : ha.image(w).letters) {
      std::vector<Simplex> parts;
      for (const auto& c : sa.components(letter)) parts.push_back(f(c));
      rhs.letters.push_back(sb.combine(parts));
    }
    if (lhs != reduce_word(sb.sset(), std::move(rhs))) return false;
  }
  return true;
}

bool filtration_inclusion_holds(const SSet& k, int n, std::size_t cap) {
  JamesComplex small(k, n, cap), big(k, n + 1, cap);
  for (std::size_t g = 0; g < big.sset().size(); ++g) {
    const JamesWord& w = big.generator_word(static_cast<GeneratorId>(g));
    if (static_cast<int>(w.length()) <= n && !small.contains(w)) return false;
  }
  return true;
}

}  // namespace ehpcalc
