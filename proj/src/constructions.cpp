#include "ehpcalc/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

namespace {

Simplex degenerate_vertex(GeneratorId vertex, int dim) {
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) all[k] = dim - 1 - k;
  return {vertex, DegeneracyWord(std::move(all)), dim};
}

std::uint64_t position_mask(const Simplex& s) {
  std::uint64_t mask = 0;
  for (int i : s.degeneracies.indices()) mask |= std::uint64_t{1} << i;
  return mask;
}

std::string unique_name(std::string name, const std::set<std::string>& taken) {
  while (taken.contains(name)) name += '\'';
  return name;
}

}  // namespace

SSet build_sphere(int n) {
  if (n < 0) throw IndexOutOfRange("sphere dimension must be non-negative");
  SSetBuilder b;
  const GeneratorId base = b.add("*", 0);
  b.set_basepoint(base);
  if (n == 0) {
    b.add("e0", 0);
  } else {
    std::vector<Simplex> faces(static_cast<std::size_t>(n) + 1, degenerate_vertex(base, n - 1));
    b.add("e" + std::to_string(n), n, std::move(faces));
  }
  return std::move(b).build();
}

SSet point() {
  SSetBuilder b;
  b.set_basepoint(b.add("*", 0));
  return std::move(b).build();
}

SSet wedge(const SSet& a, const SSet& b) {
  SSetBuilder out;
  std::vector<GeneratorId> from_a(a.size()), from_b(b.size());
  std::set<std::string> taken;
  for (const auto& g : a.generators()) taken.insert(g.name);

  auto remap = [](const std::vector<Simplex>& faces, const std::vector<GeneratorId>& ids) {
    std::vector<Simplex> out_faces;
    for (const auto& f : faces) out_faces.push_back({ids[f.generator], f.degeneracies, f.dim});
    return out_faces;
  };
  const int top = std::max(a.max_dim(), b.max_dim());
  for (int d = 0; d <= top; ++d) {
    for (GeneratorId g : a.generators_of_dim(d)) {
      const auto& gen = a.generator(g);
      from_a[g] = out.add(gen.name, d, remap(gen.faces, from_a));
    }
    for (GeneratorId g : b.generators_of_dim(d)) {
      if (g == b.basepoint()) {
        from_b[g] = from_a[a.basepoint()];
        continue;
      }
      const auto& gen = b.generator(g);
      std::string name = unique_name(gen.name, taken);
      taken.insert(name);
      from_b[g] = out.add(std::move(name), d, remap(gen.faces, from_b));
    }
  }
  out.set_basepoint(from_a[a.basepoint()]);
  return std::move(out).build();
}

Quotient quotient(const SSet& k, const std::vector<bool>& collapse) {
  if (collapse.size() != k.size() || !collapse[k.basepoint()])
    throw InvalidComplex("the collapsed subcomplex must contain the basepoint");
  std::set<std::string> taken;
  for (std::size_t g = 0; g < k.size(); ++g)
    if (!collapse[g]) taken.insert(k.generators()[g].name);

  SSetBuilder b;
  const GeneratorId base = b.add(unique_name("*", taken), 0);
  b.set_basepoint(base);
  Quotient out;
  out.image.assign(k.size(), std::nullopt);
  for (std::size_t g = 0; g < k.size(); ++g) {
    if (collapse[g]) continue;
    const auto& gen = k.generators()[g];
    std::vector<Simplex> faces;
    for (const auto& f : gen.faces) {
      if (collapse[f.generator])
        faces.push_back(degenerate_vertex(base, f.dim));
      else
        faces.push_back({*out.image[f.generator], f.degeneracies, f.dim});
    }
    out.image[g] = b.add(gen.name, gen.dim, std::move(faces));
  }
  out.sset = std::move(b).build();
  return out;
}

ProductComplex::ProductComplex(std::vector<SSet> factors, std::string separator, std::size_t cap)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidComplex("product of no factors");
  int top = 0;
  for (const auto& f : factors_) top += f.max_dim();
  if (top >= 63) throw CapExceeded("product dimension too large");

  SSetBuilder b;
  for (int m = 0; m <= top; ++m) {
    std::vector<std::vector<Simplex>> level;
    level.reserve(factors_.size());
    for (const auto& f : factors_) level.push_back(f.simplices_of_dim(m));
    const std::uint64_t all = m == 0 ? 0 : ((std::uint64_t{1} << m) - 1);

    std::vector<Simplex> current;
    std::function<void(std::size_t, std::uint64_t)> visit = [&](std::size_t c, std::uint64_t shared) {
      if (c == factors_.size()) {
        if (shared != 0) return;
        std::string name = "(";
        std::vector<Simplex> faces;
        for (std::size_t j = 0; j < current.size(); ++j) {
          if (j) name += separator;
          name += factors_[j].simplex_name(current[j]);
        }
        name += ')';
        for (int i = 0; m > 0 && i <= m; ++i) {
          std::vector<Simplex> face_components;
          for (std::size_t j = 0; j < current.size(); ++j)
            face_components.push_back(factors_[j].face(current[j], i));
          faces.push_back(combine(face_components));
        }
        const GeneratorId id = b.add(std::move(name), m, std::move(faces));
        tuples_.push_back(current);
        index_.emplace(current, id);
        if (b.size() > cap)
          throw CapExceeded("product exceeds " + std::to_string(cap) + " nondegenerate simplices");
        return;
      }
      for (const auto& s : level[c]) {
        current.push_back(s);
        visit(c + 1, shared & position_mask(s));
        current.pop_back();
      }
    };
    visit(0, all);
  }
  std::vector<Simplex> base_tuple;
  for (const auto& f : factors_) base_tuple.push_back(f.simplex(f.basepoint()));
  b.set_basepoint(index_.at(base_tuple));
  sset_ = std::move(b).build();
}

Simplex ProductComplex::combine(std::span<const Simplex> components) const {
  if (components.size() != factors_.size()) throw InvalidComplex("wrong number of product components");
  const int dim = components.front().dim;
  auto factored = factor_common_degeneracies(components, dim);
  auto it = index_.find(factored.reduced);
  if (it == index_.end()) throw InvalidComplex("tuple is not a simplex of the product");
  return {it->second, factored.common, dim};
}

std::vector<Simplex> ProductComplex::components(const Simplex& s) const {
  const auto& t = tuple(s.generator);
  std::vector<Simplex> out;
  out.reserve(t.size());
  for (std::size_t j = 0; j < t.size(); ++j) out.push_back(factors_[j].degenerate(t[j], s.degeneracies));
  return out;
}

SmashComplex::SmashComplex(std::vector<SSet> factors, std::size_t cap)
    : product_(std::move(factors), "^", cap) {
  const auto& prod = product_.sset();
  std::vector<bool> collapse(prod.size(), false);
  for (std::size_t g = 0; g < prod.size(); ++g) {
    const auto& t = product_.tuple(static_cast<GeneratorId>(g));
    for (std::size_t j = 0; j < t.size(); ++j)
      if (product_.factors()[j].is_basepoint(t[j])) collapse[g] = true;
  }
  auto q = quotient(prod, collapse);
  sset_ = std::move(q.sset);
  to_smash_ = std::move(q.image);
  to_product_.assign(sset_.size(), prod.basepoint());
  for (std::size_t g = 0; g < to_smash_.size(); ++g)
    if (to_smash_[g]) to_product_[*to_smash_[g]] = static_cast<GeneratorId>(g);
}

Simplex SmashComplex::combine(std::span<const Simplex> components) const {
  if (components.size() != arity()) throw InvalidComplex("wrong number of smash components");
  const int dim = components.front().dim;
  for (std::size_t j = 0; j < components.size(); ++j)
    if (factors()[j].is_basepoint(components[j])) return sset_.degenerate_basepoint(dim);
  const Simplex p = product_.combine(components);
  return {*to_smash_[p.generator], p.degeneracies, p.dim};
}

std::vector<Simplex> SmashComplex::components(const Simplex& s) const {
  return product_.components({to_product_.at(static_cast<std::size_t>(s.generator)), s.degeneracies, s.dim});
}

SSet product(const SSet& a, const SSet& b) { return ProductComplex({a, b}).sset(); }

SSet smash(const SSet& a, const SSet& b) { return SmashComplex({a, b}).sset(); }

SSet smash_power(const SSet& k, int r) {
  if (r < 1) throw IndexOutOfRange("smash power needs r >= 1");
  return SmashComplex(std::vector<SSet>(static_cast<std::size_t>(r), k)).sset();
}

SSet suspension(const SSet& k) { return smash(build_sphere(1), k); }

namespace {

// Local isomorphism invariant of a generator: its dimension, face pattern and coface profile.
std::vector<int> generator_signature(const SSet& k, GeneratorId g,
                                     const std::vector<std::vector<int>>& cofaces) {
  const auto& gen = k.generator(g);
  std::vector<int> sig{gen.dim, g == k.basepoint() ? 1 : 0};
  for (const auto& f : gen.faces) {
    sig.push_back(k.is_basepoint(f) ? -1 : -2);
    for (int i : f.degeneracies.indices()) sig.push_back(i);
    sig.push_back(-3);
  }
  sig.push_back(-4);
  sig.insert(sig.end(), cofaces[g].begin(), cofaces[g].end());
  return sig;
}

std::vector<std::vector<int>> coface_profiles(const SSet& k) {
  std::vector<std::vector<int>> out(k.size());
  for (const auto& gen : k.generators())
    for (std::size_t i = 0; i < gen.faces.size(); ++i) {
      const auto& f = gen.faces[i];
      // (coface dimension, face index, degeneracy word) packed into one integer.
      int code = gen.dim * 4096 + static_cast<int>(i) * 64;
      for (int d : f.degeneracies.indices()) code += 1 << std::min(d, 5);
      out[f.generator].push_back(code);
    }
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const SSet& a, const SSet& b) : a_(a), b_(b) {
    const auto ca = coface_profiles(a), cb = coface_profiles(b);
    for (std::size_t g = 0; g < a.size(); ++g) sig_a_.push_back(generator_signature(a, static_cast<GeneratorId>(g), ca));
    for (std::size_t g = 0; g < b.size(); ++g) sig_b_.push_back(generator_signature(b, static_cast<GeneratorId>(g), cb));
    map_.assign(a.size(), -1);
    used_.assign(b.size(), false);
    for (std::size_t g = 0; g < a.size(); ++g) order_.push_back(static_cast<GeneratorId>(g));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](GeneratorId x, GeneratorId y) { return a.generator(x).dim > a.generator(y).dim; });
  }

  std::optional<std::vector<GeneratorId>> run() {
    if (!assign(a_.basepoint(), b_.basepoint())) return std::nullopt;
    if (!search(0)) return std::nullopt;
    return map_;
  }

 private:
  bool assign(GeneratorId x, GeneratorId y) {
    if (map_[x] != -1) return map_[x] == y;
    if (used_[y] || sig_a_[x] != sig_b_[y]) return false;
    map_[x] = y;
    used_[y] = true;
    trail_.push_back(x);
    const auto& fx = a_.generator(x).faces;
    const auto& fy = b_.generator(y).faces;
    for (std::size_t i = 0; i < fx.size(); ++i) {
      if (fx[i].degeneracies != fy[i].degeneracies) return false;
      if (!assign(fx[i].generator, fy[i].generator)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      used_[map_[trail_.back()]] = false;
      map_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  bool search(std::size_t pos) {
    while (pos < order_.size() && map_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) return true;
    const GeneratorId x = order_[pos];
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || sig_a_[x] != sig_b_[y]) continue;
      const std::size_t mark = trail_.size();
      if (assign(x, static_cast<GeneratorId>(y)) && search(pos + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const SSet& a_;
  const SSet& b_;
  std::vector<std::vector<int>> sig_a_, sig_b_;
  std::vector<GeneratorId> map_;
  std::vector<bool> used_;
  std::vector<GeneratorId> order_;
  std::vector<GeneratorId> trail_;
};

}  // namespace

IsomorphismResult is_isomorphic(const SSet& a, const SSet& b, std::size_t cap) {
  if (a.size() > cap || b.size() > cap)
    throw CapExceeded("isomorphism search is capped at " + std::to_string(cap) + " generators");
  if (a.counts() != b.counts()) return {};
  IsomorphismSearch search(a, b);
  auto found = search.run();
  if (!found) return {};
  return {true, std::move(*found)};
}

}  // namespace ehpcalc
