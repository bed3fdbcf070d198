#include "ehpcalc/simplicial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

DegeneracyWord::DegeneracyWord(std::vector<int> decreasing) : indices_(std::move(decreasing)) {
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 0) throw IndexOutOfRange("negative degeneracy index");
    if (k > 0 && indices_[k] >= indices_[k - 1])
      throw InvalidComplex("degeneracy word is not strictly decreasing: " + to_string());
  }
}

DegeneracyWord DegeneracyWord::from_positions(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end())
    throw InvalidComplex("repeated degeneracy position");
  return DegeneracyWord(std::move(positions));
}

bool DegeneracyWord::contains(int i) const {
  return std::find(indices_.begin(), indices_.end(), i) != indices_.end();
}

std::string DegeneracyWord::to_string() const {
  std::string out;
  for (int i : indices_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(i);
  }
  return out;
}

std::vector<int> surjection_of(const DegeneracyWord& word, int dim) {
  std::vector<int> sigma(static_cast<std::size_t>(dim) + 1, 0);
  for (int k = 0; k < dim; ++k) sigma[k + 1] = sigma[k] + (word.contains(k) ? 0 : 1);
  return sigma;
}

DegeneracyWord degeneracies_of_surjection(std::span<const int> surjection) {
  std::vector<int> positions;
  for (std::size_t k = surjection.size(); k-- > 1;)
    if (surjection[k] == surjection[k - 1]) positions.push_back(static_cast<int>(k - 1));
  return DegeneracyWord(std::move(positions));
}

CommonDegeneracies factor_common_degeneracies(std::span<const Simplex> simplices, int dim) {
  std::vector<std::vector<int>> sigmas;
  sigmas.reserve(simplices.size());
  for (const auto& s : simplices) {
    if (s.dim != dim) throw InvalidComplex("mixed dimensions in simplex family");
    sigmas.push_back(surjection_of(s.degeneracies, dim));
  }
  std::vector<int> common;
  std::vector<int> keep{0};
  for (int k = 0; k < dim; ++k) {
    bool shared = std::all_of(sigmas.begin(), sigmas.end(),
                              [k](const auto& sg) { return sg[k] == sg[k + 1]; });
    if (shared)
      common.push_back(k);
    else
      keep.push_back(k + 1);
  }
  CommonDegeneracies out;
  out.common = DegeneracyWord::from_positions(common);
  const int reduced_dim = dim - static_cast<int>(common.size());
  for (std::size_t j = 0; j < simplices.size(); ++j) {
    std::vector<int> collapsed;
    collapsed.reserve(keep.size());
    for (int pos : keep) collapsed.push_back(sigmas[j][pos]);
    out.reduced.push_back({simplices[j].generator, degeneracies_of_surjection(collapsed), reduced_dim});
  }
  return out;
}

int SSet::max_dim() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, g.dim);
  return d;
}

std::vector<std::size_t> SSet::counts() const {
  std::vector<std::size_t> c(static_cast<std::size_t>(max_dim()) + 1, 0);
  for (const auto& g : gens_) ++c[g.dim];
  return c;
}

std::vector<GeneratorId> SSet::generators_of_dim(int dim) const {
  std::vector<GeneratorId> out;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].dim == dim) out.push_back(static_cast<GeneratorId>(i));
  return out;
}

std::optional<GeneratorId> SSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<GeneratorId>(i);
  return std::nullopt;
}

Simplex SSet::simplex(GeneratorId id) const { return {id, {}, generator(id).dim}; }

Simplex SSet::degenerate_basepoint(int dim) const {
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int k = 0; k < dim; ++k) all[k] = dim - 1 - k;
  return {base_, DegeneracyWord(std::move(all)), dim};
}

Simplex SSet::face(const Simplex& s, int i) const {
  const int m = s.dim;
  if (m == 0) throw IndexOutOfRange("a vertex has no faces");
  if (i < 0 || i > m)
    throw IndexOutOfRange("face index " + std::to_string(i) + " out of range for dimension " +
                          std::to_string(m));
  const auto sigma = surjection_of(s.degeneracies, m);
  const int value = sigma[i];
  const bool alone = (i == 0 || sigma[i - 1] != value) && (i == m || sigma[i + 1] != value);
  std::vector<int> rest;
  rest.reserve(sigma.size() - 1);
  for (int k = 0; k <= m; ++k)
    if (k != i) rest.push_back(sigma[k]);
  if (!alone) return {s.generator, degeneracies_of_surjection(rest), m - 1};

  // d_i hits the generator itself: substitute its stored face and compose surjections.
  for (int& v : rest)
    if (v > value) --v;
  const Simplex& y = generator(s.generator).faces.at(static_cast<std::size_t>(value));
  const auto tau = surjection_of(y.degeneracies, y.dim);
  std::vector<int> composed;
  composed.reserve(rest.size());
  for (int v : rest) composed.push_back(tau[v]);
  return {y.generator, degeneracies_of_surjection(composed), m - 1};
}

Simplex SSet::degeneracy(const Simplex& s, int i) const {
  const int m = s.dim;
  if (i < 0 || i > m)
    throw IndexOutOfRange("degeneracy index " + std::to_string(i) + " out of range for dimension " +
                          std::to_string(m));
  auto sigma = surjection_of(s.degeneracies, m);
  sigma.insert(sigma.begin() + i + 1, sigma[i]);
  return {s.generator, degeneracies_of_surjection(sigma), m + 1};
}

Simplex SSet::apply(const Simplex& s, SimplicialOperator op) const {
  return op.kind == SimplicialOperator::Kind::Face ? face(s, op.index) : degeneracy(s, op.index);
}

Simplex SSet::degenerate(const Simplex& s, const DegeneracyWord& word) const {
  Simplex out = s;
  const auto& idx = word.indices();
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) out = degeneracy(out, *it);
  return out;
}

std::vector<Simplex> SSet::simplices_of_dim(int dim) const {
  std::vector<Simplex> out;
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    const int p = gens_[g].dim;
    if (p > dim) continue;
    const int extra = dim - p;
    // Subsets of {0..dim-1} of size extra, by bitmask in increasing order.
    std::vector<bool> mask(static_cast<std::size_t>(dim), false);
    std::fill(mask.end() - extra, mask.end(), true);
    do {
      std::vector<int> pos;
      for (int k = 0; k < dim; ++k)
        if (mask[k]) pos.push_back(k);
      out.push_back({static_cast<GeneratorId>(g), DegeneracyWord::from_positions(pos), dim});
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return out;
}

std::string SSet::simplex_name(const Simplex& s) const {
  std::string prefix = s.degeneracies.to_string();
  if (!prefix.empty()) prefix += ' ';
  return prefix + generator(s.generator).name;
}

namespace {

bool looks_like_degeneracy_prefix(std::string_view name) {
  if (name.size() < 3 || name[0] != 's') return false;
  std::size_t k = 1;
  while (k < name.size() && std::isdigit(static_cast<unsigned char>(name[k]))) ++k;
  return k > 1 && k < name.size() && name[k] == ' ';
}

}  // namespace

GeneratorId SSetBuilder::add(std::string name, int dim, std::vector<Simplex> faces) {
  if (dim < 0) throw InvalidComplex("negative generator dimension");
  if (name.empty() || looks_like_degeneracy_prefix(name) || name.find('"') != std::string::npos)
    throw InvalidComplex("invalid generator name '" + name + "'");
  if (!gens_.empty() && gens_.back().dim > dim)
    throw InvalidComplex("generators must be added in nondecreasing dimension");
  if (faces.size() != (dim == 0 ? 0u : static_cast<std::size_t>(dim) + 1))
    throw InvalidComplex("generator '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  for (const auto& f : faces) {
    if (f.generator < 0 || static_cast<std::size_t>(f.generator) >= gens_.size())
      throw InvalidComplex("face of '" + name + "' refers to an unknown generator");
    const auto& g = gens_[f.generator];
    if (f.dim != dim - 1 || g.dim + static_cast<int>(f.degeneracies.length()) != f.dim)
      throw InvalidComplex("face of '" + name + "' has the wrong dimension");
    for (int i : f.degeneracies.indices())
      if (i >= f.dim) throw InvalidComplex("face of '" + name + "' has an out-of-range degeneracy");
  }
  if (!names_.insert(name).second) throw InvalidComplex("duplicate generator name '" + name + "'");
  gens_.push_back({std::move(name), dim, std::move(faces)});
  return static_cast<GeneratorId>(gens_.size() - 1);
}

SSet SSetBuilder::build() && {
  SSet out;
  out.gens_ = std::move(gens_);
  if (!base_ || *base_ < 0 || static_cast<std::size_t>(*base_) >= out.gens_.size() ||
      out.gens_[*base_].dim != 0)
    throw InvalidComplex("basepoint must be a vertex");
  out.base_ = *base_;
  for (std::size_t g = 0; g < out.gens_.size(); ++g) {
    const int n = out.gens_[g].dim;
    if (n < 2) continue;
    const auto& faces = out.gens_[g].faces;
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (out.face(faces[j], i) != out.face(faces[i], j - 1))
          throw InvalidComplex("simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                               " fails on '" + out.gens_[g].name + "'");
  }
  return out;
}

SimplicialMap::SimplicialMap(std::shared_ptr<const SSet> source, std::shared_ptr<const SSet> target,
                             std::vector<Simplex> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw InvalidComplex("map needs one image per generator");
  for (std::size_t g = 0; g < images_.size(); ++g)
    if (images_[g].dim != source_->generators()[g].dim)
      throw InvalidComplex("map changes the dimension of '" + source_->generators()[g].name + "'");
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  return target_->degenerate(images_.at(static_cast<std::size_t>(s.generator)), s.degeneracies);
}

bool SimplicialMap::commutes_with_faces() const {
  if (!target_->is_basepoint(images_[source_->basepoint()])) return false;
  for (std::size_t g = 0; g < images_.size(); ++g) {
    const auto& gen = source_->generators()[g];
    for (int i = 0; i < static_cast<int>(gen.faces.size()); ++i)
      if ((*this)(gen.faces[i]) != target_->face(images_[g], i)) return false;
  }
  return true;
}

}  // namespace ehpcalc
