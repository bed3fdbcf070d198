#include "ehpcalc/sset_io.hpp"

#include <cctype>
#include <map>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

using nlohmann::ordered_json;

ordered_json sset_to_json(const SSet& k) {
  ordered_json doc;
  doc["basepoint"] = k.generator(k.basepoint()).name;
  ordered_json dims = ordered_json::array();
  for (int d = 0; d <= k.max_dim(); ++d) {
    ordered_json gens = ordered_json::array();
    for (GeneratorId g : k.generators_of_dim(d)) {
      const auto& gen = k.generator(g);
      ordered_json faces = ordered_json::array();
      for (const auto& f : gen.faces) faces.push_back(k.simplex_name(f));
      gens.push_back({{"name", gen.name}, {"faces", faces}});
    }
    if (!gens.empty()) dims.push_back({{"dim", d}, {"generators", gens}});
  }
  doc["dimensions"] = dims;
  return doc;
}

std::pair<std::string, DegeneracyWord> split_simplex_name(std::string_view text) {
  std::vector<int> indices;
  for (;;) {
    if (text.size() < 3 || text[0] != 's') break;
    std::size_t k = 1;
    while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
    if (k == 1 || k >= text.size() || text[k] != ' ') break;
    indices.push_back(std::stoi(std::string(text.substr(1, k - 1))));
    text.remove_prefix(k + 1);
  }
  if (text.empty()) throw ParseError("missing generator name in simplex");
  for (std::size_t k = 1; k < indices.size(); ++k)
    if (indices[k] >= indices[k - 1]) throw ParseError("degeneracy prefix is not strictly decreasing");
  return {std::string(text), DegeneracyWord(std::move(indices))};
}

SSet sset_from_json(const ordered_json& doc) {
  try {
    SSetBuilder b;
    std::map<std::string, GeneratorId, std::less<>> ids;
    for (const auto& level : doc.at("dimensions")) {
      const int dim = level.at("dim").get<int>();
      for (const auto& gen : level.at("generators")) {
        std::vector<Simplex> faces;
        for (const auto& f : gen.at("faces")) {
          auto [name, word] = split_simplex_name(f.get<std::string>());
          auto it = ids.find(name);
          if (it == ids.end()) throw ParseError("face refers to unknown generator '" + name + "'");
          faces.push_back({it->second, std::move(word), dim - 1});
        }
        const std::string name = gen.at("name").get<std::string>();
        ids[name] = b.add(name, dim, std::move(faces));
      }
    }
    auto base = ids.find(doc.at("basepoint").get<std::string>());
    if (base == ids.end()) throw ParseError("unknown basepoint");
    b.set_basepoint(base->second);
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed simplicial set document: ") + e.what());
  }
}

std::string print_sset(const SSet& k) { return sset_to_json(k).dump(2); }

SSet parse_sset(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return sset_from_json(doc);
}

}  // namespace ehpcalc
