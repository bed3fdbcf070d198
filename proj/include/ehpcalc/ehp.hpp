#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ehpcalc/forms.hpp"
#include "ehpcalc/sheaf.hpp"

namespace ehpcalc {

// S^{i + j alpha}: i simplicial circles smashed with j copies of G_m.
struct SphereBidegree {
  int simplicial = 0;
  int gm = 0;

  SphereBidegree operator+(const SphereBidegree& o) const { return {simplicial + o.simplicial, gm + o.gm}; }
  bool operator==(const SphereBidegree&) const = default;
  // "S^{3+3α}"
  std::string to_string() const;
};

// "S[3+3a]", "S[2]", "S[1a]", "S^{3+3α}"
SphereBidegree parse_sphere(std::string_view text);

// "3+6α", "5", "α"
std::string bidegree_label(int simplicial, int gm);
// "π_{5+6α}(S^{3+3α})"
std::string homotopy_label(int simplicial, int gm, const SphereBidegree& sphere);

// Degree of the exchange map on S^{p+q alpha} ^ S^{p+q alpha}: (-1)^p eps^q.
GWElement exchange_degree(int p, int q, const Field& f);

struct HPResult {
  GWElement value;
  std::string case_label;  // "0", "2", "h" or "1 + ε"
};

// HP = 1 - (-1)^p eps^q, defined for p > 1 and q >= 1.
HPResult hp_differential(int p, int q, const Field& f);
// <1> + (-1)^(p+1+q) <-1>^q
GWElement hp_published_variant(int p, int q, const Field& f);
// Case label from the parities of p and q.
std::string hp_case_label(int p, int q);
// The element of GW(f) named by a case label.
GWElement hp_case_value(const std::string& label, const Field& f);
// q = 0: the integer 1 - (-1)^p.
long hp_classical(int p);

struct HPInvariantReport {
  long rank = 0;
  long signature = 0;
  bool matches_closed_form = false;  // rank = 1 - (-1)^(p+q), signature = 1 - (-1)^p
};

HPInvariantReport hp_invariant_report(int p, int q);

enum class EHPMode { FullRange, LowDegree };

struct EHPEntry {
  std::string group;
  std::optional<SheafExpr> sheaf;     // resolved name when known
  std::optional<SheafExpr> unevaluated;
  std::string arrow;                  // arrow leaving this entry: "E", "H", "P" or ""
  std::string note;
};

struct EHPReport {
  SphereBidegree sphere;
  EHPMode mode = EHPMode::LowDegree;
  int weight = 0;
  std::vector<EHPEntry> entries;
  std::vector<std::string> annotations;

  // Entries joined by arrows; in low-degree mode only P is labelled.
  std::string display() const;
  nlohmann::ordered_json to_json() const;
};

// X = S^{n + q alpha} with n >= 2. Low-degree mode contracts by weight w (default 2q).
EHPReport ehp_sequence_report(const SphereBidegree& x, EHPMode mode, std::optional<int> weight = std::nullopt);

// E: pi_k(X) -> pi_{k+1}(Sigma X) is an isomorphism for k <= 2n - 2.
int suspension_iso_bound(int n);

enum class PlaneMap { Identity, CoordinateFlip, WhiteheadExchange };

PlaneMap parse_plane_map(std::string_view text);
// Rightmost map applied first: "identity*whitehead".
std::vector<PlaneMap> parse_plane_map_chain(std::string_view text);
std::string plane_map_name(PlaneMap m);

struct Preimage {
  mpq_class u, t;
  mpq_class jacobian;
};

struct DegreeResult {
  int degree = 0;
  std::vector<Preimage> preimages;
};

// Degree of a self-map of S^1 ^ S^1 = [0,1]^2 / boundary, by summing Jacobian signs over the
// exact rational preimages of a regular value in the open square. `chain` lists maps in the
// order they are applied. Throws NotRegular when a preimage lies on a seam between pieces or
// has zero Jacobian, and Unsupported when a preimage is irrational.
DegreeResult degree_by_signed_preimages(const std::vector<PlaneMap>& chain, const mpq_class& x, const mpq_class& y);

struct KnownResult {
  std::string key;
  std::string value;
  std::string statement;
  std::string flag;
};

const std::vector<KnownResult>& known_results_table();
std::optional<KnownResult> lookup_known_result(std::string_view key);

}  // namespace ehpcalc
