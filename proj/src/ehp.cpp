#include "ehpcalc/ehp.hpp"

#include <algorithm>
#include <cctype>

#include "ehpcalc/errors.hpp"

namespace ehpcalc {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_nonnegative(const std::string& digits, std::string_view whole) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("malformed sphere '" + std::string(whole) + "'");
  return std::stoi(digits);
}

}  // namespace

std::string bidegree_label(int simplicial, int gm) {
  if (gm == 0) return std::to_string(simplicial);
  const std::string g = gm == 1 ? "α" : std::to_string(gm) + "α";
  if (simplicial == 0) return g;
  return std::to_string(simplicial) + "+" + g;
}

std::string SphereBidegree::to_string() const { return "S^{" + bidegree_label(simplicial, gm) + "}"; }

std::string homotopy_label(int simplicial, int gm, const SphereBidegree& sphere) {
  return "π_{" + bidegree_label(simplicial, gm) + "}(" + sphere.to_string() + ")";
}

SphereBidegree parse_sphere(std::string_view text) {
  std::string s = strip(text);
  std::string body;
  if (s.size() >= 3 && s[0] == 'S' && s[1] == '[' && s.back() == ']')
    body = s.substr(2, s.size() - 3);
  else if (s.size() >= 4 && s.rfind("S^{", 0) == 0 && s.back() == '}')
    body = s.substr(3, s.size() - 4);
  else if (s.size() >= 2 && s.rfind("S^", 0) == 0)
    body = s.substr(2);
  else
    throw ParseError("expected a sphere like S[3+3a], got '" + std::string(text) + "'");

  // Normalize the alpha marker to a single 'a'.
  for (std::string marker : {"α", "\\alpha"}) {
    for (auto pos = body.find(marker); pos != std::string::npos; pos = body.find(marker))
      body.replace(pos, marker.size(), "a");
  }
  SphereBidegree out;
  bool seen_simplicial = false, seen_gm = false;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto plus = body.find('+', start);
    std::string term = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (term.empty()) throw ParseError("malformed sphere '" + std::string(text) + "'");
    if (term.back() == 'a') {
      if (seen_gm) throw ParseError("repeated alpha term in '" + std::string(text) + "'");
      std::string coeff = term.substr(0, term.size() - 1);
      out.gm = coeff.empty() ? 1 : parse_nonnegative(coeff, text);
      seen_gm = true;
    } else {
      if (seen_simplicial) throw ParseError("repeated simplicial term in '" + std::string(text) + "'");
      out.simplicial = parse_nonnegative(term, text);
      seen_simplicial = true;
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return out;
}

GWElement exchange_degree(int p, int q, const Field& f) {
  if (p < 0 || q < 0) throw IndexOutOfRange("exchange degree needs p, q >= 0");
  GWElement out = gw_integer(f, p % 2 == 0 ? 1 : -1);
  const GWElement eps = gw_epsilon(f);
  for (int k = 0; k < q % 2; ++k) out = out * eps;  // eps^2 = 1
  return out;
}

std::string hp_case_label(int p, int q) {
  const bool p_even = p % 2 == 0, q_even = q % 2 == 0;
  if (p_even && q_even) return "0";
  if (!p_even && q_even) return "2";
  if (p_even) return "h";
  return "1 + ε";
}

GWElement hp_case_value(const std::string& label, const Field& f) {
  if (label == "0") return gw_integer(f, 0);
  if (label == "2") return gw_integer(f, 2);
  if (label == "h") return gw_hyperbolic(f);
  if (label == "1 + ε") return gw_integer(f, 1) + gw_epsilon(f);
  throw ParseError("unknown case label '" + label + "'");
}

HPResult hp_differential(int p, int q, const Field& f) {
  if (p <= 1 || q < 1)
    throw HypothesisViolation("HP is defined for p > 1 and q >= 1 (got p = " + std::to_string(p) +
                              ", q = " + std::to_string(q) + "); use the classical variant for q = 0");
  return {gw_integer(f, 1) - exchange_degree(p, q, f), hp_case_label(p, q)};
}

GWElement hp_published_variant(int p, int q, const Field& f) {
  const Unit minus_one = make_unit(f, -1);
  GWElement power = gw_integer(f, 1);
  for (int k = 0; k < q; ++k) power = power * gw_angle(f, minus_one);
  const long sign = (p + 1 + q) % 2 == 0 ? 1 : -1;
  return gw_integer(f, 1) + power * sign;
}

long hp_classical(int p) {
  if (p < 0) throw IndexOutOfRange("p must be nonnegative");
  return p % 2 == 0 ? 0 : 2;
}

HPInvariantReport hp_invariant_report(int p, int q) {
  const auto inv = gw_invariants(hp_differential(p, q, Field::real_closed()).value);
  HPInvariantReport out;
  out.rank = inv.rank;
  out.signature = inv.signature.value_or(0);
  const long rank_closed = (p + q) % 2 == 0 ? 0 : 2;
  const long sig_closed = p % 2 == 0 ? 0 : 2;
  out.matches_closed_form = inv.signature.has_value() && out.rank == rank_closed && out.signature == sig_closed;
  return out;
}

int suspension_iso_bound(int n) { return 2 * n - 2; }

std::string EHPReport::display() const {
  std::string out;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    out += entries[k].group;
    if (k + 1 == entries.size()) break;
    const auto& arrow = entries[k].arrow;
    const bool label = mode == EHPMode::FullRange ? !arrow.empty() : arrow == "P";
    out += label ? " →" + arrow + " " : " → ";
  }
  return out;
}

nlohmann::ordered_json EHPReport::to_json() const {
  nlohmann::ordered_json j;
  j["space"] = sphere.to_string();
  j["mode"] = mode == EHPMode::LowDegree ? "low_degree" : "full_range";
  if (mode == EHPMode::LowDegree) j["weight"] = weight;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json row;
    row["group"] = e.group;
    row["sheaf"] = e.sheaf ? nlohmann::ordered_json(e.sheaf->to_string()) : nlohmann::ordered_json(nullptr);
    if (e.unevaluated) row["expression"] = e.unevaluated->to_string();
    row["arrow"] = e.arrow;
    row["citation"] = e.note;
    j["entries"].push_back(std::move(row));
  }
  j["annotations"] = annotations;
  j["display"] = display();
  return j;
}

EHPReport ehp_sequence_report(const SphereBidegree& x, EHPMode mode, std::optional<int> weight) {
  const int n = x.simplicial, q = x.gm;
  if (n < 2)
    throw HypothesisViolation("the EHP sequence needs X = S^{n+qα} with n >= 2 (got n = " + std::to_string(n) + ")");
  const SphereBidegree sx{n + 1, q};
  const SphereBidegree smash_term{2 * n + 1, 2 * q};
  const SheafExpr square = SheafExpr::tensor(SheafExpr::kmw(q), SheafExpr::kmw(q));

  EHPReport r;
  r.sphere = x;
  r.mode = mode;

  if (mode == EHPMode::LowDegree) {
    const int w = weight.value_or(2 * q);
    if (w < 0) throw IndexOutOfRange("weight must be nonnegative");
    r.weight = w;
    EHPEntry middle{homotopy_label(2 * n + 1, w, smash_term), std::nullopt, square, "P",
                    "A1-tensor square of the bottom homotopy sheaf"};
    try {
      middle.sheaf = evaluate(square);
    } catch (const NoRule&) {
    }
    r.entries.push_back({homotopy_label(2 * n + 1, w, sx), std::nullopt, std::nullopt, "H", "unknown sheaf"});
    r.entries.push_back(std::move(middle));
    r.entries.push_back({homotopy_label(2 * n - 1, w, x), std::nullopt, std::nullopt, "E", "unknown sheaf"});
    r.entries.push_back({homotopy_label(2 * n, w, sx), std::nullopt, std::nullopt, "", "cokernel of P"});
    r.entries.push_back({"0", SheafExpr::zero(), std::nullopt, "", "connectivity of the smash square"});
    if (r.entries[1].sheaf) {
      const SheafExpr contracted = contraction(*r.entries[1].sheaf, w);
      r.annotations.push_back("middle term after " + std::to_string(w) + "-fold contraction: " + contracted.to_string());
    }
    return r;
  }

  for (int k = 3 * n - 2; k >= n; --k) {
    EHPEntry ex{homotopy_label(k, 0, x), std::nullopt, std::nullopt, "E", "unknown sheaf"};
    if (k == n) {
      ex.sheaf = SheafExpr::kmw(q);
      ex.note = "bottom homotopy sheaf of a sphere";
    }
    EHPEntry esx{homotopy_label(k + 1, 0, sx), std::nullopt, std::nullopt, "H", "unknown sheaf"};
    if (k == n) {
      esx.sheaf = SheafExpr::kmw(q);
      esx.note = "bottom homotopy sheaf of a sphere";
    } else if (k <= suspension_iso_bound(n)) {
      esx.note = "isomorphic to the previous term via E";
    }
    EHPEntry eh{homotopy_label(k + 1, 0, smash_term), std::nullopt, std::nullopt, "P", "unknown sheaf"};
    if (k + 1 < 2 * n + 1) {
      eh.sheaf = SheafExpr::zero();
      eh.note = "below the connectivity of the smash square";
    } else if (k + 1 == 2 * n + 1) {
      eh.sheaf = SheafExpr::kmw(2 * q);
      eh.note = "bottom homotopy sheaf of a sphere";
    }
    if (k == n) eh.arrow = "";
    r.entries.push_back(std::move(ex));
    r.entries.push_back(std::move(esx));
    r.entries.push_back(std::move(eh));
  }
  r.annotations.push_back("E is an isomorphism on π_k for k <= " + std::to_string(suspension_iso_bound(n)));
  r.annotations.push_back("E is surjective on π_" + std::to_string(2 * n - 1));
  return r;
}

// Plane maps -------------------------------------------------------------------------------

namespace {

// a0 + a1 u + a2 t + a3 u t
struct Bilinear {
  mpq_class c0, cu, ct, cut;

  mpq_class operator()(const mpq_class& u, const mpq_class& t) const { return c0 + cu * u + ct * t + cut * u * t; }
  mpq_class du(const mpq_class& t) const { return cu + cut * t; }
  mpq_class dt(const mpq_class& u) const { return ct + cut * u; }
};

struct Piece {
  Bilinear a, b;
  mpq_class t_lo, t_hi;
};

const mpq_class kZero(0), kHalf(1, 2), kOne(1);

std::vector<Piece> pieces_of(PlaneMap m) {
  switch (m) {
    case PlaneMap::Identity:
      return {{{0, 1, 0, 0}, {0, 0, 1, 0}, kZero, kOne}};
    case PlaneMap::CoordinateFlip:
      return {{{0, 1, 0, 0}, {1, 0, -1, 0}, kZero, kOne}};
    case PlaneMap::WhiteheadExchange:
      // t <= 1/2: (u, 1 - 2t(1-u));  t >= 1/2: (1 - 2(1-t)(1-u), u)
      return {{{0, 1, 0, 0}, {1, 0, -2, 2}, kZero, kHalf}, {{-1, 2, 2, -2}, {0, 1, 0, 0}, kHalf, kOne}};
  }
  throw ParseError("unknown plane map");
}

bool rational_sqrt(const mpq_class& x, mpq_class& root) {
  if (x < 0) return false;
  mpz_class num = x.get_num(), den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

bool interior(const mpq_class& v) { return v > 0 && v < 1; }

std::string point_string(const mpq_class& u, const mpq_class& t) {
  return "(" + u.get_str() + ", " + t.get_str() + ")";
}

// Solutions (u, t) of A = x, B = y for one piece, unrestricted.
std::vector<std::pair<mpq_class, mpq_class>> solve_bilinear(const Bilinear& a, const Bilinear& b, const mpq_class& x,
                                                            const mpq_class& y) {
  // P(u) + t Q(u) = 0 and R(u) + t S(u) = 0 with P, Q, R, S linear in u.
  const mpq_class p0 = a.c0 - x, p1 = a.cu, q0 = a.ct, q1 = a.cut;
  const mpq_class r0 = b.c0 - y, r1 = b.cu, s0 = b.ct, s1 = b.cut;
  // P S - R Q = k0 + k1 u + k2 u^2
  const mpq_class k0 = p0 * s0 - r0 * q0;
  const mpq_class k1 = p0 * s1 + p1 * s0 - r0 * q1 - r1 * q0;
  const mpq_class k2 = p1 * s1 - r1 * q1;

  std::vector<mpq_class> us;
  if (k2 != 0) {
    const mpq_class disc = k1 * k1 - 4 * k2 * k0;
    if (disc >= 0) {
      mpq_class root;
      if (!rational_sqrt(disc, root))
        throw Unsupported("preimage has irrational coordinates (discriminant " + disc.get_str() + ")");
      us.push_back((-k1 - root) / (2 * k2));
      if (root != 0) us.push_back((-k1 + root) / (2 * k2));
    }
  } else if (k1 != 0) {
    us.push_back(-k0 / k1);
  } else if (k0 == 0) {
    throw NotRegular("the fiber contains a curve of solutions");
  }

  std::vector<std::pair<mpq_class, mpq_class>> out;
  for (auto& u : us) {
    u.canonicalize();
    const mpq_class qv = q0 + q1 * u, sv = s0 + s1 * u;
    mpq_class t;
    if (qv != 0)
      t = -(p0 + p1 * u) / qv;
    else if (sv != 0)
      t = -(r0 + r1 * u) / sv;
    else if (p0 + p1 * u == 0 && r0 + r1 * u == 0)
      throw NotRegular("the fiber contains a segment at u = " + u.get_str());
    else
      continue;
    t.canonicalize();
    if (a(u, t) == x && b(u, t) == y) out.emplace_back(u, t);
  }
  return out;
}

// Preimages of (x, y) under one map, with their Jacobians.
std::vector<Preimage> preimages_of(PlaneMap m, const mpq_class& x, const mpq_class& y) {
  std::vector<Preimage> out;
  const auto pieces = pieces_of(m);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& pc = pieces[k];
    for (const auto& [u, t] : solve_bilinear(pc.a, pc.b, x, y)) {
      if (t < pc.t_lo || t > pc.t_hi) continue;
      if (!interior(u) || !interior(t)) continue;  // boundary collapses to the basepoint
      const bool on_seam = (t == pc.t_lo && pc.t_lo != 0) || (t == pc.t_hi && pc.t_hi != 1);
      if (on_seam)
        throw NotRegular("preimage " + point_string(u, t) + " lies on a seam between pieces of " + plane_map_name(m));
      mpq_class jac = pc.a.du(t) * pc.b.dt(u) - pc.a.dt(u) * pc.b.du(t);
      jac.canonicalize();
      if (jac == 0) throw NotRegular("zero Jacobian at preimage " + point_string(u, t) + " of " + plane_map_name(m));
      out.push_back({u, t, jac});
    }
  }
  return out;
}

}  // namespace

std::string plane_map_name(PlaneMap m) {
  switch (m) {
    case PlaneMap::Identity:
      return "identity";
    case PlaneMap::CoordinateFlip:
      return "coordinate_flip";
    case PlaneMap::WhiteheadExchange:
      return "whitehead_exchange_homotopy";
  }
  return "?";
}

PlaneMap parse_plane_map(std::string_view text) {
  const std::string s = strip(text);
  if (s == "identity" || s == "id") return PlaneMap::Identity;
  if (s == "coordinate_flip" || s == "flip") return PlaneMap::CoordinateFlip;
  if (s == "whitehead_exchange_homotopy" || s == "whitehead_exchange" || s == "whitehead")
    return PlaneMap::WhiteheadExchange;
  throw ParseError("unknown map '" + std::string(text) + "' (identity, coordinate_flip, whitehead_exchange_homotopy)");
}

std::vector<PlaneMap> parse_plane_map_chain(std::string_view text) {
  std::vector<PlaneMap> reversed;
  std::size_t start = 0;
  while (true) {
    auto star = text.find('*', start);
    reversed.push_back(parse_plane_map(text.substr(start, star == std::string_view::npos ? std::string_view::npos
                                                                                          : star - start)));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return {reversed.rbegin(), reversed.rend()};
}

DegreeResult degree_by_signed_preimages(const std::vector<PlaneMap>& chain, const mpq_class& x, const mpq_class& y) {
  if (chain.empty()) throw IndexOutOfRange("empty map chain");
  if (!interior(x) || !interior(y))
    throw NotRegular("value " + point_string(x, y) + " is not in the open square");
  // Pull back through the last map first.
  std::vector<Preimage> current{{x, y, 1}};
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    std::vector<Preimage> next;
    for (const auto& p : current)
      for (auto pre : preimages_of(*it, p.u, p.t)) {
        pre.jacobian *= p.jacobian;
        next.push_back(std::move(pre));
      }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(),
            [](const Preimage& a, const Preimage& b) { return a.u != b.u ? a.u < b.u : a.t < b.t; });
  DegreeResult out;
  for (const auto& p : current) out.degree += p.jacobian > 0 ? 1 : -1;
  out.preimages = std::move(current);
  return out;
}

// Recorded facts ---------------------------------------------------------------------------

const std::vector<KnownResult>& known_results_table() {
  static const std::vector<KnownResult> table = [] {
    const std::string flag = "recorded fact, hypotheses: char 0, quadratically closed subfield";
    std::vector<KnownResult> t;
    t.push_back({"pi_{4+5a}(S^{3+3a})", "Z/24", "Z/24 ≅ π_{4+5α}(S^{3+3α}), detected by K^M_5/24 after contraction",
                 flag});
    t.push_back({"pi_{4+6a}(S^{3+3a})", "0", "π_{4+6α}(S^{3+3α}) vanishes, from the low-degree EHP sequence for S^{2+3α}",
                 flag});
    for (int j = 4; j <= 8; ++j) {
      const std::string key = "pi_{" + std::to_string(j + 1) + "+5a}(S^{" + std::to_string(j) + "+3a})";
      const std::string label = homotopy_label(j + 1, 5, {j, 3});
      t.push_back({key, "Z/24", label + " ≅ Z/24, generated by a suspension of the quaternionic Hopf map", flag});
    }
    return t;
  }();
  return table;
}

std::optional<KnownResult> lookup_known_result(std::string_view key) {
  const std::string k = strip(key);
  for (const auto& r : known_results_table())
    if (r.key == k) return r;
  return std::nullopt;
}

}  // namespace ehpcalc
