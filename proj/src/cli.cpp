#include "ehpcalc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/ehp.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/expressions.hpp"
#include "ehpcalc/homology.hpp"
#include "ehpcalc/james.hpp"
#include "ehpcalc/milnor_witt.hpp"
#include "ehpcalc/sheaf.hpp"
#include "ehpcalc/sset_io.hpp"

namespace ehpcalc {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";

  std::string space;
  bool unreduced = false;
  bool show_complex = false;

  int level = 2;
  int r = 2;
  std::string word;

  std::string field = "qc";
  std::string expr;
  std::string other;
  bool witt = false;

  int p = 2;
  int q = 1;
  std::string mode = "low_degree";
  std::optional<int> weight;

  std::string map = "whitehead_exchange_homotopy";
  std::string at = "1/4,3/4";

  std::string key;
};

Json counts_json(const SSet& k) {
  Json arr = Json::array();
  for (auto c : k.counts()) arr.push_back(c);
  return arr;
}

std::string counts_text(const SSet& k) {
  std::string out;
  for (auto c : k.counts()) out += (out.empty() ? "" : " ") + std::to_string(c);
  return out;
}

void emit(std::ostream& out, const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    out << j.dump(2) << '\n';
  else
    out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

void cmd_homology(const Options& o, std::ostream& out) {
  const SSet k = parse_space(o.space);
  const auto h = o.unreduced ? integral_homology(k) : reduced_homology(k);
  Json j;
  j["space"] = o.space;
  j["reduced"] = !o.unreduced;
  j["counts"] = counts_json(k);
  j["homology"] = homology_to_json(h);
  if (o.show_complex) j["complex"] = sset_to_json(k);
  emit(out, o, j, homology_to_text(h));
}

void cmd_james(const Options& o, std::ostream& out) {
  if (o.level < 1) throw IndexOutOfRange("James level must be at least 1");
  const SSet k = parse_space(o.space);
  const JamesComplex jn(k, o.level);
  const auto h = reduced_homology(jn.sset());
  const auto quotient = james_quotient(k, o.level);
  Json j;
  j["space"] = o.space;
  j["level"] = o.level;
  j["counts"] = counts_json(jn.sset());
  j["homology"] = homology_to_json(h);
  j["quotient_counts"] = counts_json(quotient.sset);
  j["quotient_is_smash_power"] = quotient.witness.isomorphic;
  std::string text = "J_" + std::to_string(o.level) + "(" + o.space + ") counts: " + counts_text(jn.sset()) + "\n";
  text += homology_to_text(h);
  if (text.back() != '\n') text += '\n';
  text += "J_n/J_(n-1) isomorphic to the smash power: " + std::string(quotient.witness.isomorphic ? "yes" : "no");
  emit(out, o, j, text);
}

void cmd_hopf(const Options& o, std::ostream& out) {
  const auto letters = parse_word_letters(o.word);
  if (o.r < 1) throw IndexOutOfRange("r must be at least 1");
  Json j;
  j["word"] = o.word;
  j["r"] = o.r;
  std::string result;
  if (o.space.empty()) {
    const auto image = james_hopf_symbolic(letters, o.r);
    result = format_symbolic_word(image);
    j["letters"] = image;
  } else {
    const SSet k = parse_space(o.space);
    JamesWord w;
    for (const auto& name : letters) {
      auto [gen, degen] = split_simplex_name(name);
      auto id = k.find(gen);
      if (!id) throw ParseError("unknown simplex '" + name + "' in " + o.space);
      const Simplex s{*id, degen, k.generator(*id).dim + static_cast<int>(degen.length())};
      if (!w.letters.empty() && s.dim != w.dim) throw DegreeMismatch("letters of a word must share one dimension");
      w.dim = s.dim;
      for (int i : degen.indices())
        if (i >= s.dim) throw IndexOutOfRange("degeneracy s" + std::to_string(i) + " out of range in '" + name + "'");
      w.letters.push_back(s);
    }
    w = reduce_word(k, std::move(w));
    const int n = std::max<int>(1, static_cast<int>(w.length()));
    const JamesHopfMap hopf(k, n, o.r);
    result = word_name(hopf.smash().sset(), hopf.image(w));
    j["space"] = o.space;
  }
  j["image"] = result;
  emit(out, o, j, result);
}

void cmd_gw(const Options& o, std::ostream& out) {
  const Field f = parse_field(o.field);
  const GWElement x = parse_gw(f, o.expr);
  Json j = gw_to_json(x);
  std::string text = x.to_string();
  const auto inv = gw_invariants(x);
  text += " (rank " + std::to_string(inv.rank);
  if (inv.signature) text += ", signature " + std::to_string(*inv.signature);
  text += ")";
  if (o.witt) {
    const WittClass w = witt_class(x);
    j["witt"] = w.to_string();
    text += "\nWitt class: " + w.to_string();
  }
  if (!o.other.empty()) {
    const GWElement y = parse_gw(f, o.other);
    const Verdict v = o.witt ? witt_equal(witt_class(x), witt_class(y)) : gw_equal(x, y);
    j["compare"] = y.to_string();
    j["equal"] = verdict_to_string(v);
    text += "\nequal: " + verdict_to_string(v);
  }
  emit(out, o, j, text);
}

void cmd_kmw(const Options& o, std::ostream& out) {
  const Field f = parse_field(o.field);
  const KMWSymbol x = parse_kmw(f, o.expr);
  Json j;
  j["field"] = f.name();
  j["symbol"] = x.to_string();
  j["degree"] = x.degree();
  std::string text = x.to_string() + " (degree " + std::to_string(x.degree()) + ")";
  try {
    const auto nf = kmw_normal_form(x);
    j["normal_form"] = nf.to_json();
    text += "\nnormal form: " + nf.to_string();
  } catch (const Unsupported& e) {
    j["normal_form"] = nullptr;
    j["normal_form_unavailable"] = e.what();
    text += "\nnormal form: unavailable (" + std::string(e.what()) + ")";
  }
  if (!o.other.empty()) {
    const Verdict v = kmw_equal(x, parse_kmw(f, o.other));
    j["equal"] = verdict_to_string(v);
    text += "\nequal: " + verdict_to_string(v);
  }
  emit(out, o, j, text);
}

void cmd_tensor(const Options& o, std::ostream& out) {
  const SheafExpr e = parse_sheaf(o.expr);
  const SheafExpr v = evaluate(e);
  Json j;
  j["expression"] = e.to_string();
  j["value"] = v.to_string();
  emit(out, o, j, v.to_string());
}

void cmd_ehp_hp(const Options& o, std::ostream& out) {
  const Field f = parse_field(o.field);
  Json j;
  j["p"] = o.p;
  j["q"] = o.q;
  j["field"] = f.name();
  if (o.q == 0) {
    const long v = hp_classical(o.p);
    j["classical"] = v;
    emit(out, o, j, std::to_string(v) + " (classical)");
    return;
  }
  const auto hp = hp_differential(o.p, o.q, f);
  const auto inv = gw_invariants(hp.value);
  j["case"] = hp.case_label;
  j["element"] = hp.value.to_string();
  j["rank"] = inv.rank;
  if (inv.signature) j["signature"] = *inv.signature;
  std::string text = hp.case_label + " (rank " + std::to_string(inv.rank);
  if (inv.signature) text += ", signature " + std::to_string(*inv.signature);
  emit(out, o, j, text + ")");
}

void cmd_ehp_exchange(const Options& o, std::ostream& out) {
  const Field f = parse_field(o.field);
  const GWElement e = exchange_degree(o.p, o.q, f);
  Json j = gw_to_json(e);
  emit(out, o, j, e.to_string());
}

void cmd_ehp_invariants(const Options& o, std::ostream& out) {
  const auto r = hp_invariant_report(o.p, o.q);
  Json j;
  j["p"] = o.p;
  j["q"] = o.q;
  j["rank"] = r.rank;
  j["signature"] = r.signature;
  j["matches_closed_form"] = r.matches_closed_form;
  emit(out, o, j, "rank " + std::to_string(r.rank) + ", signature " + std::to_string(r.signature));
}

void cmd_ehp_sequence(const Options& o, std::ostream& out) {
  EHPMode mode;
  if (o.mode == "low_degree" || o.mode == "low-degree")
    mode = EHPMode::LowDegree;
  else if (o.mode == "full_range" || o.mode == "full-range")
    mode = EHPMode::FullRange;
  else
    throw ParseError("unknown mode '" + o.mode + "' (low_degree, full_range)");
  const auto report = ehp_sequence_report(parse_sphere(o.space), mode, o.weight);
  std::string text = report.display();
  for (const auto& a : report.annotations) text += "\n" + a;
  emit(out, o, report.to_json(), text);
}

void cmd_degree(const Options& o, std::ostream& out) {
  const auto chain = parse_plane_map_chain(o.map);
  const auto comma = o.at.find(',');
  if (comma == std::string::npos) throw ParseError("expected a point 'x,y', got '" + o.at + "'");
  const mpq_class x = parse_unit(Field::rationals(), o.at.substr(0, comma)).value;
  const mpq_class y = parse_unit(Field::rationals(), o.at.substr(comma + 1)).value;
  const auto r = degree_by_signed_preimages(chain, x, y);
  Json j;
  j["map"] = o.map;
  j["value"] = {x.get_str(), y.get_str()};
  j["degree"] = r.degree;
  j["preimages"] = Json::array();
  std::string text = "degree " + std::to_string(r.degree);
  for (const auto& p : r.preimages) {
    j["preimages"].push_back({{"u", p.u.get_str()}, {"t", p.t.get_str()}, {"jacobian", p.jacobian.get_str()}});
    text += "\n(" + p.u.get_str() + ", " + p.t.get_str() + ") jacobian " + p.jacobian.get_str();
  }
  emit(out, o, j, text);
}

void cmd_facts(const Options& o, std::ostream& out) {
  auto to_json = [](const KnownResult& r) {
    return Json{{"key", r.key}, {"value", r.value}, {"statement", r.statement}, {"flag", r.flag}};
  };
  if (!o.key.empty()) {
    const auto r = lookup_known_result(o.key);
    Json j{{"key", o.key}, {"found", r.has_value()}};
    if (r) j["result"] = to_json(*r);
    emit(out, o, j, r ? r->value + "  [" + r->flag + "]" : "absent");
    return;
  }
  Json j = Json::array();
  std::string text;
  for (const auto& r : known_results_table()) {
    j.push_back(to_json(r));
    text += r.key + " = " + r.value + "\n";
  }
  emit(out, o, j, text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Combinatorial and quadratic-form tools for simplicial James constructions and EHP sequences",
               "ehpcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  auto* homology = app.add_subcommand("homology", "Integral homology of a space expression");
  homology->add_option("--space", o.space, "Space, e.g. \"J(S1,2)\" or \"S1^S2\"")->required();
  homology->add_flag("--unreduced", o.unreduced, "Unreduced homology");
  homology->add_flag("--complex", o.show_complex, "Include the simplicial set in JSON output");

  auto* james = app.add_subcommand("james", "James truncation J_n(K) and its filtration quotient");
  james->add_option("--space", o.space, "Base space K")->required();
  james->add_option("-n,--level", o.level, "Truncation level");

  auto* hopf = app.add_subcommand("hopf", "James-Hopf invariant of a word");
  hopf->add_option("--word", o.word, "Word, letters separated by '|'")->required();
  hopf->add_option("-r", o.r, "Smash degree");
  hopf->add_option("--space", o.space, "Read letters as simplices of this space");

  auto* gw = app.add_subcommand("gw", "Grothendieck-Witt ring arithmetic");
  gw->add_option("--field", o.field, "qc, real-closed, rationals or F<q>");
  gw->add_option("--expr", o.expr, "Element, e.g. \"<1> + <-1>\"")->required();
  gw->add_option("--equal", o.other, "Compare with another element");
  gw->add_flag("--witt", o.witt, "Work in the Witt ring");

  auto* kmw = app.add_subcommand("kmw", "Milnor-Witt symbols over a field");
  kmw->add_option("--field", o.field, "qc, real-closed, rationals or F<q>");
  kmw->add_option("--expr", o.expr, "Symbol, e.g. \"eta*[2]*[3]\"")->required();
  kmw->add_option("--equal", o.other, "Compare with another symbol");

  auto* tensor = app.add_subcommand("tensor", "Evaluate contractions and A1-tensor products of sheaves");
  tensor->add_option("--expr", o.expr, "Expression, e.g. \"KMW(2) (x) KMW(3)\"")->required();

  auto* ehp = app.add_subcommand("ehp", "EHP bookkeeping");
  ehp->require_subcommand(1);
  auto* hp = ehp->add_subcommand("hp", "The differential HP on pi_{2p+1+2q alpha}");
  auto* exchange = ehp->add_subcommand("exchange", "Degree of the exchange map");
  auto* invariants = ehp->add_subcommand("invariants", "Rank and real signature of HP");
  invariants->alias("report");
  for (auto* sub : {hp, exchange, invariants}) {
    sub->add_option("-p", o.p, "Simplicial degree")->required();
    sub->add_option("-q", o.q, "G_m weight")->required();
  }
  for (auto* sub : {hp, exchange}) sub->add_option("--field", o.field, "qc, real-closed, rationals or F<q>");
  auto* sequence = ehp->add_subcommand("sequence", "Exact sequence report for X = S^{n+q alpha}");
  sequence->add_option("--space", o.space, "Sphere, e.g. \"S[2+3a]\"")->required();
  sequence->add_option("--mode", o.mode, "low_degree or full_range");
  sequence->add_option("--weight", o.weight, "G_m weight of the low-degree groups");

  auto* degree = app.add_subcommand("degree", "Degree of a self-map of the square by signed preimages");
  degree->add_option("--map", o.map, "identity, coordinate_flip or whitehead_exchange_homotopy; compose with '*'");
  degree->add_option("--at", o.at, "Regular value 'x,y' with rational coordinates");

  auto* facts = app.add_subcommand("facts", "Recorded homotopy sheaf computations");
  facts->add_option("--key", o.key, "Look up one entry, e.g. \"pi_{4+5a}(S^{3+3a})\"");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error [usage]: " << e.what() << '\n';
    return 2;
  }

  auto fail = [&](const std::string& kind, const std::string& what, int code) {
    if (o.format == "json")
      err << Json{{"error", kind}, {"message", what}}.dump() << '\n';
    else
      err << "error [" << kind << "]: " << what << '\n';
    return code;
  };

  try {
    if (homology->parsed()) cmd_homology(o, out);
    else if (james->parsed()) cmd_james(o, out);
    else if (hopf->parsed()) cmd_hopf(o, out);
    else if (gw->parsed()) cmd_gw(o, out);
    else if (kmw->parsed()) cmd_kmw(o, out);
    else if (tensor->parsed()) cmd_tensor(o, out);
    else if (hp->parsed()) cmd_ehp_hp(o, out);
    else if (exchange->parsed()) cmd_ehp_exchange(o, out);
    else if (invariants->parsed()) cmd_ehp_invariants(o, out);
    else if (sequence->parsed()) cmd_ehp_sequence(o, out);
    else if (degree->parsed()) cmd_degree(o, out);
    else if (facts->parsed()) cmd_facts(o, out);
  } catch (const DomainError& e) {
    return fail(e.kind(), e.what(), 1);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  }
  return 0;
}

}  // namespace ehpcalc
