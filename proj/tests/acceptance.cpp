// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/ehp.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/forms.hpp"
#include "ehpcalc/homology.hpp"
#include "ehpcalc/james.hpp"
#include "ehpcalc/milnor_witt.hpp"
#include "ehpcalc/sheaf.hpp"
#include "oracles.hpp"

using namespace ehpcalc;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// 1. H_r on words of distinct letters against the brute-force tuple enumeration.
Check hopf_formula() {
  Check c;
  for (int q = 0; q <= 6; ++q) {
    std::vector<std::string> letters;
    for (int i = 0; i < q; ++i) letters.push_back("x" + std::to_string(i));
    for (int r = 1; r <= 3; ++r) {
      c.expect(james_hopf_symbolic(letters, r) == oracle::hopf_word(letters, r),
               "symbolic word q=" + std::to_string(q) + " r=" + std::to_string(r));
      c.expect(increasing_index_tuples(q, r) == oracle::increasing_tuples(q, r), "index tuples");
    }
  }
  // The same formula on simplices of S^1 v S^1, compared letter by letter.
  const SSet k = wedge(build_sphere(1), build_sphere(1));
  const JamesHopfMap h(k, 3, 2);
  const auto a = k.simplex(*k.find("e1")), b = k.simplex(*k.find("e1'"));
  JamesWord w{1, {a, b, a}};
  const auto img = h.image(w);
  c.expect(img.letters.size() == 3 && img.letters[0] == h.smash().combine(std::vector<Simplex>{a, b}) &&
               img.letters[1] == h.smash().combine(std::vector<Simplex>{a, a}) &&
               img.letters[2] == h.smash().combine(std::vector<Simplex>{b, a}),
           "simplicial word (e1|e1'|e1)");
  return c;
}

// 2. H_r(E(x)) is the empty word.
Check hopf_kills_suspension() {
  Check c;
  const std::vector<SSet> spaces{build_sphere(0), build_sphere(1), build_sphere(2),
                                 wedge(build_sphere(1), build_sphere(1)), product(build_sphere(1), build_sphere(1))};
  for (const auto& k : spaces)
    for (int r = 2; r <= 3; ++r) {
      const JamesHopfMap h(k, 2, r);
      const auto e = suspension_unit_E(h.source());
      for (int m = 0; m <= k.max_dim() + 2; ++m)
        for (const auto& x : k.simplices_of_dim(m)) c.expect(h.image(e(x)).letters.empty(), "H(E(x)) nonempty");
    }
  return c;
}

// 3. J_n/J_{n-1} against the smash power.
Check filtration_quotients() {
  Check c;
  const std::vector<std::pair<std::string, SSet>> spaces{{"S0", build_sphere(0)},
                                                          {"S1", build_sphere(1)},
                                                          {"S2", build_sphere(2)},
                                                          {"S1vS1", wedge(build_sphere(1), build_sphere(1))}};
  for (const auto& [name, k] : spaces)
    for (int n = 1; n <= 2; ++n) {
      const auto q = james_quotient(k, n);
      c.expect(is_isomorphic(q.sset, smash_power(k, n)).isomorphic, name + " n=" + std::to_string(n));
    }
  c.expect(is_isomorphic(james_quotient(build_sphere(1), 3).sset, smash_power(build_sphere(1), 3)).isomorphic,
           "S1 n=3");
  return c;
}

// 4. Reduced homology of J_n(K) splits as the sum over smash powers.
Check hilton_milnor() {
  Check c;
  for (int d = 1; d <= 2; ++d) {
    const SSet k = build_sphere(d);
    for (int n = 1; n <= 3; ++n) {
      HomologyMap expected;
      for (int i = 1; i <= n; ++i) expected = direct_sum(expected, reduced_homology(smash_power(k, i)));
      const auto actual = reduced_homology(james_truncation(k, n));
      c.expect(actual == expected, "S" + std::to_string(d) + " n=" + std::to_string(n));
      // Z in degrees d, 2d, ..., nd.
      HomologyMap frozen;
      for (int i = 1; i <= n; ++i) frozen[i * d] = HomologyGroup{1, {}};
      c.expect(actual == frozen, "closed form S" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  return c;
}

IntegerMatrix to_matrix(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntegerMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> mult(-3, 3);
  for (int step = 0; step < 12 && n > 1; ++step) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const long k = mult(rng);
    for (std::size_t col = 0; col < n; ++col) u.at(i, col) += k * u.at(j, col);
  }
  return u;
}

// 5. Smith normal form on random matrices.
Check smith_forms() {
  Check c;
  std::mt19937 rng(20240517);
  std::uniform_int_distribution<int> size(1, 8);
  std::uniform_int_distribution<long> entry(-9, 9);
  std::uniform_int_distribution<int> sparsity(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    const bool sparse = sparsity(rng) == 0;
    std::vector<std::vector<long>> raw(rows, std::vector<long>(cols));
    for (auto& row : raw)
      for (auto& v : row) v = sparse && entry(rng) > -5 ? 0 : entry(rng);
    const IntegerMatrix m = to_matrix(raw);
    const auto snf = smith_normal_form(m);
    const IntegerMatrix d = snf.u * m * snf.v;
    const std::string tag = "trial " + std::to_string(trial);
    c.expect(d.is_diagonal(), tag + ": U M V not diagonal");
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
      const mpz_class expected = k < snf.factors.size() ? snf.factors[k] : mpz_class(0);
      c.expect(d.at(k, k) == expected, tag + ": diagonal differs from factors");
    }
    for (std::size_t k = 0; k < snf.factors.size(); ++k) {
      c.expect(snf.factors[k] > 0, tag + ": nonpositive factor");
      if (k + 1 < snf.factors.size()) c.expect(snf.factors[k + 1] % snf.factors[k] == 0, tag + ": divisibility");
    }
    c.expect(abs(determinant(snf.u)) == 1 && abs(determinant(snf.v)) == 1, tag + ": transforms not unimodular");
    c.expect(snf.factors == oracle::invariant_factors(raw), tag + ": determinantal divisors");
    const IntegerMatrix perturbed = random_unimodular(rows, rng) * m * random_unimodular(cols, rng);
    c.expect(invariant_factors(perturbed) == snf.factors, tag + ": perturbation changed the factors");
  }
  return c;
}

// 6. GW equality over F_3, F_5, F_7 against representation numbers; Witt ring orders.
Check gw_decision() {
  Check c;
  for (long p : {3L, 5L, 7L}) {
    const Field f = Field::finite(p);
    std::vector<std::vector<long>> forms;
    for (int rank = 0; rank <= 3; ++rank) {
      std::vector<long> cur(static_cast<std::size_t>(rank), 1);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == cur.size()) {
          forms.push_back(cur);
          return;
        }
        for (long a = 1; a < p; ++a) {
          cur[i] = a;
          rec(i + 1);
        }
      };
      rec(0);
    }
    auto element = [&](const std::vector<long>& diag) {
      GWElement x(f);
      for (long a : diag) x = x + gw_angle(f, make_unit(f, a));
      return x;
    };
    for (const auto& a : forms)
      for (const auto& b : forms) {
        const Verdict v = gw_equal(element(a), element(b));
        const bool expected = oracle::isometric_mod_p(a, b, p);
        c.expect(v == (expected ? Verdict::True : Verdict::False), "F" + std::to_string(p) + " isometry mismatch");
      }
  }
  for (long q : {3L, 5L, 7L, 9L, 11L, 13L}) {
    const auto table = witt_ring_table(Field::finite(q));
    c.expect(table.elements.size() == 4, "|W(F" + std::to_string(q) + ")| != 4");
    c.expect(table.cyclic == (q % 4 == 3), "cyclicity of W(F" + std::to_string(q) + ")");
  }
  return c;
}

// 7. Milnor-Witt relations, the GW dictionary, compatibility and the kernels of the two
// projections, over F_5.
Check milnor_witt_relations() {
  Check c;
  const Field f = Field::finite(5);
  std::vector<Unit> units;
  for (long a = 1; a < 5; ++a) units.push_back(make_unit(f, a));
  const KMWSymbol eta = kmw_eta(f), one = kmw_integer(f, 1);

  std::vector<KMWSymbol> multipliers{one, eta, eta * eta};
  for (const auto& a : units) {
    multipliers.push_back(kmw_bracket(f, a));
    multipliers.push_back(eta * kmw_bracket(f, a));
    for (const auto& b : units) multipliers.push_back(kmw_bracket(f, a) * kmw_bracket(f, b));
  }
  std::vector<KMWSymbol> relations;
  for (const auto& a : units) {
    const auto ba = kmw_bracket(f, a);
    relations.push_back(eta * ba - ba * eta);
    if (a.value != 1) relations.push_back(ba * kmw_bracket(f, make_unit(f, 1 - a.value)));
    for (const auto& b : units)
      relations.push_back(kmw_bracket(f, make_unit(f, a.value * b.value)) -
                          (ba + kmw_bracket(f, b) + eta * ba * kmw_bracket(f, b)));
  }
  relations.push_back(eta * (eta * kmw_bracket(f, make_unit(f, -1)) + kmw_integer(f, 2)));
  std::vector<KMWNormalForm> normal_forms;
  for (const auto& rel : relations)
    for (const auto& m : multipliers) {
      const KMWSymbol x = rel * m;
      if (x.degree() > 3) continue;
      c.expect(kmw_equal(x, KMWSymbol(f, x.degree())) == Verdict::True, "relation " + x.to_string());
    }

  for (const auto& a : units) {
    const GWElement g = gw_angle(f, a);
    c.expect(kmw_equal(kmw_angle(f, a), gw_to_kmw(g)) == Verdict::True, "dictionary <a> = 1 + eta[a]");
    c.expect(kmw_normal_form(gw_to_kmw(g)).gw == g, "dictionary round trip");
    for (const auto& b : units) {
      const GWElement x = gw_angle(f, a) * 3 - gw_angle(f, b);
      c.expect(kmw_normal_form(gw_to_kmw(x)).gw == x, "dictionary round trip on sums");
    }
  }

  // Exhaustive degree-1 sample: [a] + s[b] + t eta[c][d].
  std::vector<KMWSymbol> degree_one;
  for (const auto& a : units)
    for (const auto& b : units)
      for (long s : {-1L, 0L, 1L})
        for (const auto& cc : units)
          for (const auto& d : units)
            for (long t : {0L, 1L})
              degree_one.push_back(kmw_bracket(f, a) + kmw_bracket(f, b) * s +
                                   eta * kmw_bracket(f, cc) * kmw_bracket(f, d) * t);
  // eta K^MW_2 and h K^MW_1, enumerated from generators.
  std::vector<KMWNormalForm> eta_image, h_image;
  const KMWSymbol h = kmw_hyperbolic(f);
  for (const auto& a : units)
    for (const auto& b : units) {
      eta_image.push_back(kmw_normal_form(eta * kmw_bracket(f, a) * kmw_bracket(f, b)));
      for (long k = 0; k < 4; ++k) h_image.push_back(kmw_normal_form(h * kmw_bracket(f, a) * k + h * kmw_bracket(f, b)));
    }
  auto member = [](const std::vector<KMWNormalForm>& set, const KMWNormalForm& x) {
    return std::find(set.begin(), set.end(), x) != set.end();
  };
  int milnor_zero = 0, witt_zero = 0;
  for (const auto& x : degree_one) {
    const auto nf = kmw_normal_form(x);
    milnor_zero += nf.milnor->is_zero();
    witt_zero += nf.witt->is_zero();
    c.expect(compatible(nf), "compatibility of " + x.to_string());
    c.expect(nf.milnor->is_zero() == member(eta_image, nf), "kernel of K^MW_1 -> K^M_1 at " + x.to_string());
    c.expect(nf.witt->is_zero() == member(h_image, nf), "kernel of K^MW_1 -> I at " + x.to_string());
  }
  const int total = static_cast<int>(degree_one.size());
  c.expect(milnor_zero > 0 && milnor_zero < total && witt_zero > 0 && witt_zero < total, "degenerate kernel sample");
  return c;
}

// 8. HP case table, the two formula variants, rank and signature.
Check hp_table() {
  Check c;
  const std::vector<Field> fields{Field::quadratically_closed(), Field::real_closed(), Field::finite(3),
                                  Field::finite(5), Field::finite(7)};
  for (int p = 2; p <= 6; ++p)
    for (int q = 1; q <= 5; ++q) {
      const std::string expected = p % 2 == 0 ? (q % 2 == 0 ? "0" : "h") : (q % 2 == 0 ? "2" : "1 + ε");
      for (const auto& f : fields) {
        const auto hp = hp_differential(p, q, f);
        const std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) + " over " + f.name();
        c.expect(hp.case_label == expected, tag + ": case label");
        c.expect(gw_equal(hp.value, hp_case_value(expected, f)) == Verdict::True, tag + ": case value");
        c.expect(gw_equal(hp.value, hp_published_variant(p, q, f)) == Verdict::True, tag + ": variants differ");
        c.expect(gw_equal(hp.value, gw_integer(f, 1) - exchange_degree(p, 0, f) * exchange_degree(0, q, f)) ==
                     Verdict::True,
                 tag + ": composition with the exchange degree");
        const auto inv = gw_invariants(hp.value);
        c.expect(inv.rank == 1 - ((p + q) % 2 == 0 ? 1 : -1), tag + ": rank");
        if (f.kind() == Field::Kind::RealClosed)
          c.expect(inv.signature && *inv.signature == 1 - (p % 2 == 0 ? 1 : -1), tag + ": signature");
        if (f.kind() == Field::Kind::QuadraticallyClosed)
          c.expect(hp.value == gw_integer(f, inv.rank), tag + ": classical value");
      }
      const auto report = hp_invariant_report(p, q);
      c.expect(report.matches_closed_form, "invariant report p=" + std::to_string(p) + " q=" + std::to_string(q));
    }
  return c;
}

// 9. Degree of the piecewise exchange homotopy at (1/4, 3/4).
Check whitehead_degree() {
  Check c;
  const auto r = degree_by_signed_preimages({PlaneMap::WhiteheadExchange}, mpq_class(1, 4), mpq_class(3, 4));
  c.expect(r.preimages.size() == 1, "expected exactly one preimage");
  if (r.preimages.size() == 1) {
    c.expect(r.preimages[0].u == mpq_class(1, 4) && r.preimages[0].t == mpq_class(1, 6), "preimage is not (1/4, 1/6)");
    c.expect(r.preimages[0].jacobian < 0, "Jacobian is not negative");
  }
  c.expect(r.degree == -1, "degree is not -1");
  return c;
}

// 10. Contraction and tensor tables; the displayed low-degree sequence for S^{2+3a}.
Check bookkeeping() {
  Check c;
  c.expect(evaluate(parse_sheaf("KMW(5)_{-6}")) == SheafExpr::witt(), "(KMW5)_{-6} = W");
  c.expect(evaluate(parse_sheaf("KM(5)_{-5}")) == SheafExpr::integers(), "(KM5)_{-5} = Z");
  c.expect(aone_tensor(SheafExpr::kmw(2), SheafExpr::kmw(3)) == SheafExpr::kmw(5), "KMW2 (x) KMW3 = KMW5");
  for (int n = 4; n <= 8; ++n)
    c.expect(aone_tensor(SheafExpr::kmw(n - 3), SheafExpr::km_mod(5, 24)) == SheafExpr::km_mod(n + 2, 24),
             "KMW_{n-3} (x) KM5/24 at n=" + std::to_string(n));
  const auto report = ehp_sequence_report({2, 3}, EHPMode::LowDegree);
  c.expect(report.display() ==
               "π_{5+6α}(S^{3+3α}) → π_{5+6α}(S^{5+6α}) →P π_{3+6α}(S^{2+3α}) → π_{4+6α}(S^{3+3α}) → 0",
           "displayed sequence: " + report.display());
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    std::function<Check()> run;
    double seconds;  // time limit
  };
  const std::vector<Criterion> criteria{
      {"James-Hopf word formula vs tuple enumeration", hopf_formula, 1},
      {"H o E is trivial", hopf_kills_suspension, 1},
      {"J_n/J_(n-1) isomorphic to smash powers", filtration_quotients, 30},
      {"homology of J_n splits over smash powers", hilton_milnor, 60},
      {"Smith normal form on 200 random matrices", smith_forms, 10},
      {"GW equality vs representation numbers; Witt ring orders", gw_decision, 10},
      {"Milnor-Witt relations, dictionary, compatibility, kernels", milnor_witt_relations, 10},
      {"HP case table, variants, rank and signature", hp_table, 1},
      {"signed preimage degree of the exchange homotopy", whitehead_degree, 1},
      {"contraction/tensor tables and the low-degree sequence", bookkeeping, 1},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.ok && secs > criteria[i].seconds) {
      result.ok = false;
      result.detail = "exceeded the time limit";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (result.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].name << " ("
              << timing << ", limit " << criteria[i].seconds << "s)";
    if (!result.ok) std::cout << " -- " << result.detail;
    std::cout << '\n';
    if (!result.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
