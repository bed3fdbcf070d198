#include <doctest.h>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/sset_io.hpp"
#include "oracles.hpp"

using namespace ehpcalc;

namespace {

std::vector<std::size_t> counts_of(const std::vector<int>& dims, int top, bool smashed) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= top; ++m)
    out.push_back(smashed ? oracle::sphere_smash_count(dims, m) : oracle::sphere_product_count(dims, m));
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// d_i d_j = d_{j-1} d_i, d_i s_j, s_i s_j on every simplex up to the given dimension.
bool identities_hold(const SSet& k, int top) {
  for (int m = 0; m <= top; ++m)
    for (const auto& x : k.simplices_of_dim(m)) {
      for (int j = 0; j <= m; ++j) {
        const auto sj = k.degeneracy(x, j);
        for (int i = 0; i <= m + 1; ++i) {
          const auto lhs = k.face(sj, i);
          Simplex rhs;
          if (i < j)
            rhs = m == 0 ? x : k.degeneracy(k.face(x, i), j - 1);
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = k.degeneracy(k.face(x, i - 1), j);
          if (lhs != rhs) return false;
        }
        for (int i = 0; i <= j; ++i)
          if (k.degeneracy(sj, i) != k.degeneracy(k.degeneracy(x, i), j + 1)) return false;
      }
      if (m >= 2)
        for (int j = 1; j <= m; ++j)
          for (int i = 0; i < j; ++i)
            if (k.face(k.face(x, j), i) != k.face(k.face(x, i), j - 1)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("degeneracy words are strictly decreasing") {
  CHECK_THROWS_AS(DegeneracyWord({0, 1}), InvalidComplex);
  CHECK_THROWS_AS(DegeneracyWord({1, 1}), InvalidComplex);
  CHECK(DegeneracyWord::from_positions({0, 2}).to_string() == "s2 s0");
  const DegeneracyWord w({2, 0});
  const auto sigma = surjection_of(w, 4);
  CHECK(sigma == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(degeneracies_of_surjection(sigma) == w);
}

TEST_CASE("spheres") {
  CHECK(build_sphere(0).counts() == std::vector<std::size_t>{2});
  CHECK(build_sphere(3).counts() == std::vector<std::size_t>{1, 0, 0, 1});
  const SSet s2 = build_sphere(2);
  const auto top = s2.simplex(1);
  for (int i = 0; i <= 2; ++i) CHECK(s2.face(top, i) == s2.degenerate_basepoint(1));
  CHECK_THROWS_AS(s2.face(top, 3), IndexOutOfRange);
  CHECK_THROWS_AS(s2.face(s2.simplex(0), 0), IndexOutOfRange);
  CHECK(identities_hold(s2, 4));
}

TEST_CASE("products match the shuffle count") {
  CHECK(product(build_sphere(1), build_sphere(1)).counts() == std::vector<std::size_t>{1, 3, 2});
  CHECK(product(build_sphere(1), build_sphere(1)).counts() == counts_of({1, 1}, 4, false));
  CHECK(product(build_sphere(2), build_sphere(1)).counts() == counts_of({2, 1}, 5, false));
  CHECK(ProductComplex({build_sphere(1), build_sphere(1), build_sphere(1)}).sset().counts() ==
        counts_of({1, 1, 1}, 5, false));
  CHECK(identities_hold(product(build_sphere(1), build_sphere(2)), 4));
}

TEST_CASE("smash products") {
  CHECK(smash(build_sphere(1), build_sphere(1)).counts() == std::vector<std::size_t>{1, 1, 2});
  CHECK(smash(build_sphere(2), build_sphere(1)).counts() == counts_of({2, 1}, 5, true));
  const SSet cube = smash_power(build_sphere(2), 3);
  CHECK(cube.counts() == std::vector<std::size_t>{1, 0, 1, 24, 114, 180, 90});
  CHECK(cube.counts() == counts_of({2, 2, 2}, 7, true));
  CHECK(smash_power(build_sphere(0), 3).counts() == std::vector<std::size_t>{2});
  CHECK(identities_hold(smash(build_sphere(1), build_sphere(1)), 4));

  const SmashComplex sm({build_sphere(1), build_sphere(1)});
  const SSet& s1 = sm.factors()[0];
  const std::vector<Simplex> parts{s1.simplex(1), s1.degenerate_basepoint(1)};
  CHECK(sm.sset().is_basepoint(sm.combine(parts)));
}

TEST_CASE("wedge and quotient") {
  const SSet w = wedge(build_sphere(1), build_sphere(1));
  CHECK(w.counts() == std::vector<std::size_t>{1, 2});
  CHECK(w.find("e1'").has_value());
  const SSet t = product(build_sphere(1), build_sphere(1));
  std::vector<bool> collapse(t.size(), false);
  for (auto id : t.generators_of_dim(0)) collapse[id] = true;
  for (auto id : t.generators_of_dim(1)) collapse[id] = true;
  const auto q = quotient(t, collapse);
  CHECK(q.sset.counts() == std::vector<std::size_t>{1, 0, 2});
  std::vector<bool> missing_base(t.size(), false);
  CHECK_THROWS_AS(quotient(t, missing_base), InvalidComplex);
}

TEST_CASE("isomorphism search") {
  const SSet a = product(build_sphere(1), build_sphere(2));
  const SSet b = product(build_sphere(2), build_sphere(1));
  const auto iso = is_isomorphic(a, b);
  CHECK(iso.isomorphic);
  CHECK(iso.mapping.size() == a.size());
  CHECK_FALSE(is_isomorphic(smash(build_sphere(1), build_sphere(1)), build_sphere(2)).isomorphic);
  CHECK_FALSE(is_isomorphic(wedge(build_sphere(1), build_sphere(2)), wedge(build_sphere(1), build_sphere(1))).isomorphic);
  CHECK_THROWS_AS(is_isomorphic(a, b, 3), CapExceeded);
}

TEST_CASE("builder validation") {
  SSetBuilder b;
  const auto v = b.add("v", 0);
  const auto w = b.add("w", 0);
  b.add("e", 1, {{v, {}, 0}, {w, {}, 0}});
  CHECK_THROWS_AS(b.add("e", 1, {{v, {}, 0}, {v, {}, 0}}), InvalidComplex);
  CHECK_THROWS_AS(b.add("f", 1, {{v, {}, 0}}), InvalidComplex);
  CHECK_THROWS_AS(b.add("s0 x", 1, {{v, {}, 0}, {v, {}, 0}}), InvalidComplex);
  b.set_basepoint(v);
  CHECK(std::move(b).build().counts() == std::vector<std::size_t>{2, 1});

  CHECK_THROWS_AS(SSetBuilder().add("neg", -1), InvalidComplex);

  SSetBuilder broken;
  const auto b0 = broken.add("b0", 0);
  const auto b1 = broken.add("b1", 0);
  const auto ex = broken.add("ex", 1, {{b1, {}, 0}, {b0, {}, 0}});
  broken.add("t", 2, {{ex, {}, 1}, {ex, {}, 1}, {ex, {}, 1}});
  broken.set_basepoint(b0);
  CHECK_THROWS_AS(std::move(broken).build(), InvalidComplex);
}

TEST_CASE("simplicial maps") {
  auto src = std::make_shared<const SSet>(wedge(build_sphere(1), build_sphere(1)));
  auto tgt = std::make_shared<const SSet>(build_sphere(1));
  const SimplicialMap fold(src, tgt, {tgt->simplex(0), tgt->simplex(1), tgt->simplex(1)});
  CHECK(fold.commutes_with_faces());
  CHECK(fold(src->degeneracy(src->simplex(2), 0)) == tgt->degeneracy(tgt->simplex(1), 0));
  CHECK_THROWS_AS(SimplicialMap(src, tgt, {tgt->simplex(0)}), InvalidComplex);
}

TEST_CASE("JSON round trip") {
  for (const SSet& k : {build_sphere(2), product(build_sphere(1), build_sphere(1)),
                        smash(build_sphere(1), build_sphere(2)), wedge(build_sphere(1), build_sphere(0))}) {
    const auto text = print_sset(k);
    CHECK(parse_sset(text) == k);
    CHECK(sset_from_json(sset_to_json(k)) == k);
  }
  CHECK_THROWS_AS(parse_sset("{"), ParseError);
  CHECK_THROWS_AS(parse_sset(R"({"basepoint": "z", "dimensions": [{"dim": 0, "generators": [{"name": "a", "faces": []}]}]})"),
                  ParseError);
  const auto [name, word] = split_simplex_name("s2 s0 x");
  CHECK(name == "x");
  CHECK(word == DegeneracyWord({2, 0}));
  CHECK_THROWS_AS(split_simplex_name("s0 s2 x"), ParseError);
}
