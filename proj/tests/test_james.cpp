#include <doctest.h>

#include "ehpcalc/constructions.hpp"
#include "ehpcalc/errors.hpp"
#include "ehpcalc/homology.hpp"
#include "ehpcalc/james.hpp"
#include "oracles.hpp"

using namespace ehpcalc;

namespace {

std::vector<std::size_t> james_counts(int d, int n) {
  std::vector<std::size_t> out;
  for (int m = 0; m <= n * d; ++m) out.push_back(oracle::james_sphere_count(d, n, m));
  return out;
}

}  // namespace

TEST_CASE("James truncations of spheres match the word enumeration") {
  CHECK(james_truncation(build_sphere(1), 2).counts() == std::vector<std::size_t>{1, 2, 2});
  CHECK(james_truncation(build_sphere(1), 3).counts() == std::vector<std::size_t>{1, 3, 8, 6});
  CHECK(james_truncation(build_sphere(2), 2).counts() == std::vector<std::size_t>{1, 0, 2, 6, 6});
  CHECK(james_truncation(build_sphere(2), 3).counts() == std::vector<std::size_t>{1, 0, 3, 30, 120, 180, 90});
  for (int d = 1; d <= 3; ++d)
    for (int n = 1; n <= (d == 3 ? 2 : 3); ++n) CHECK(james_truncation(build_sphere(d), n).counts() == james_counts(d, n));
  CHECK(james_truncation(build_sphere(0), 4).counts() == std::vector<std::size_t>{5});
  CHECK(is_isomorphic(james_truncation(build_sphere(1), 1), build_sphere(1)).isomorphic);
}

TEST_CASE("words reduce and take faces letterwise") {
  const SSet s1 = build_sphere(1);
  const JamesComplex j(s1, 3);
  const Simplex x = s1.simplex(1), base = s1.degenerate_basepoint(1);
  const JamesWord w{1, {x, base, x}};
  const JamesWord reduced = reduce_word(s1, w);
  CHECK(reduced.length() == 2);
  CHECK(word_name(s1, reduced) == "(e1|e1)");
  CHECK(word_face(s1, reduced, 0).length() == 0);
  CHECK(word_name(s1, word_degeneracy(s1, reduced, 0)) == "(s0 e1|s0 e1)");
  CHECK(j.word_of(j.simplex_of(reduced)) == reduced);
  CHECK(j.contains(reduced));
  CHECK_THROWS_AS(JamesComplex(s1, 1).simplex_of(reduced), InvalidComplex);
}

TEST_CASE("James complexes respect the cap") {
  CHECK_THROWS_AS(JamesComplex(build_sphere(2), 6, 100), CapExceeded);
  CHECK_THROWS_AS(JamesComplex(build_sphere(1), 0), IndexOutOfRange);
}

TEST_CASE("symbolic James-Hopf invariant") {
  CHECK(format_symbolic_word(james_hopf_symbolic({"x", "y", "z"}, 2)) == "(x^y)(x^z)(y^z)");
  CHECK(format_symbolic_word(james_hopf_symbolic({"x", "y", "z"}, 3)) == "(x^y^z)");
  CHECK(format_symbolic_word(james_hopf_symbolic({"x", "y"}, 3)) == "()");
  CHECK(james_hopf_symbolic({"x", "*", "y"}, 1) == std::vector<std::string>{"x", "y"});
  CHECK(james_hopf_symbolic({"x", "y", "x"}, 2) == std::vector<std::string>{"x^y", "x^x", "y^x"});
  CHECK_THROWS_AS(increasing_index_tuples(3, 0), IndexOutOfRange);
  CHECK(binomial(6, 3) == 20);
  CHECK(cartan_word_check({"a", "b", "c", "d"}));
}

TEST_CASE("James-Hopf map is simplicial") {
  for (int d = 1; d <= 2; ++d) {
    const JamesHopfMap h(build_sphere(d), 3, 2);
    CHECK(h.target_level() == 3);
    CHECK(h.verify_simplicial());
  }
  const JamesHopfMap h(build_sphere(1), 2, 2);
  CHECK(h.as_simplicial_map().commutes_with_faces());
  CHECK(JamesHopfMap(build_sphere(1), 3, 3).as_simplicial_map().commutes_with_faces());
  const JamesHopfMap w(wedge(build_sphere(1), build_sphere(1)), 2, 2);
  CHECK(w.verify_simplicial());
}

TEST_CASE("suspension unit, naturality and filtration") {
  const JamesComplex j(build_sphere(2), 2);
  CHECK(suspension_unit_E(j).commutes_with_faces());
  auto src = std::make_shared<const SSet>(wedge(build_sphere(1), build_sphere(1)));
  auto tgt = std::make_shared<const SSet>(build_sphere(1));
  const SimplicialMap fold(src, tgt, {tgt->simplex(0), tgt->simplex(1), tgt->simplex(1)});
  CHECK(hopf_naturality_holds(fold, 2, 2));
  CHECK(filtration_inclusion_holds(build_sphere(1), 2));
  CHECK(filtration_inclusion_holds(build_sphere(2), 2));
  const SSet s1 = build_sphere(1);
  CHECK(cartan_word_check(s1, {s1.simplex(1), s1.simplex(1), s1.simplex(1)}));
}

TEST_CASE("filtration quotients") {
  const auto q = james_quotient(build_sphere(1), 2);
  CHECK(q.witness.isomorphic);
  CHECK(q.sset.counts() == std::vector<std::size_t>{1, 1, 2});
  CHECK(reduced_homology(q.sset) == reduced_homology(build_sphere(2)));
  CHECK(james_quotient(build_sphere(2), 1).witness.isomorphic);
}
