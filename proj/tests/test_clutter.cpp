#include "oracles.hpp"
#include "test_support.hpp"

#include <chordlab/canonical.hpp>
#include <chordlab/clutter.hpp>
#include <chordlab/clutter_file.hpp>
#include <chordlab/errors.hpp>
#include <chordlab/harness.hpp>

#include <doctest.h>

using namespace chordlab;
using namespace testing;

TEST_CASE("construction validates circuits") {
  CHECK_THROWS_AS(Clutter(5, 2, {s1("12")}), InputError);
  CHECK_THROWS_AS(Clutter(3, 1, {s1("14")}), InputError);
  CHECK(Clutter(5, 2, {s1("145"), s1("145")}).size() == 1);
  CHECK(Clutter::complete(5, 2).size() == 10);
}

TEST_CASE("maximal subcircuits") {
  CHECK(maximal_subcircuits(pm()) == sets1({"14", "15", "45", "24", "25", "34", "35"}));
  CHECK(maximal_subcircuits(Clutter::empty(5, 2)).empty());
  CHECK(maximal_subcircuits(c1(3, 2, {"123"})) == sets1({"12", "13", "23"}));
}

TEST_CASE("ms degree and closed neighborhood") {
  CHECK(ms_degree(pm(), s1("45")) == 3);
  CHECK(ms_degree(pm(), s1("14")) == 1);
  CHECK(ms_degree(pm(), s1("12")) == 0);
  CHECK(closed_neighborhood(pm(), s1("45")) == s1("12345"));
  CHECK(closed_neighborhood(pm(), s1("14")) == s1("145"));
  CHECK(closed_neighborhood(pm(), s1("12")) == s1("12"));
}

TEST_CASE("cliques") {
  CHECK(is_clique(c1(4, 2, {"123", "124", "134", "234"}), s1("1234")));
  CHECK_FALSE(is_clique(pm(), s1("12345")));
  CHECK(is_clique(pm(), s1("12")));
  CHECK(is_clique(Clutter::empty(5, 2), s1("23")));
}

TEST_CASE("remove and induced subclutters") {
  CHECK(remove(pm(), s1("14")) == c1(5, 2, {"245", "345"}));
  CHECK(remove(c1(4, 1, {"12", "34"}), s1("1")) == c1(4, 1, {"34"}));
  CHECK(remove(pm(), FaceSet{}).empty());
  CHECK(induced_by_vertices(pm(), FaceSet::range(5)) == pm());
  CHECK(induced_by_vertices(pm(), s1("145")) == c1(5, 2, {"145"}));
  CHECK(induced_by_ms(pm(), maximal_subcircuits(pm())) == pm());
  auto ms = maximal_subcircuits(pm());
  std::erase(ms, s1("45"));
  CHECK(induced_by_ms(pm(), ms).empty());

  Clutter c = ex16();
  auto ms16 = maximal_subcircuits(c);
  std::erase(ms16, s0("12"));
  CHECK(induced_by_ms(c, ms16) == remove(c, s0("12")));
}

TEST_CASE("complement and Alexander dual clutter") {
  CHECK(complement(Clutter::complete(5, 2)).empty());
  CHECK(complement(pm()) == c1(5, 2, {"123", "124", "125", "134", "135", "234", "235"}));
  CHECK(complement(Clutter::empty(4, 2)) == Clutter::complete(4, 2));
  CHECK(alexander_dual_clutter(Clutter::complete(5, 2)).empty());
  CHECK(alexander_dual_clutter(pm()) == c1(5, 1, {"45", "35", "34", "25", "24", "15", "14"}));
  CHECK(alexander_dual_clutter(Clutter::empty(4, 2)) == c1(4, 0, {"1", "2", "3", "4"}));
}

TEST_CASE("clique complex") {
  CHECK(clique_complex(Clutter::complete(5, 2)) == SimplicialComplex::simplex(5, FaceSet::range(5)));
  auto k = clique_complex(c1(5, 2, {"123", "124", "134", "234"}));
  CHECK(k.facets() == sets1({"1234", "15", "25", "35", "45"}));
  CHECK(clique_complex(Clutter::empty(4, 2)).facets() == subsets_of_size(FaceSet::range(4), 2));
}

TEST_CASE("strong components") {
  CHECK(strong_components(pm()).size() == 1);
  CHECK(strong_components(c1(6, 2, {"123", "456"})).size() == 2);
  CHECK(strong_components(octahedron()).size() == 1);
  CHECK(is_strongly_connected(octahedron()));
  // Vacuous for the empty clutter; CF-cycles separately require nonemptiness.
  CHECK(is_strongly_connected(Clutter::empty(4, 2)));
}

TEST_CASE("strong connectivity agrees with a BFS oracle on (5,2)") {
  for (const auto& c : collect_clutters({.n = 5, .d = 2})) {
    if (c.empty()) continue;
    std::vector<oracle::Set> cs;
    for (auto f : c.circuits()) cs.push_back(oracle::to_set(f));
    CHECK(is_strongly_connected(c) == oracle::strongly_connected(cs, 2));
  }
}

TEST_CASE("clutter file grammar") {
  auto f = parse_clutter("# comment\nn=5 d=2\n145\n2 4 5  # trailing\n\n3 4 5\n");
  CHECK(f.clutter == pm());
  CHECK(f.labels == LabelMap::one_based(5));

  auto zero = parse_clutter("n=3 d=1\n0 1\n1 2\n");
  CHECK(zero.labels == LabelMap::zero_based(3));
  CHECK(zero.clutter.circuits() == std::vector<FaceSet>{s0("01"), s0("12")});

  auto wide = parse_clutter("n=3 d=1\n10 11\n11 12\n");
  CHECK(wide.labels.labels() == std::vector<std::int64_t>{10, 11, 12});
  CHECK(format_clutter(wide.clutter, wide.labels) == "n=3 d=1\n10 11\n11 12\n");
  CHECK(wide.labels.format(wide.clutter.circuits()) == "{10,11} {11,12}");

  auto round = parse_clutter(format_clutter(pm(), LabelMap::one_based(5)));
  CHECK(round.clutter == pm());

  CHECK_THROWS_WITH_AS(parse_clutter("n=5 d=2\n14\n", "f.clutter"), doctest::Contains("f.clutter:2"), InputError);
  CHECK_THROWS_AS(parse_clutter("n=5\n145\n"), InputError);
  CHECK_THROWS_AS(parse_clutter("n=5 d=2\n145\n145\n"), InputError);
  CHECK_THROWS_AS(parse_clutter("n=2 d=1\n1 2\n3 4\n"), InputError);
  CHECK_THROWS_AS(parse_clutter("n=5 d=2\n1 1 5\n"), InputError);
  CHECK_THROWS_AS(read_clutter_file("/nonexistent/path.clutter"), InputError);
}

TEST_CASE("set lists") {
  auto labels = LabelMap::one_based(5);
  CHECK(parse_set_list("14 34 24", 2, labels) == std::vector<FaceSet>{s1("14"), s1("34"), s1("24")});
  CHECK(parse_set_list("1,4", 2, labels) == std::vector<FaceSet>{s1("14")});
  CHECK_THROWS_AS(parse_set_list("145", 2, labels), InputError);
}

TEST_CASE("canonical form") {
  int swap45[] = {0, 1, 2, 4, 3};
  CHECK(canonical_form(pm()) == canonical_form(relabel(pm(), swap45)));
  CHECK(canonical_form(Clutter::empty(5, 2)).empty());
  CHECK(canonical_form(c1(4, 2, {"123"})) == canonical_form(c1(4, 2, {"234"})));
  CHECK(isomorphic(c1(4, 2, {"123"}), c1(4, 2, {"234"})));
  CHECK_FALSE(isomorphic(c1(6, 2, {"123", "456"}), c1(6, 2, {"123", "345"})));
  CHECK_THROWS_AS(canonical_form(Clutter::empty(9, 2)), CapacityError);
}
