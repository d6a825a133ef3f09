#include "oracles.hpp"
#include "test_support.hpp"

#include <chordlab/cycles.hpp>
#include <chordlab/errors.hpp>
#include <chordlab/harness.hpp>
#include <chordlab/ideal.hpp>

#include <doctest.h>

#include <numeric>

using namespace chordlab;
using namespace testing;

namespace {

SquarefreeIdeal ideal1(int n, std::initializer_list<std::string_view> gens) { return SquarefreeIdeal(n, sets1(gens)); }

QuotientOrder identity(std::size_t k) {
  QuotientOrder o;
  o.indices.resize(k);
  std::iota(o.indices.begin(), o.indices.end(), 0);
  return o;
}

std::vector<oracle::Set> plain(const std::vector<FaceSet>& sets) {
  std::vector<oracle::Set> out;
  for (auto s : sets) out.push_back(oracle::to_set(s));
  return out;
}

}  // namespace

TEST_CASE("ideal construction keeps minimal generators") {
  auto i = SquarefreeIdeal(4, {s1("12"), s1("123"), s1("34")});
  CHECK(i.generators() == sets1({"12", "34"}));
  CHECK(i.contains(s1("124")));
  CHECK_FALSE(i.contains(s1("13")));
  CHECK(i.is_generator(s1("12")));
  CHECK_FALSE(i.is_generator(s1("123")));
  CHECK(SquarefreeIdeal::complement_ideal(pm()).generators() == complement(pm()).circuits());
  CHECK(SquarefreeIdeal::circuit_ideal(pm()).generators() == pm().circuits());
}

TEST_CASE("linear quotient orders") {
  auto i = ideal1(4, {"12", "13", "14"});
  CHECK(is_linear_quotient_order(i, identity(3)));
  auto j = ideal1(4, {"12", "34"});
  CHECK_FALSE(is_linear_quotient_order(j, QuotientOrder{{0, 1}}));
  CHECK_FALSE(is_linear_quotient_order(j, QuotientOrder{{1, 0}}));
  CHECK(is_linear_quotient_order(ideal1(3, {"123"}), identity(1)));
  CHECK_THROWS_AS(is_linear_quotient_order(i, QuotientOrder{{0, 0, 1}}), InputError);

  auto pmi = SquarefreeIdeal::complement_ideal(pm());
  auto found = find_linear_quotients(pmi);
  REQUIRE(found.has_value());
  CHECK(is_linear_quotient_order(pmi, *found));
  CHECK_FALSE(find_linear_quotients(j).has_value());
  auto single = find_linear_quotients(ideal1(3, {"123"}));
  REQUIRE(single.has_value());
  CHECK(single->indices == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(find_linear_quotients(SquarefreeIdeal(4, {s1("1"), s1("23")})), InputError);
  CHECK_THROWS_AS(find_linear_quotients(SquarefreeIdeal::circuit_ideal(Clutter::complete(6, 2))), CapacityError);
}

TEST_CASE("linear quotient search agrees with the permutation oracle") {
  for (const auto& c : collect_clutters({.n = 4, .d = 1})) {
    auto i = SquarefreeIdeal::circuit_ideal(c);
    if (i.is_zero()) continue;
    auto found = find_linear_quotients(i);
    CHECK(found.has_value() == oracle::has_linear_quotients(plain(i.generators())));
    if (found) CHECK(oracle::linear_quotients(plain(apply_order(i, *found))));
  }
  for (const auto& c : collect_clutters({.n = 5, .d = 2})) {
    if (c.size() > 7) continue;
    auto i = SquarefreeIdeal::circuit_ideal(c);
    if (i.is_zero()) continue;
    CHECK(find_linear_quotients(i).has_value() == oracle::has_linear_quotients(plain(i.generators())));
  }
}

TEST_CASE("extending an order to the complete ideal") {
  auto small = ideal1(3, {"12"});
  auto ext = extend_order_to_complete(small, identity(1));
  CHECK(ext.size() == 3);
  CHECK(ext.front() == s1("12"));
  CHECK(is_linear_quotient_sequence(ext));

  auto full = SquarefreeIdeal::circuit_ideal(Clutter::complete(4, 1));
  auto order = *find_linear_quotients(full);
  CHECK(extend_order_to_complete(full, order) == apply_order(full, order));

  auto pmi = SquarefreeIdeal::complement_ideal(pm());
  auto all = extend_order_to_complete(pmi, *find_linear_quotients(pmi));
  CHECK(all.size() == 10);
  CHECK(is_linear_quotient_sequence(all));
  CHECK_THROWS_AS(extend_order_to_complete(ideal1(4, {"12", "34"}), QuotientOrder{{0, 1}}), InputError);
}

TEST_CASE("squarefree stability") {
  auto pmi = SquarefreeIdeal::complement_ideal(pm());
  CHECK(is_squarefree_stable(pmi));
  CHECK_FALSE(is_squarefree_stable(ideal1(3, {"13"})));
  CHECK(is_squarefree_stable(ideal1(3, {"12"})));
  CHECK(is_squarefree_strongly_stable(pmi));
  CHECK_FALSE(is_squarefree_strongly_stable(ideal1(3, {"23"})));
  CHECK(is_squarefree_strongly_stable(ideal1(3, {"12"})));
  CHECK(is_squarefree_strongly_stable(ideal1(3, {"23"}), VertexOrder::reversed));
}

TEST_CASE("strongly stable implies stable on (5,2)") {
  for (const auto& c : collect_clutters({.n = 5, .d = 2})) {
    auto i = SquarefreeIdeal::circuit_ideal(c);
    if (is_squarefree_strongly_stable(i)) CHECK(is_squarefree_stable(i));
  }
}

TEST_CASE("polymatroidal exchange") {
  auto pmi = SquarefreeIdeal::complement_ideal(pm());
  CHECK(is_polymatroidal(pmi));
  auto minus = SquarefreeIdeal::complement_ideal(remove(pm(), s1("14")));
  auto r = polymatroidal_exchange(minus);
  CHECK_FALSE(r.holds);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->u == s1("145"));
  CHECK(r.failure->v == s1("234"));
  CHECK(r.failure->i == s1("1").min());
  CHECK(is_polymatroidal(ideal1(3, {"12"})));
  CHECK_THROWS_AS(polymatroidal_exchange(SquarefreeIdeal(4, {s1("1"), s1("23")})), InputError);
}

TEST_CASE("linear quotients survive SMS deletion") {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{4, 1}, std::pair{5, 1}})
    for (const auto& c : collect_clutters({.n = n, .d = d})) {
      auto i = SquarefreeIdeal::complement_ideal(c);
      if (i.is_zero() || !find_linear_quotients(i)) continue;
      for (auto e : simplicial_ms_set(c)) {
        auto after = SquarefreeIdeal::complement_ideal(remove(c, e));
        CHECK(find_linear_quotients(after).has_value());
      }
    }
}

TEST_CASE("vertex cover ideals") {
  auto square = c1(4, 1, {"12", "23", "34", "14"});
  CHECK(maximal_independent_sets(square) == sets1({"13", "24"}));
  auto vc = vertex_cover_ideal(square);
  CHECK(vc.ideal.generators() == sets1({"13", "24"}));
  CHECK(vc.unmixed);

  auto path = c1(3, 1, {"12", "23"});
  auto pc = vertex_cover_ideal(path);
  CHECK(pc.ideal.generators() == sets1({"2", "13"}));
  CHECK_FALSE(pc.unmixed);

  auto none = vertex_cover_ideal(Clutter::empty(3, 1));
  CHECK(none.ideal.generators() == std::vector<FaceSet>{FaceSet{}});

  auto g = graph_with_cover_ideal(vc.ideal);
  REQUIRE(g.has_value());
  CHECK(*g == square);
  // Minimal covers {12},{34} come from the 4-cycle 1-3-2-4.
  auto bip = graph_with_cover_ideal(ideal1(4, {"12", "34"}));
  REQUIRE(bip.has_value());
  CHECK(*bip == c1(4, 1, {"13", "14", "23", "24"}));
  CHECK_FALSE(graph_with_cover_ideal(ideal1(2, {"1"})).has_value());
}

TEST_CASE("SMS from strong connectivity of independent sets") {
  // The 4-cycle: I(C-bar) is the cover ideal of the 4-cycle, whose independent
  // sets {13},{24} are not strongly connected, and C has no SMS.
  auto square = c1(4, 1, {"12", "14", "23", "34"});
  CHECK(sms_from_strong_connectivity(square).status == ConnectivitySms::Status::not_strongly_connected);
  CHECK(simplicial_ms_set(square).empty());

  // Path 2-1-4-3: cover ideal of the path 1-2-3-4, independent sets 13,14,24.
  auto path = c1(4, 1, {"12", "14", "34"});
  auto r = sms_from_strong_connectivity(path);
  REQUIRE(r.status == ConnectivitySms::Status::found);
  REQUIRE(r.sms.has_value());
  CHECK(is_simplicial(path, *r.sms));
  REQUIRE(r.graph.has_value());
  CHECK(*r.graph == c1(4, 1, {"12", "23", "34"}));

  auto complete = sms_from_strong_connectivity(Clutter::complete(4, 1));
  CHECK(complete.status != ConnectivitySms::Status::not_vertex_cover_ideal);
  CHECK_FALSE(simplicial_ms_set(Clutter::complete(4, 1)).empty());
  CHECK(sms_from_strong_connectivity(Clutter::empty(4, 1)).status == ConnectivitySms::Status::empty_clutter);
}

TEST_CASE("Woodroofe chordality") {
  NonUniformClutter tri(3, sets1({"12", "13", "23"}));
  auto con = contraction(tri, s1("3").min());
  CHECK(con.edges() == sets1({"1", "2"}));
  CHECK(con.vertices() == s1("12"));
  CHECK(deletion(tri, s1("3").min()).edges() == sets1({"12"}));
  CHECK(simplicial_vertex_set(tri).contains(s1("3").min()));
  CHECK(is_w_chordal(tri));

  NonUniformClutter edge(3, sets1({"12"}));
  CHECK(simplicial_vertex_set(edge) == FaceSet::range(3));
  CHECK(is_w_chordal(edge));

  NonUniformClutter square(4, sets1({"12", "23", "34", "14"}));
  CHECK_FALSE(is_w_chordal(square));
  CHECK_THROWS_AS(NonUniformClutter(3, {s1("1"), s1("12")}), InputError);
  CHECK_THROWS_AS(is_w_chordal(NonUniformClutter(9, {FaceSet{0, 8}})), CapacityError);
}

TEST_CASE("W-chordality matches classical chordality on graphs") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : collect_clutters({.n = n, .d = 1}))
      CHECK(is_w_chordal(NonUniformClutter::from_clutter(g)) == oracle::graph_chordal(n, oracle::edges_of(g)));
}
