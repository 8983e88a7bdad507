#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "flowsg/flowsg.hpp"

using namespace flowsg;

namespace {

Transformation make_t(std::vector<int> img) {
  std::vector<std::uint8_t> b(img.begin(), img.end());
  return Transformation(std::move(b));
}

ConcreteGroup group_on(std::vector<int> points,
                       std::vector<Transformation> gens) {
  ConcreteGroup g;
  g.points = std::move(points);
  g.generators = gens;
  g.elements = close_permutations(static_cast<int>(g.points.size()),
                                  std::move(gens));
  return g;
}

}  // namespace

TEST_CASE("descriptor order", "[group]") {
  REQUIRE(GroupDescriptor{{make_symmetric(3)}}.order() == 6);
  REQUIRE(GroupDescriptor{{make_pgl25()}}.order() == 120);
  REQUIRE(GroupDescriptor{{make_cyclic(3), make_symmetric(2)}}.order() == 6);
  REQUIRE(GroupDescriptor{{make_alternating(4)}}.order() == 12);
  REQUIRE(GroupDescriptor{{}}.order() == 1);
  REQUIRE(descriptor_order(GroupDescriptor{{make_trivial(), make_cyclic(5)}}) ==
          5);

  SECTION("overflow is an explicit failure") {
    GroupDescriptor big;
    for (int i = 0; i < 8; ++i) big.factors.push_back(make_symmetric(20));
    REQUIRE_THROWS_AS(big.order(), std::overflow_error);
  }
  SECTION("degenerate degrees normalize to trivial") {
    REQUIRE(make_cyclic(1).kind == FactorKind::trivial);
    REQUIRE(make_symmetric(1).kind == FactorKind::trivial);
    REQUIRE(make_alternating(2).kind == FactorKind::trivial);
    REQUIRE(make_alternating(3).kind == FactorKind::alternating);
  }
}

TEST_CASE("descriptor rendering", "[group]") {
  GroupDescriptor d{{make_symmetric(3), make_symmetric(3), make_cyclic(4),
                     make_pgl25(), make_trivial()}};
  REQUIRE(d.to_string() == "S3 x S3 x Z4 x PGL2(5)[6pts]");
  REQUIRE(GroupDescriptor{{make_trivial(), make_trivial()}}.to_string() ==
          "1");
}

TEST_CASE("identify_concrete", "[group]") {
  SECTION("C5 defect 2 oracle: one cyclic orbit of order 3") {
    auto a = identify_concrete(defect_group_oracle(fixtures::cycle(5), {0, 1}));
    REQUIRE(a.order == 3);
    REQUIRE(a.orbits.size() == 1);
    REQUIRE(a.orbits[0].points.size() == 3);
    REQUIRE(a.orbits[0].cyclic);
    REQUIRE_FALSE(a.orbits[0].symmetric);
  }
  SECTION("K4 defect 1 oracle: one symmetric orbit of size 3") {
    auto a = identify_concrete(defect_group_oracle(fixtures::complete(4), {0}));
    REQUIRE(a.order == 6);
    REQUIRE(a.orbits.size() == 1);
    REQUIRE(a.orbits[0].symmetric);
    REQUIRE_FALSE(a.orbits[0].alternating);
  }
  SECTION("K23 defect 1 oracle: alternating orbit of size 4") {
    auto a = identify_concrete(
        defect_group_oracle(fixtures::complete_bipartite(2, 3), {0}));
    REQUIRE(a.order == 12);
    REQUIRE(a.orbits.size() == 1);
    REQUIRE(a.orbits[0].alternating);
    REQUIRE_FALSE(a.orbits[0].symmetric);
  }
  SECTION("trivial group on 2 points: singleton orbits") {
    auto g = group_on({5, 9}, {});
    auto a = identify_concrete(g);
    REQUIRE(a.order == 1);
    REQUIRE(a.orbits.size() == 2);
  }
  SECTION("classification is invariant under point relabeling") {
    auto gr = defect_group_oracle(fixtures::bowtie(), {2});
    auto base = orbit_keys(identify_concrete(gr));
    // conjugate all elements by a permutation of positions
    std::mt19937 rng(13);
    std::vector<int> perm(gr.points.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < 10; ++t) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<int> inv(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
      ConcreteGroup conj;
      conj.points = gr.points;
      for (const auto& e : gr.elements) {
        std::vector<std::uint8_t> img(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i)
          img[i] = static_cast<std::uint8_t>(inv[e[perm[i]]]);
        conj.elements.push_back(Transformation(std::move(img)));
      }
      std::sort(conj.elements.begin(), conj.elements.end());
      REQUIRE(orbit_keys(identify_concrete(conj)) == base);
    }
  }
  SECTION("symmetric orbits contain a transposition and a long cycle") {
    auto gr = defect_group_oracle(fixtures::complete(5), {0});
    auto a = identify_concrete(gr);
    REQUIRE(a.orbits.size() == 1);
    REQUIRE(a.orbits[0].symmetric);
    int m = static_cast<int>(a.orbits[0].points.size());
    bool has_transposition = false, has_m_cycle = false;
    for (const auto& e : gr.elements) {
      if (permutation_order(e) == static_cast<std::uint64_t>(m))
        has_m_cycle = true;
      int moved = 0;
      for (int i = 0; i < e.size(); ++i) moved += e[i] != i;
      if (moved == 2) has_transposition = true;
    }
    REQUIRE(has_transposition);
    REQUIRE(has_m_cycle);
  }
}

TEST_CASE("sharply 3-transitive", "[group]") {
  SECTION("S3 on 3 points") {
    auto s3 = group_on({0, 1, 2}, {make_t({1, 0, 2}), make_t({1, 2, 0})});
    REQUIRE(s3.order() == 6);
    REQUIRE(sharply_3_transitive(s3));
  }
  SECTION("Z4 on 4 points is not") {
    auto z4 = group_on({0, 1, 2, 3}, {make_t({1, 2, 3, 0})});
    REQUIRE(z4.order() == 4);
    REQUIRE_FALSE(sharply_3_transitive(z4));
  }
  SECTION("S4 on 4 points is sharply 3-transitive, A4 is not") {
    auto s4 = group_on({0, 1, 2, 3}, {make_t({1, 0, 2, 3}),
                                      make_t({1, 2, 3, 0})});
    REQUIRE(s4.order() == 24);
    REQUIRE(sharply_3_transitive(s4));  // a triple determines the 4th point
    auto a4 = group_on({0, 1, 2, 3}, {make_t({1, 2, 0, 3}),
                                      make_t({0, 2, 3, 1})});
    REQUIRE(a4.order() == 12);
    REQUIRE_FALSE(sharply_3_transitive(a4));
  }
  SECTION("needs at least 3 points") {
    REQUIRE_THROWS_AS(sharply_3_transitive(group_on({0, 1}, {})),
                      std::invalid_argument);
  }
}

TEST_CASE("matches", "[group]") {
  SECTION("cyclic(3) vs the C5 defect 2 oracle") {
    auto gr = defect_group_oracle(fixtures::cycle(5), {0, 1});
    REQUIRE(matches(GroupDescriptor{{make_cyclic(3)}}, gr).ok);
    REQUIRE_FALSE(matches(GroupDescriptor{{make_symmetric(3)}}, gr).ok);
  }
  SECTION("S2 x S2 vs the bowtie defect 1 oracle") {
    auto gr = defect_group_oracle(fixtures::bowtie(), {2});
    auto r = matches(
        GroupDescriptor{{make_symmetric(2), make_symmetric(2)}}, gr);
    REQUIRE(r.ok);
    REQUIRE_FALSE(r.report.empty());
    // an order-4 descriptor with the wrong shape fails
    REQUIRE_FALSE(matches(GroupDescriptor{{make_cyclic(4)}}, gr).ok);
  }
  SECTION("S3 vs an alternating group of order 3: order mismatch") {
    auto a3 = group_on({0, 1, 2}, {make_t({1, 2, 0})});
    REQUIRE(a3.order() == 3);
    REQUIRE_FALSE(matches(GroupDescriptor{{make_symmetric(3)}}, a3).ok);
    REQUIRE(matches(GroupDescriptor{{make_cyclic(3)}}, a3).ok);
    // A3 and Z3 are the same permutation group
    REQUIRE(matches(GroupDescriptor{{make_alternating(3)}}, a3).ok);
  }
  SECTION("S2 and Z2 on a 2-point orbit are declared equal") {
    auto z2 = group_on({0, 1}, {make_t({1, 0})});
    REQUIRE(matches(GroupDescriptor{{make_symmetric(2)}}, z2).ok);
    REQUIRE(matches(GroupDescriptor{{make_cyclic(2)}}, z2).ok);
  }
  SECTION("matches implies equal orders on random small fixtures") {
    std::mt19937 rng(37);
    for (int t = 0; t < 25; ++t) {
      auto g = fixtures::random_connected_graph(rng, 5);
      auto gr = defect_group_oracle(g, {0});
      std::vector<GroupDescriptor> candidates = {
          GroupDescriptor{{make_symmetric(4)}},
          GroupDescriptor{{make_alternating(4)}},
          GroupDescriptor{{make_cyclic(4)}},
          GroupDescriptor{{make_symmetric(2), make_symmetric(2)}},
          GroupDescriptor{{}},
      };
      for (const auto& d : candidates)
        if (matches(d, gr).ok) REQUIRE(d.order() == gr.order());
    }
  }
  SECTION("diagonal subgroup is rejected by the order check") {
    // diagonal Z2 inside Z2 x Z2: both orbits look cyclic but |G| = 2
    auto diag = group_on({0, 1, 2, 3}, {make_t({1, 0, 3, 2})});
    REQUIRE(diag.order() == 2);
    REQUIRE_FALSE(matches(
        GroupDescriptor{{make_cyclic(2), make_cyclic(2)}}, diag).ok);
  }
}
