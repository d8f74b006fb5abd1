#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/measures.hpp"
#include "rootcast/potentials.hpp"
#include "rootcast/prufer.hpp"
#include "rootcast/tree.hpp"

#include <string>
#include <vector>

using namespace rootcast;

namespace {

// Runs pred over every labeled tree with 2..n_max vertices; returns how many
// trees fail.
template <typename Pred>
int count_failures(int n_max, Pred pred) {
  int failures = 0;
  for (int n = 2; n <= n_max; ++n) {
    TreeEnumerator en(n);
    Tree t = Tree::single();
    while (en.next(t))
      if (!pred(t)) ++failures;
  }
  return failures;
}

}  // namespace

TEST_CASE("potential closed forms on known shapes") {
  const Tree line3 = Tree::line(3);
  CHECK(eval_potential(Potential::make(Potential::Family::f_degree), line3, 1) ==
        ScoreKey::exact(2));
  CHECK(eval_potential(Potential::make(Potential::Family::f_closeness), line3, 0) ==
        ScoreKey::exact(3));
  CHECK(eval_potential(Potential::make(Potential::Family::f_eccentricity), line3, 1) ==
        ScoreKey::exact(1));
  CHECK(eval_potential(Potential::make(Potential::Family::f_eccentricity), Tree::single(), 0) ==
        ScoreKey::exact(0));
  CHECK(eval_potential(Potential::make(Potential::Family::f_allsubgraphs), Tree::star(3), 0) ==
        ScoreKey::big(BigInt(8)));
  // betweenness potential adds 2|T| to the pair count.
  CHECK(eval_potential(Potential::make(Potential::Family::f_betweenness), line3, 1) ==
        ScoreKey::exact(2 + 6));
  CHECK(eval_potential(Potential::make(Potential::Family::f_betweenness), line3, 0) ==
        ScoreKey::exact(0 + 6));
  // decay potential scales the decay sum by (1 - alpha).
  const Potential fdecay = Potential::make(Potential::Family::f_decay, 0.5);
  CHECK(eval_potential(fdecay, line3, 0).as_double() == doctest::Approx(0.5 * 0.75));
  // height-plus-reciprocal potential: exact rationals.
  const Potential fhm = Potential::make(Potential::Family::f_heightminus);
  CHECK(eval_potential(fhm, line3, 1) == ScoreKey::rational(Rat(1) + Rat(1, 3)));
  CHECK(eval_potential(fhm, line3, 0) == ScoreKey::rational(Rat(2) + Rat(1, 3)));
  CHECK(eval_potential(fhm, Tree::single(), 0) == ScoreKey::rational(Rat(1)));
}

TEST_CASE("hanging_value evaluates the edge side as its own tree") {
  const Tree line4 = Tree::line(4);
  const Potential fc = Potential::make(Potential::Family::f_closeness);
  CHECK(hanging_value(fc, line4, 1, 2) == ScoreKey::exact(2));
  CHECK(hanging_value(fc, line4, 2, 1) == ScoreKey::exact(2));
  CHECK(hanging_value(fc, line4, 0, 1) == ScoreKey::exact(1));
  const Potential fe = Potential::make(Potential::Family::f_eccentricity);
  CHECK(hanging_value(fe, line4, 2, 3) == ScoreKey::exact(2));
}

TEST_CASE("potential names parse and round trip") {
  for (const auto& pair : registered_pairs(0.25)) {
    CHECK(Potential::parse(pair.potential.name()) == pair.potential);
  }
  CHECK(Potential::parse("f_decay:alpha=0.25").alpha == doctest::Approx(0.25));
  const Potential abc = Potential::parse("abc:a=2,b=1,c=1/2");
  CHECK(abc.family == Potential::Family::constructive);
  CHECK(abc.spec.a == Rat(2));
  CHECK(abc.spec.c == Rat(1, 2));
  CHECK(Potential::parse("all-subgraphs").family == Potential::Family::constructive);
  CHECK_THROWS_AS(Potential::parse("f_pagerank"), Error);
  CHECK_THROWS_AS(Potential::parse(""), Error);
}

TEST_CASE("registered pairs cover the table in order") {
  const auto pairs = registered_pairs(0.5);
  REQUIRE(pairs.size() == 7);
  CHECK(pairs[0].measure.family == Measure::Family::degree);
  CHECK(pairs[0].potential.family == Potential::Family::f_degree);
  CHECK(pairs[5].measure.family == Measure::Family::decay);
  CHECK(pairs[5].potential.family == Potential::Family::f_decay);
  CHECK(pairs[5].potential.alpha == doctest::Approx(0.5));
  CHECK(pairs[6].measure.family == Measure::Family::ecc_minus_closeness);
  CHECK(pairs[6].potential.family == Potential::Family::f_heightminus);
}

TEST_CASE("potential equivalence holds for every registered pair") {
  for (const auto& pair : registered_pairs(0.5)) {
    CHECK(count_failures(6, [&](const Tree& t) {
            return check_potential_equivalence(pair.measure, pair.potential, t);
          }) == 0);
  }
  // random larger trees as well (lighter version of the module invariant).
  RandomTreeSource src(8);
  for (int round = 0; round < 60; ++round) {
    const Tree t = src.tree(src.uniform_int(2, 14));
    for (const auto& pair : registered_pairs(0.5))
      CHECK(check_potential_equivalence(pair.measure, pair.potential, t));
  }
}

TEST_CASE("mismatched pairings are detected") {
  // degree against the closeness potential must break on some small tree.
  const int fails = count_failures(6, [&](const Tree& t) {
    return check_potential_equivalence(Measure::parse("degree"),
                                       Potential::make(Potential::Family::f_closeness), t);
  });
  CHECK(fails > 0);
}

TEST_CASE("symmetry verdicts separate rooting from non-rooting potentials") {
  for (auto family : {Potential::Family::f_closeness, Potential::Family::f_eccentricity,
                      Potential::Family::f_allsubgraphs, Potential::Family::f_heightminus}) {
    CHECK(count_failures(6, [&](const Tree& t) {
            return is_symmetric_on(Potential::make(family), t);
          }) == 0);
  }
  for (auto family : {Potential::Family::f_degree, Potential::Family::f_betweenness,
                      Potential::Family::f_decay}) {
    CHECK(count_failures(6, [&](const Tree& t) {
            return is_symmetric_on(Potential::make(family), t);
          }) > 0);
  }
  // the 4-vertex example: star(2) with one pendant grown at a leaf.
  const Tree pendant = Tree::from_dense_edges(4, {{0, 1}, {0, 2}, {1, 3}});
  CHECK_FALSE(is_symmetric_on(Potential::make(Potential::Family::f_degree), pendant));
  CHECK(is_symmetric_on(Potential::make(Potential::Family::f_heightminus), Tree::line(3)));
}

TEST_CASE("subtree monotonicity verdicts") {
  CHECK(count_failures(6, [&](const Tree& t) {
          return is_subtree_monotone_on(Potential::make(Potential::Family::f_closeness), t);
        }) == 0);
  CHECK(count_failures(6, [&](const Tree& t) {
          return is_subtree_monotone_on(Potential::make(Potential::Family::f_allsubgraphs), t);
        }) == 0);
  CHECK(is_subtree_monotone_on(Potential::make(Potential::Family::f_eccentricity),
                               Tree::line(4)));
  // growing a tree without growing its height lowers 1/|T|: not monotone.
  const Potential fhm = Potential::make(Potential::Family::f_heightminus);
  CHECK_FALSE(is_subtree_monotone_on(fhm, Tree::line(3)));
  CHECK(count_failures(6, [&](const Tree& t) { return is_subtree_monotone_on(fhm, t); }) > 0);
}

TEST_CASE("combined strict check passes exactly the symmetric monotone potentials") {
  CHECK(combined_strict_check(Potential::make(Potential::Family::f_allsubgraphs),
                              Tree::single()));
  CHECK(count_failures(6, [&](const Tree& t) {
          return combined_strict_check(Potential::make(Potential::Family::f_allsubgraphs), t);
        }) == 0);
  CHECK(count_failures(6, [&](const Tree& t) {
          return combined_strict_check(Potential::make(Potential::Family::f_closeness), t);
        }) == 0);
  CHECK(count_failures(6, [&](const Tree& t) {
          return combined_strict_check(Potential::make(Potential::Family::f_betweenness), t);
        }) > 0);
  // symmetric but not subtree-monotone: must fail the combined form too.
  CHECK(count_failures(6, [&](const Tree& t) {
          return combined_strict_check(Potential::make(Potential::Family::f_heightminus), t);
        }) > 0);
}

TEST_CASE("height potential tracks the ecc-minus-closeness measure") {
  const Measure m = Measure::parse("ecc-minus-closeness");
  const Potential fhm = Potential::make(Potential::Family::f_heightminus);
  CHECK(count_failures(6, [&](const Tree& t) {
          return check_potential_equivalence(m, fhm, t);
        }) == 0);
}
