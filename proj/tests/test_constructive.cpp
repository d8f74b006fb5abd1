#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rootcast/constructive.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/potentials.hpp"
#include "rootcast/prufer.hpp"
#include "rootcast/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace rootcast;

TEST_CASE("spec names parse and round trip") {
  for (const char* name : {"degree", "closeness", "eccentricity", "all-subgraphs"}) {
    const auto s = ConstructiveSpec::builtin(name);
    CHECK(s.name() == name);
    CHECK(ConstructiveSpec::parse(name) == s);
  }
  const auto abc = ConstructiveSpec::abc(Rat(2), Rat(1), Rat(1, 2));
  CHECK(abc.name() == "abc:a=2,b=1,c=1/2");
  CHECK(ConstructiveSpec::parse(abc.name()) == abc);
  CHECK(ConstructiveSpec::parse("abc:a=2,b=1,c=0.5") == abc);
  CHECK(ConstructiveSpec::parse("abc:a=5/3,b=7,c=2").a == Rat(5, 3));

  auto code = [](const std::string& text) {
    try {
      ConstructiveSpec::parse(text);
    } catch (const Error& e) {
      return e.code();
    }
    return errc::bad_input;
  };
  CHECK(code("pagerank") == errc::unknown_name);
  CHECK(code("degree:a=1") == errc::unknown_name);
  CHECK(code("abc:a=2,b=1") == errc::bad_input);          // c missing
  CHECK(code("abc:a=2,b=1,c=1,a=3") == errc::bad_input);  // duplicate key
  CHECK(code("abc:a=2,b=one,c=1") == errc::bad_input);
  CHECK(code("abc:a=0.5,b=1,c=1") == errc::params_out_of_region);  // a >= 1
  CHECK(code("abc:a=1,b=0,c=1") == errc::params_out_of_region);    // b > 0
  CHECK(code("abc:a=1,b=1,c=-2") == errc::params_out_of_region);   // c > 0
}

TEST_CASE("built-in folds reproduce their closed forms") {
  // single vertex: the monoid identity.
  CHECK(eval_constructive(ConstructiveSpec::builtin("degree"), Tree::single(), 0).to_string() ==
        "0");
  CHECK(eval_constructive(ConstructiveSpec::builtin("closeness"), Tree::single(), 0)
            .to_string() == "1");
  CHECK(eval_constructive(ConstructiveSpec::builtin("all-subgraphs"), Tree::single(), 0)
            .to_string() == "1");

  CHECK(eval_constructive(ConstructiveSpec::builtin("degree"), Tree::star(5), 0).to_string() ==
        "5");
  CHECK(eval_constructive(ConstructiveSpec::builtin("eccentricity"), Tree::line(4), 0)
            .to_string() == "3");
  CHECK(eval_constructive(ConstructiveSpec::builtin("all-subgraphs"), Tree::star(4), 0)
            .to_string() == "16");

  // full agreement with the closed-form potentials on every small tree.
  const std::pair<const char*, Potential::Family> pairs[] = {
      {"degree", Potential::Family::f_degree},
      {"closeness", Potential::Family::f_closeness},
      {"eccentricity", Potential::Family::f_eccentricity},
      {"all-subgraphs", Potential::Family::f_allsubgraphs},
  };
  for (const auto& [name, family] : pairs) {
    const auto spec = ConstructiveSpec::builtin(name);
    const auto closed = Potential::make(family);
    for (int n = 2; n <= 6; ++n) {
      TreeEnumerator en(n);
      Tree t = Tree::single();
      while (en.next(t))
        for (int v = 0; v < n; ++v)
          CHECK(eval_constructive(spec, t, v).to_string() ==
                eval_potential(closed, t, v).to_string());
    }
  }
}

TEST_CASE("abc family evaluates exactly in rational mode") {
  const auto s = ConstructiveSpec::abc(Rat(1), Rat(1), Rat(1));
  CHECK(eval_constructive(s, Tree::single(), 0) == ScoreKey::rational(Rat(1)));
  // star with 4 leaves at the center: (a*c + b)^4 / c^3 = 2^4.
  CHECK(eval_constructive(s, Tree::star(4), 0) == ScoreKey::rational(Rat(16)));
  // path with 3 edges from an endpoint: 1 + 1 + 1 + 1.
  CHECK(eval_constructive(s, Tree::line(4), 0) == ScoreKey::rational(Rat(4)));

  const auto s2 = ConstructiveSpec::abc(Rat(2), Rat(1), Rat(1, 2));
  // star recurrence: each extra leaf multiplies by (ac+b)/c = 4 here.
  Rat star_want(1, 2);  // n = 0 leaves: identity c
  for (int n = 0; n <= 10; ++n, star_want *= 4)
    CHECK(abc_star_value(Rat(2), Rat(1), Rat(1, 2), n) == star_want);
  // direct spot value: (ac+b)^n / c^(n-1) with ac+b = 2.
  CHECK(abc_star_value(Rat(2), Rat(1), Rat(1, 2), 3) == Rat(8) / Rat(1, 4));
  CHECK(abc_path_value(Rat(2), Rat(1), Rat(1, 2), 0) == Rat(1, 2));
  CHECK(abc_path_value(Rat(2), Rat(1), Rat(1, 2), 1) == Rat(2));
  CHECK(abc_path_value(Rat(2), Rat(1), Rat(1, 2), 2) == Rat(5));

  for (int n = 0; n <= 9; ++n)
    CHECK(eval_constructive(s2, Tree::star(n), 0) ==
          ScoreKey::rational(abc_star_value(Rat(2), Rat(1), Rat(1, 2), n)));
  for (int m = 0; m <= 9; ++m)
    CHECK(eval_constructive(s2, Tree::line(m + 1), 0) ==
          ScoreKey::rational(abc_path_value(Rat(2), Rat(1), Rat(1, 2), m)));
}

TEST_CASE("evaluation is independent of labeling") {
  RandomTreeSource src(31);
  std::mt19937 rng(31);
  const std::vector<ConstructiveSpec> specs = {
      ConstructiveSpec::builtin("degree"),
      ConstructiveSpec::builtin("closeness"),
      ConstructiveSpec::builtin("eccentricity"),
      ConstructiveSpec::builtin("all-subgraphs"),
      ConstructiveSpec::abc(Rat(2), Rat(1, 2), Rat(3)),
  };
  for (int round = 0; round < 25; ++round) {
    const Tree t = src.tree(src.uniform_int(2, 20));
    std::vector<int> perm(t.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Tree r = oracle::relabeled(t, perm);
    const int v = src.uniform_int(0, t.n() - 1);
    for (const auto& spec : specs) {
      CHECK(eval_constructive(spec, t, v) == eval_constructive(spec, r, perm[v]));
      const double x = eval_constructive(spec, t, v, NumericMode::floating).as_double();
      const double y = eval_constructive(spec, r, perm[v], NumericMode::floating).as_double();
      CHECK(x == doctest::Approx(y).epsilon(1e-9));
    }
  }
}

TEST_CASE("float and log-space modes track the exact values") {
  RandomTreeSource src(12);
  const auto asg = ConstructiveSpec::builtin("all-subgraphs");
  const auto abc = ConstructiveSpec::abc(Rat(3, 2), Rat(1), Rat(2));
  for (int round = 0; round < 15; ++round) {
    const Tree t = src.tree(src.uniform_int(2, 16));
    const int v = src.uniform_int(0, t.n() - 1);
    const double exact_log = eval_constructive(asg, t, v).as_log2() * std::log(2.0);
    CHECK(eval_constructive(asg, t, v, NumericMode::log_space).as_double() ==
          doctest::Approx(exact_log).epsilon(1e-9));
    const double exact_abc = eval_constructive(abc, t, v).as_double();
    CHECK(eval_constructive(abc, t, v, NumericMode::floating).as_double() ==
          doctest::Approx(exact_abc).epsilon(1e-9));
    CHECK(std::exp(eval_constructive(abc, t, v, NumericMode::log_space).as_double()) ==
          doctest::Approx(exact_abc).epsilon(1e-9));
  }
  // log-space is only defined for product monoids.
  CHECK_THROWS_AS(
      eval_constructive(ConstructiveSpec::builtin("closeness"), Tree::line(3), 0,
                        NumericMode::log_space),
      Error);
  // float mode overflows the carrier on huge folds instead of returning inf.
  try {
    eval_constructive(ConstructiveSpec::abc(Rat(4), Rat(4), Rat(1, 4)), Tree::star(600), 0,
                      NumericMode::floating);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::carrier_violation);
  }
}

TEST_CASE("lemma conditions separate degree from the rooting specs") {
  const auto degree = check_lemma_conditions(ConstructiveSpec::builtin("degree"));
  CHECK_FALSE(degree.leaf_increasing);  // leaf(x) = 1 is not above x at x = 1
  CHECK_FALSE(degree.all());
  CHECK(degree.witness.find("condition (1)") != std::string::npos);

  for (const char* name : {"closeness", "eccentricity", "all-subgraphs"}) {
    const auto rep = check_lemma_conditions(ConstructiveSpec::builtin(name));
    CHECK(rep.all());
    CHECK(rep.witness.empty());
  }
  CHECK(check_lemma_conditions(ConstructiveSpec::abc(Rat(2), Rat(1, 2), Rat(1))).all());
  CHECK(check_lemma_conditions(ConstructiveSpec::abc(Rat(1), Rat(1), Rat(4))).all());
}

TEST_CASE("monoid views expose the documented carriers") {
  const auto asg = ConstructiveSpec::builtin("all-subgraphs");
  CHECK(asg.monoid().identity == 1.0);
  CHECK(asg.monoid().op(3.0, 5.0) == 15.0);
  CHECK(asg.leaf().fn(3.0) == 4.0);
  CHECK(asg.product_monoid());
  CHECK_FALSE(ConstructiveSpec::builtin("eccentricity").product_monoid());
  const auto ecc = ConstructiveSpec::builtin("eccentricity");
  CHECK(ecc.monoid().op(2.0, 5.0) == 5.0);  // max
  CHECK(ecc.monoid().identity == 0.0);
  const auto abc = ConstructiveSpec::abc(Rat(2), Rat(1), Rat(4));
  CHECK(abc.monoid().op(8.0, 12.0) == doctest::Approx(24.0));  // x*y/c
  CHECK(abc.monoid().identity == 4.0);                         // identity c
  CHECK(abc.leaf().fn(4.0) == doctest::Approx(9.0));           // 2x + 1
  CHECK_FALSE(ConstructiveSpec::builtin("degree").symmetric());
  CHECK(abc.symmetric());
}
