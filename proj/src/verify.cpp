#include "rootcast/verify.hpp"

#include "rootcast/errors.hpp"
#include "rootcast/prufer.hpp"
#include "rootcast/score.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace rootcast {

PropertyId parse_property(const std::string& text) {
  if (text == "rooting") return PropertyId::rooting;
  if (text == "amop") return PropertyId::amop;
  if (text == "symmetry") return PropertyId::symmetry;
  if (text == "consistency") return PropertyId::consistency;
  if (text == "monotonicity") return PropertyId::monotonicity;
  if (text == "potential-equivalence") return PropertyId::potential_equivalence;
  if (text == "cstar-no-potential") return PropertyId::cstar_no_potential;
  fail(errc::unknown_name, "unknown property '" + text + "'");
}

std::string property_name(PropertyId p) {
  switch (p) {
    case PropertyId::rooting: return "rooting";
    case PropertyId::amop: return "amop";
    case PropertyId::symmetry: return "symmetry";
    case PropertyId::consistency: return "consistency";
    case PropertyId::monotonicity: return "monotonicity";
    case PropertyId::potential_equivalence: return "potential-equivalence";
    case PropertyId::cstar_no_potential: return "cstar-no-potential";
  }
  return "?";
}

std::string Subject::name() const {
  if (potential) return measure.name() + " vs " + potential->name();
  return measure.name();
}

bool check_rooting(const Measure& m, const Tree& t) {
  if (t.n() == 1) return true;
  const auto scores = score_all(m, t);
  const auto max = max_set(scores);
  if (max.size() > 2) return false;
  if (max.size() == 2 && !t.has_edge(max[0], max[1])) return false;
  std::vector<int> parent, order;
  rooted_orientation(t, max[0], parent, order);
  std::vector<char> is_max(t.n(), 0);
  for (int r : max) is_max[r] = 1;
  for (int v = 0; v < t.n(); ++v)
    if (!is_max[v] && scores[parent[v]].compare(scores[v]) <= 0) return false;
  return true;
}

bool check_amop(const Measure& m, const Tree& t) {
  if (t.n() == 1) return true;
  const auto scores = score_all(m, t);
  for (int v = 0; v < t.n(); ++v) {
    int parents = 0;
    for (int u : t.neighbors(v))
      if (scores[v].compare(scores[u]) <= 0 && ++parents > 1) return false;
  }
  return true;
}

bool check_symmetry_measure(const Measure& m, const Tree& t) {
  if (t.n() == 1) return true;
  const auto scores = score_all(m, t);
  for (int v = 0; v < t.n(); ++v) {
    if (t.degree(v) < 2) continue;
    std::map<std::string, std::vector<int>> shapes;
    for (int u : t.neighbors(v)) {
      const SubtreeView side(t, u, v);
      shapes[rooted_canonical(side.materialize(), side.anchor_index())].push_back(u);
    }
    for (const auto& [canon, group] : shapes) {
      if (group.size() < 2) continue;
      for (int u : group)
        if (scores[u].compare(scores[v]) >= 0) return false;
    }
  }
  return true;
}

namespace {

bool consistency_core(const std::function<std::vector<int>(const Tree&)>& roots_of, const Tree& t,
                      bool all_roots) {
  const std::vector<int> max1 = t.n() == 1 ? std::vector<int>{0} : roots_of(t);
  std::set<int> max1_set(max1.begin(), max1.end());
  for (int v = 0; v < t.n(); ++v) {
    const Tree t2 = add_leaf(t, v);
    const int w = t2.n() - 1;
    const auto max2 = roots_of(t2);
    auto holds_for = [&](int u) {
      std::set<int> allowed(max1_set);
      for (int x : path_between(t2, u, w)) allowed.insert(x);
      for (int r : max2)
        if (!allowed.count(r)) return false;
      return true;
    };
    if (all_roots) {
      for (int u : max1)
        if (!holds_for(u)) return false;
    } else {
      bool any = false;
      for (int u : max1)
        if (holds_for(u)) {
          any = true;
          break;
        }
      if (!any) return false;
    }
  }
  return true;
}

// Sign of "u beats v" in the ordering a potential induces across edge {u,v}.
int edge_compare(const Potential& p, const Tree& t, int u, int v) {
  return hanging_value(p, t, u, v).compare(hanging_value(p, t, v, u));
}

// Vertices no neighbor strictly beats.  Never empty: a cycle of strict
// comparisons would need some edge strict in both directions.
std::vector<int> potential_winners(const Potential& p, const Tree& t) {
  std::vector<int> winners;
  for (int v = 0; v < t.n(); ++v) {
    bool beaten = false;
    for (int u : t.neighbors(v))
      if (edge_compare(p, t, u, v) > 0) {
        beaten = true;
        break;
      }
    if (!beaten) winners.push_back(v);
  }
  return winners;
}

}  // namespace

bool check_consistency(const Measure& m, const Tree& t, bool all_roots) {
  return consistency_core([&](const Tree& x) { return max_set(m, x); }, t, all_roots);
}

bool check_monotonic(const Measure& m, const Tree& t) {
  if (t.n() == 1) return true;
  const auto scores = score_all(m, t);
  for (const auto& [a, b] : t.edges())
    for (const auto& [v, u] : {std::pair{a, b}, std::pair{b, a}}) {
      if (scores[v].compare(scores[u]) >= 0) continue;  // need strict C(v) < C(u)
      const SubtreeView winner_side(t, u, v);
      for (int w : winner_side.vertices()) {
        const Tree t2 = add_leaf(t, w);
        const auto s2 = score_all(m, t2);
        if (s2[v].compare(s2[u]) >= 0) return false;
      }
    }
  return true;
}

bool check_rooting_spec(const ConstructiveSpec& s, const Tree& t) {
  if (t.n() == 1) return true;
  const Potential p = Potential::of_spec(s);
  const auto winners = potential_winners(p, t);
  if (winners.size() > 2) return false;
  if (winners.size() == 2 && !t.has_edge(winners[0], winners[1])) return false;
  std::vector<int> parent, order;
  rooted_orientation(t, winners[0], parent, order);
  std::vector<char> is_winner(t.n(), 0);
  for (int r : winners) is_winner[r] = 1;
  for (int v = 0; v < t.n(); ++v)
    if (!is_winner[v] && edge_compare(p, t, parent[v], v) <= 0) return false;
  return true;
}

bool check_consistency_spec(const ConstructiveSpec& s, const Tree& t, bool all_roots) {
  const Potential p = Potential::of_spec(s);
  return consistency_core([&](const Tree& x) { return potential_winners(p, x); }, t, all_roots);
}

namespace {

std::function<bool(const Tree&)> make_checker(PropertyId property, const Subject& subject,
                                              const SweepOptions& opt) {
  const Measure m = subject.measure;
  switch (property) {
    case PropertyId::rooting:
      return [m](const Tree& t) { return check_rooting(m, t); };
    case PropertyId::amop:
      return [m](const Tree& t) { return check_amop(m, t); };
    case PropertyId::symmetry:
      return [m](const Tree& t) { return check_symmetry_measure(m, t); };
    case PropertyId::consistency: {
      const bool all = opt.consistency_all_roots;
      return [m, all](const Tree& t) { return check_consistency(m, t, all); };
    }
    case PropertyId::monotonicity:
      return [m](const Tree& t) { return check_monotonic(m, t); };
    case PropertyId::potential_equivalence: {
      if (!subject.potential)
        fail(errc::bad_input, "potential-equivalence needs a potential to compare against");
      const Potential p = *subject.potential;
      return [m, p](const Tree& t) { return check_potential_equivalence(m, p, t); };
    }
    case PropertyId::cstar_no_potential:
      fail(errc::bad_input, "cstar-no-potential is a fixed demonstration; run it directly");
  }
  fail(errc::bad_input, "unhandled property");
}

// Offending vertices and a score line for a failing tree.
Counterexample explain_failure(PropertyId property, const Subject& subject, const Tree& t) {
  Counterexample ce;
  ce.tree = t;
  const Measure& m = subject.measure;
  std::string detail;
  if (property == PropertyId::potential_equivalence && subject.potential) {
    const Potential& p = *subject.potential;
    const auto scores = score_all(m, t);
    for (const auto& [u, v] : t.edges()) {
      const int ms = scores[u].compare(scores[v]);
      const auto fu = hanging_value(p, t, u, v);
      const auto fv = hanging_value(p, t, v, u);
      if (ms != fu.compare(fv)) {
        ce.vertices = {u, v};
        detail = "edge {" + std::to_string(u) + "," + std::to_string(v) + "}: C(u)=" +
                 scores[u].to_string() + " C(v)=" + scores[v].to_string() +
                 " f(u,T_u)=" + fu.to_string() + " f(v,T_v)=" + fv.to_string();
        break;
      }
    }
  } else {
    const auto scores =
        t.n() == 1 ? std::vector<ScoreKey>{ScoreKey::exact(0)} : score_all(m, t);
    ce.vertices = max_set(scores);
    for (int v = 0; v < t.n(); ++v)
      detail += (v ? " " : "") + std::to_string(v) + "=" + scores[v].to_string();
  }
  ce.detail = detail;
  return ce;
}

constexpr std::uint64_t kNoFailure = ~0ULL;

}  // namespace

PropertyReport sweep(PropertyId property, const Subject& subject, const SweepOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  auto check = make_checker(property, subject, opt);

  PropertyReport rep;
  rep.property = property;
  rep.subject = subject.name();

  std::uint64_t trees_checked = 0;
  bool fragile = false;
  std::optional<Tree> failing;

  for (int n = 2; n <= opt.n_max && !failing; ++n) {
    const TreeEnumerator base(n);
    const std::uint64_t total = base.total();
    const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(std::min<std::uint64_t>(
                                                             total, 64))));
    std::atomic<std::uint64_t> first_fail{kNoFailure};
    std::atomic<bool> any_fragile{false};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));

    auto work = [&](int w) {
      try {
        fragile_reset();
        const TreeEnumerator en(n);
        const std::uint64_t lo = total * static_cast<std::uint64_t>(w) / jobs;
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(w) + 1) / jobs;
        std::uint64_t local_fail = kNoFailure;
        for (std::uint64_t i = lo; i < hi; ++i) {
          if (!check(en.at(i)) && local_fail == kNoFailure) local_fail = i;
        }
        if (local_fail != kNoFailure) {
          std::uint64_t seen = first_fail.load();
          while (local_fail < seen && !first_fail.compare_exchange_weak(seen, local_fail)) {
          }
        }
        if (fragile_seen()) any_fragile = true;
      } catch (...) {
        errors[static_cast<size_t>(w)] = std::current_exception();
      }
    };

    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(jobs));
      for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);

    trees_checked += total;
    fragile = fragile || any_fragile.load();
    if (first_fail.load() != kNoFailure) failing = base.at(first_fail.load());
  }

  if (!failing && opt.random_budget > 0) {
    fragile_reset();
    RandomTreeSource src(opt.seed);
    for (std::uint64_t i = 0; i < opt.random_budget; ++i) {
      const Tree t = src.tree(src.uniform_int(2, std::max(2, opt.random_n_max)));
      ++trees_checked;
      if (!check(t)) {
        failing = t;
        break;
      }
    }
    fragile = fragile || fragile_seen();
  }

  rep.trees_checked = trees_checked;
  rep.fragile = fragile;
  if (failing) {
    rep.all_pass = false;
    rep.counterexample = explain_failure(property, subject, *failing);
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

PropertyReport cstar_no_potential_demo() {
  const auto t0 = std::chrono::steady_clock::now();
  const Measure cstar = Measure::make(Measure::Family::cstar);

  PropertyReport rep;
  rep.property = PropertyId::cstar_no_potential;
  rep.subject = cstar.name();

  const Tree star3 = Tree::star(3);  // rooted at center 0
  const Tree line5 = Tree::line(5);  // rooted at 2, and at 1
  struct JoinCase {
    const Tree& left;
    int vl;
    const Tree& right;
    int vr;
    int want;  // expected compare sign of C*(vl) vs C*(vr)
  };
  const JoinCase cases[] = {
      {star3, 0, line5, 2, 0},
      {line5, 2, line5, 1, 0},
      {star3, 0, line5, 1, -1},
  };
  std::string values;
  for (const auto& jc : cases) {
    const Tree joined = join(jc.left, jc.vl, jc.right, jc.vr);
    const auto scores = score_all(cstar, joined);
    const int a = jc.vl, b = jc.left.n() + jc.vr;
    const int got = scores[a].compare(scores[b]);
    values += "C*(" + std::to_string(a) + ")=" + scores[a].to_string() + " vs C*(" +
              std::to_string(b) + ")=" + scores[b].to_string() + "; ";
    ++rep.trees_checked;
    if (got != jc.want && rep.all_pass) {
      rep.all_pass = false;
      Counterexample ce;
      ce.tree = joined;
      ce.vertices = {a, b};
      ce.detail = values;
      rep.counterexample = ce;
    }
  }

  if (rep.all_pass) {
    Subject subj{cstar, std::nullopt};
    SweepOptions opt;
    opt.n_max = 8;
    PropertyReport rooting = sweep(PropertyId::rooting, subj, opt);
    rep.trees_checked += rooting.trees_checked;
    rep.fragile = rooting.fragile;
    if (!rooting.all_pass) {
      rep.all_pass = false;
      rep.counterexample = rooting.counterexample;
    }
  }
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace rootcast
