#include "rootcast/potentials.hpp"

#include "rootcast/errors.hpp"
#include "rootcast/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace rootcast {

Potential Potential::make(Family f, double alpha) {
  Potential p;
  p.family = f;
  if (f == Family::f_decay) {
    if (!(alpha > 0.0 && alpha < 1.0))
      fail(errc::alpha_out_of_range, "decay potential needs 0 < alpha < 1");
    p.alpha = alpha;
  }
  return p;
}

Potential Potential::of_spec(const ConstructiveSpec& s) {
  Potential p;
  p.family = Family::constructive;
  p.spec = s;
  return p;
}

Potential Potential::parse(const std::string& text) {
  if (text.rfind("f_", 0) != 0) return of_spec(ConstructiveSpec::parse(text));
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  if (head == "f_decay") {
    double alpha = 0.5;
    if (colon != std::string::npos) {
      const std::string param = text.substr(colon + 1);
      if (param.rfind("alpha=", 0) != 0)
        fail(errc::bad_input, "expected alpha=VALUE after f_decay:, got '" + param + "'");
      alpha = static_cast<double>(parse_rational(param.substr(6)));
    }
    return make(Family::f_decay, alpha);
  }
  if (colon != std::string::npos)
    fail(errc::bad_input, "potential '" + head + "' takes no parameters");
  if (head == "f_degree") return make(Family::f_degree);
  if (head == "f_closeness") return make(Family::f_closeness);
  if (head == "f_eccentricity") return make(Family::f_eccentricity);
  if (head == "f_allsubgraphs") return make(Family::f_allsubgraphs);
  if (head == "f_betweenness") return make(Family::f_betweenness);
  if (head == "f_heightminus") return make(Family::f_heightminus);
  fail(errc::unknown_name, "no potential named '" + text + "'");
}

std::string Potential::name() const {
  switch (family) {
    case Family::f_degree: return "f_degree";
    case Family::f_closeness: return "f_closeness";
    case Family::f_eccentricity: return "f_eccentricity";
    case Family::f_allsubgraphs: return "f_allsubgraphs";
    case Family::f_betweenness: return "f_betweenness";
    case Family::f_decay: return "f_decay:alpha=" + format_double(alpha);
    case Family::f_heightminus: return "f_heightminus";
    case Family::constructive: return spec.name();
  }
  return "?";
}

namespace {

int height_from(const Tree& t, int v) {
  const auto d = distances_from(t, v);
  return *std::max_element(d.begin(), d.end());
}

}  // namespace

ScoreKey eval_potential(const Potential& p, const Tree& t, int v) {
  if (v < 0 || v >= t.n()) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  switch (p.family) {
    case Potential::Family::f_degree:
      return ScoreKey::exact(t.degree(v));
    case Potential::Family::f_closeness:
      return ScoreKey::exact(t.n());
    case Potential::Family::f_eccentricity:
      return ScoreKey::exact(height_from(t, v));
    case Potential::Family::f_allsubgraphs:
      return ScoreKey::big(all_subgraphs_count(t, v));
    case Potential::Family::f_betweenness:
      return ScoreKey::exact(betweenness_count(t, v) + 2LL * t.n());
    case Potential::Family::f_decay: {
      double sum = 0.0;
      for (int d : distances_from(t, v))
        if (d > 0) sum += std::pow(p.alpha, d);
      return ScoreKey::real((1.0 - p.alpha) * sum);
    }
    case Potential::Family::f_heightminus:
      return ScoreKey::rational(Rat(height_from(t, v)) + Rat(1, t.n()));
    case Potential::Family::constructive:
      return eval_constructive(p.spec, t, v);
  }
  fail(errc::unknown_name, "unhandled potential family");
}

ScoreKey hanging_value(const Potential& p, const Tree& t, int u, int v) {
  const SubtreeView side(t, u, v);
  return eval_potential(p, side.materialize(), side.anchor_index());
}

std::vector<EquivalencePair> registered_pairs(double decay_alpha) {
  using MF = Measure::Family;
  using PF = Potential::Family;
  return {
      {Measure::make(MF::degree), Potential::make(PF::f_degree)},
      {Measure::make(MF::closeness), Potential::make(PF::f_closeness)},
      {Measure::make(MF::eccentricity), Potential::make(PF::f_eccentricity)},
      {Measure::make(MF::all_subgraphs), Potential::make(PF::f_allsubgraphs)},
      {Measure::make(MF::betweenness), Potential::make(PF::f_betweenness)},
      {Measure::make(MF::decay, decay_alpha), Potential::make(PF::f_decay, decay_alpha)},
      {Measure::make(MF::ecc_minus_closeness), Potential::make(PF::f_heightminus)},
  };
}

bool check_potential_equivalence(const Measure& m, const Potential& p, const Tree& t) {
  const auto scores = score_all(m, t);
  for (const auto& [u, v] : t.edges()) {
    const int measure_sign = scores[u].compare(scores[v]);
    const int potential_sign = hanging_value(p, t, u, v).compare(hanging_value(p, t, v, u));
    if (measure_sign != potential_sign) return false;
  }
  return true;
}

bool is_symmetric_on(const Potential& p, const Tree& t) {
  std::vector<ScoreKey> whole(t.n());
  for (int v = 0; v < t.n(); ++v) whole[v] = eval_potential(p, t, v);
  for (const auto& [a, b] : t.edges())
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}})
      if (!(hanging_value(p, t, u, v) < whole[v])) return false;
  return true;
}

bool is_subtree_monotone_on(const Potential& p, const Tree& t) {
  if (t.n() < 2) return true;
  std::vector<ScoreKey> whole(t.n());
  for (int v = 0; v < t.n(); ++v) whole[v] = eval_potential(p, t, v);
  for (int leaf = 0; leaf < t.n(); ++leaf) {
    if (t.degree(leaf) != 1) continue;
    const SubtreeView rest(t, t.neighbors(leaf)[0], leaf);
    const Tree reduced = rest.materialize();
    const auto& verts = rest.vertices();
    for (int i = 0; i < reduced.n(); ++i)
      if (whole[verts[i]] < eval_potential(p, reduced, i)) return false;
  }
  return true;
}

bool combined_strict_check(const Potential& p, const Tree& t) {
  if (t.n() < 2) return true;
  std::vector<ScoreKey> whole(t.n());
  for (int v = 0; v < t.n(); ++v) whole[v] = eval_potential(p, t, v);
  for (const auto& [a, b] : t.edges())
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      // T' = the hanging subtree at u away from v; every complete subtree is
      // some T' shrunk by pendant deletions, so the two parts below extend to
      // all of them by the same induction that backs is_subtree_monotone_on.
      const SubtreeView side(t, u, v);
      const Tree sub = side.materialize();
      const auto& verts = side.vertices();
      std::vector<char> in_side(t.n(), 0);
      for (int x : verts) in_side[x] = 1;
      // Same vertex: f(x, T') <= f(x, T).
      for (int i = 0; i < sub.n(); ++i)
        if (eval_potential(p, sub, i).compare(whole[verts[i]]) > 0) return false;
      // Anchor vs outside: f(u, T') < f(w, T) for every w beyond the cut;
      // the paths from u to those w leave T' immediately, which is the case
      // the monotone+symmetric chain argument covers.
      const ScoreKey anchor = eval_potential(p, sub, side.anchor_index());
      for (int w = 0; w < t.n(); ++w)
        if (!in_side[w] && anchor.compare(whole[w]) >= 0) return false;
    }
  return true;
}

}  // namespace rootcast
