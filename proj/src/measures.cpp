#include "rootcast/measures.hpp"

#include <algorithm>
#include <cmath>

#include "rootcast/errors.hpp"

namespace rootcast {

namespace {

constexpr double kIterEps = 1e-12;
constexpr int kIterCap = 100000;

double parse_alpha(const std::string& text, const std::string& params, double fallback) {
  double alpha = fallback;
  if (!params.empty()) {
    if (params.rfind("alpha=", 0) != 0)
      fail(errc::unknown_name, "unknown parameter in '" + text + "' (expected alpha=...)");
    try {
      std::size_t used = 0;
      alpha = std::stod(params.substr(6), &used);
      if (used != params.size() - 6) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail(errc::bad_input, "malformed alpha in '" + text + "'");
    }
  }
  if (!(alpha > 0.0 && alpha < 1.0))
    fail(errc::alpha_out_of_range, "alpha must lie strictly between 0 and 1");
  return alpha;
}

void require_multiple_vertices(const Measure& m, const Tree& t) {
  if (t.n() == 1)
    fail(errc::single_vertex,
         m.name() + " degenerates on a single vertex (all distances empty)");
}

std::vector<long long> distance_sums_and_ecc(const Tree& t, std::vector<int>& ecc) {
  std::vector<long long> sums(t.n());
  ecc.assign(t.n(), 0);
  for (int v = 0; v < t.n(); ++v) {
    std::vector<int> d = distances_from(t, v);
    long long s = 0;
    int e = 0;
    for (int x : d) {
      s += x;
      e = std::max(e, x);
    }
    sums[v] = s;
    ecc[v] = e;
  }
  return sums;
}

std::vector<ScoreKey> degree_scores(const Tree& t) {
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v) out.push_back(ScoreKey::exact(t.degree(v)));
  return out;
}

std::vector<ScoreKey> closeness_scores(const Tree& t) {
  std::vector<int> ecc;
  auto sums = distance_sums_and_ecc(t, ecc);
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (long long s : sums) out.push_back(ScoreKey::exact(-s));
  return out;
}

std::vector<ScoreKey> eccentricity_scores(const Tree& t) {
  std::vector<int> ecc;
  distance_sums_and_ecc(t, ecc);
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int e : ecc) out.push_back(ScoreKey::exact(-e));
  return out;
}

std::vector<ScoreKey> all_subgraphs_scores(const Tree& t) {
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v) out.push_back(ScoreKey::big(all_subgraphs_count(t, v)));
  return out;
}

std::vector<ScoreKey> betweenness_scores(const Tree& t) {
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v) out.push_back(ScoreKey::exact(betweenness_count(t, v)));
  return out;
}

std::vector<ScoreKey> decay_scores(const Tree& t, double alpha) {
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v) {
    std::vector<int> d = distances_from(t, v);
    // Horner over the distance histogram keeps the sum short and stable.
    std::vector<int> hist(t.n(), 0);
    int maxd = 0;
    for (int x : d) {
      hist[x]++;
      maxd = std::max(maxd, x);
    }
    double acc = 0;
    for (int i = maxd; i >= 1; --i) acc = alpha * (hist[i] + acc);
    out.push_back(ScoreKey::real(acc));
  }
  return out;
}

std::vector<ScoreKey> pagerank_scores(const Tree& t, double alpha) {
  int n = t.n();
  std::vector<ScoreKey> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(ScoreKey::real(1.0));
    return out;
  }
  std::vector<double> x(n, 1.0 / n), next(n);
  for (int iter = 0; iter < kIterCap; ++iter) {
    double residual = 0;
    for (int v = 0; v < n; ++v) {
      double flow = 0;
      for (int u : t.neighbors(v)) flow += x[u] / t.degree(u);
      next[v] = (1.0 - alpha) / n + alpha * flow;
      residual = std::max(residual, std::fabs(next[v] - x[v]));
    }
    x.swap(next);
    if (residual <= kIterEps) {
      for (double s : x) out.push_back(ScoreKey::real(s));
      return out;
    }
  }
  fail(errc::no_convergence, "pagerank did not converge in " + std::to_string(kIterCap) + " iterations");
}

std::vector<ScoreKey> eigenvector_scores(const Tree& t) {
  int n = t.n();
  std::vector<ScoreKey> out;
  out.reserve(n);
  if (n == 1) {
    out.push_back(ScoreKey::real(1.0));
    return out;
  }
  // Power iteration on A+I: same eigenvectors as A, but the shift makes the
  // iteration converge on bipartite graphs (every tree is bipartite).
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), next(n);
  for (int iter = 0; iter < kIterCap; ++iter) {
    for (int v = 0; v < n; ++v) {
      double acc = x[v];
      for (int u : t.neighbors(v)) acc += x[u];
      next[v] = acc;
    }
    double norm = 0;
    for (double s : next) norm += s * s;
    norm = std::sqrt(norm);
    double residual = 0;
    for (int v = 0; v < n; ++v) {
      next[v] /= norm;
      residual = std::max(residual, std::fabs(next[v] - x[v]));
    }
    x.swap(next);
    if (residual <= kIterEps) {
      for (double s : x) out.push_back(ScoreKey::real(s));
      return out;
    }
  }
  fail(errc::no_convergence, "eigenvector iteration did not converge in " +
                                 std::to_string(kIterCap) + " iterations");
}

std::vector<ScoreKey> cstar_scores(const Tree& t) {
  std::vector<int> roots = cstar_root_set(t);
  std::vector<char> in_root(t.n(), 0);
  for (int r : roots) in_root[r] = 1;
  std::vector<int> best(t.n(), -1);
  for (int r : roots) {
    std::vector<int> d = distances_from(t, r);
    for (int v = 0; v < t.n(); ++v)
      if (best[v] < 0 || d[v] < best[v]) best[v] = d[v];
  }
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  for (int v = 0; v < t.n(); ++v)
    out.push_back(ScoreKey::real(in_root[v] ? 2.0 : 1.0 / best[v]));
  return out;
}

std::vector<ScoreKey> ecc_minus_closeness_scores(const Tree& t) {
  std::vector<int> ecc;
  auto sums = distance_sums_and_ecc(t, ecc);
  std::vector<ScoreKey> out;
  out.reserve(t.n());
  Rat scale(1, static_cast<long long>(t.n()) * t.n());
  for (int v = 0; v < t.n(); ++v)
    out.push_back(ScoreKey::rational(Rat(1, ecc[v]) - scale * Rat(1, sums[v])));
  return out;
}

}  // namespace

Measure Measure::make(Family f, double alpha) {
  Measure m;
  m.family = f;
  m.alpha = alpha;
  return m;
}

Measure Measure::parse(const std::string& text) {
  std::string head = text, params;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    head = text.substr(0, colon);
    params = text.substr(colon + 1);
  }
  auto plain = [&](Family f) {
    if (!params.empty()) fail(errc::unknown_name, "'" + head + "' takes no parameters");
    return make(f);
  };
  if (head == "degree") return plain(Family::degree);
  if (head == "closeness") return plain(Family::closeness);
  if (head == "eccentricity") return plain(Family::eccentricity);
  if (head == "all-subgraphs") return plain(Family::all_subgraphs);
  if (head == "betweenness") return plain(Family::betweenness);
  if (head == "cstar") return plain(Family::cstar);
  if (head == "eigenvector") return plain(Family::eigenvector);
  if (head == "ecc-minus-closeness") return plain(Family::ecc_minus_closeness);
  if (head == "decay") return make(Family::decay, parse_alpha(text, params, 0.5));
  if (head == "pagerank") return make(Family::pagerank, parse_alpha(text, params, 0.85));
  fail(errc::unknown_name, "unknown measure '" + text + "'");
}

std::string Measure::name() const {
  switch (family) {
    case Family::degree: return "degree";
    case Family::closeness: return "closeness";
    case Family::eccentricity: return "eccentricity";
    case Family::all_subgraphs: return "all-subgraphs";
    case Family::betweenness: return "betweenness";
    case Family::decay: return "decay:alpha=" + format_double(alpha);
    case Family::pagerank: return "pagerank:alpha=" + format_double(alpha);
    case Family::eigenvector: return "eigenvector";
    case Family::cstar: return "cstar";
    case Family::ecc_minus_closeness: return "ecc-minus-closeness";
  }
  return "?";
}

std::vector<Measure> standard_measures() {
  using F = Measure::Family;
  return {Measure::make(F::degree),          Measure::make(F::closeness),
          Measure::make(F::eccentricity),    Measure::make(F::all_subgraphs),
          Measure::make(F::betweenness),     Measure::make(F::decay, 0.5),
          Measure::make(F::pagerank, 0.85),  Measure::make(F::eigenvector),
          Measure::make(F::cstar),           Measure::make(F::ecc_minus_closeness)};
}

BigInt all_subgraphs_count(const Tree& t, int v) {
  // Connected subgraphs through the root multiply over children: each child
  // subtree independently contributes "absent" or any of its own counts.
  std::vector<int> parent, order;
  rooted_orientation(t, v, parent, order);
  std::vector<BigInt> count(t.n(), 1);
  for (int i = t.n() - 1; i > 0; --i) {
    int u = order[i];
    count[parent[u]] *= 1 + count[u];
  }
  return count[v];
}

long long betweenness_count(const Tree& t, int v) {
  // v lies on the (u,w) path exactly when u and w sit in different
  // components of T - v, so count ordered cross-component pairs.
  long long total = t.n() - 1, squares = 0;
  std::vector<int> size = subtree_sizes(t, v);
  for (int u : t.neighbors(v)) {
    long long s = size[u];
    squares += s * s;
  }
  return total * total - squares;
}

std::vector<int> cstar_root_set(const Tree& t) {
  if (t.n() == 1) return {0};
  std::vector<int> ecc;
  distance_sums_and_ecc(t, ecc);
  int best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<int> centers;
  for (int v = 0; v < t.n(); ++v)
    if (ecc[v] == best) centers.push_back(v);
  check_internal(centers.size() <= 2, "a tree has at most two eccentricity maximizers");

  if (centers.size() == 2) {
    int w1 = centers[0], w2 = centers[1];
    check_internal(t.has_edge(w1, w2), "twin eccentricity maximizers are adjacent");
    int s1 = hanging_size(t, w1, w2), s2 = hanging_size(t, w2, w1);
    if (s1 > s2) return {w1};
    if (s2 > s1) return {w2};
    return {w1, w2};
  }

  int w = centers[0];
  std::vector<int> size = subtree_sizes(t, w);
  int best_size = 0;
  for (int u : t.neighbors(w)) best_size = std::max(best_size, size[u]);
  std::vector<int> heavy;
  for (int u : t.neighbors(w))
    if (size[u] == best_size) heavy.push_back(u);
  if (heavy.size() == 1) {
    std::vector<int> out{w, heavy[0]};
    std::sort(out.begin(), out.end());
    return out;
  }
  return {w};
}

std::vector<ScoreKey> score_all(const Measure& m, const Tree& t) {
  using F = Measure::Family;
  switch (m.family) {
    case F::degree: return degree_scores(t);
    case F::closeness:
      require_multiple_vertices(m, t);
      return closeness_scores(t);
    case F::eccentricity:
      require_multiple_vertices(m, t);
      return eccentricity_scores(t);
    case F::all_subgraphs: return all_subgraphs_scores(t);
    case F::betweenness: return betweenness_scores(t);
    case F::decay: return decay_scores(t, m.alpha);
    case F::pagerank: return pagerank_scores(t, m.alpha);
    case F::eigenvector: return eigenvector_scores(t);
    case F::cstar: return cstar_scores(t);
    case F::ecc_minus_closeness:
      require_multiple_vertices(m, t);
      return ecc_minus_closeness_scores(t);
  }
  fail(errc::unknown_name, "unhandled measure");
}

ScoreKey score_one(const Measure& m, const Tree& t, int v) {
  if (v < 0 || v >= t.n()) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  return score_all(m, t)[v];
}

std::vector<int> max_set(const std::vector<ScoreKey>& scores) {
  int best = 0;
  for (int v = 1; v < static_cast<int>(scores.size()); ++v)
    if (scores[best] < scores[v]) best = v;
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(scores.size()); ++v)
    if (scores[v].compare(scores[best]) == 0) out.push_back(v);
  return out;
}

std::vector<int> max_set(const Measure& m, const Tree& t) { return max_set(score_all(m, t)); }

std::string display_score(const Measure& m, const ScoreKey& key) {
  using F = Measure::Family;
  switch (m.family) {
    case F::closeness:
    case F::eccentricity:
      // Key holds the negated distance aggregate.
      return format_double(1.0 / -key.as_double());
    case F::all_subgraphs:
      return format_double(key.as_log2());
    default:
      return key.to_string();
  }
}

}  // namespace rootcast
