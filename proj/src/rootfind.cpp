#include "rootcast/rootfind.hpp"

#include "constructive_kernel.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/prufer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>
#include <utility>
#include <vector>

namespace rootcast {

namespace {

using detail::fold_potential;
using detail::with_kernel;

// Min-heap of (value, vertex) with 4 children per node: one 64-byte line
// holds a whole sibling group of 16-byte entries, which matters once the
// frontier outgrows the cache on million-vertex trees.  Ties pop the
// smallest vertex id.
template <class V>
class quad_heap {
 public:
  explicit quad_heap(size_t cap) { data_.reserve(cap); }
  bool empty() const { return data_.empty(); }

  void push(V val, int id) {
    data_.emplace_back(std::move(val), id);
    size_t i = data_.size() - 1;
    while (i > 0) {
      const size_t up = (i - 1) / 4;
      if (!lt(data_[i], data_[up])) break;
      std::swap(data_[i], data_[up]);
      i = up;
    }
  }

  std::pair<V, int> pop() {
    std::pair<V, int> out = std::move(data_.front());
    data_.front() = std::move(data_.back());
    data_.pop_back();
    size_t i = 0;
    const size_t size = data_.size();
    for (;;) {
      const size_t first = 4 * i + 1;
      if (first >= size) break;
      size_t best = first;
      const size_t stop = std::min(first + 4, size);
      for (size_t c = first + 1; c < stop; ++c)
        if (lt(data_[c], data_[best])) best = c;
      if (!lt(data_[best], data_[i])) break;
      std::swap(data_[i], data_[best]);
      i = best;
    }
    return out;
  }

 private:
  static bool lt(const std::pair<V, int>& a, const std::pair<V, int>& b) {
    if (a.first < b.first) return true;
    if (b.first < a.first) return false;
    return a.second < b.second;
  }
  std::vector<std::pair<V, int>> data_;
};

// One pass of Algorithm 1.  Returns the last unprocessed vertex and
// whole_root = f(root, T); when `hanging` is given, records
// hanging[v] = f(v, T_{v,parent}) for every discarded v.
// pending[v] counts v's unprocessed neighbors, -1 once v is discarded.
template <class K>
int algo1_core(const K& k, const Tree& t, std::vector<typename K::value_type>* hanging,
               typename K::value_type& whole_root) {
  using V = typename K::value_type;
  // Accumulator and open-neighbor count share a slot so the random access to
  // a parent touches one location; pending -1 marks a discarded vertex.
  struct Slot {
    V acc;
    int pending;
  };
  const int n = t.n();
  quad_heap<V> q(static_cast<size_t>(n));
  std::vector<Slot> slot(static_cast<size_t>(n), Slot{k.identity, 0});
  if (hanging) hanging->assign(static_cast<size_t>(n), k.identity);

  for (int v = 0; v < n; ++v) {
    slot[v].pending = t.degree(v);
    if (slot[v].pending == 1) q.push(k.identity, v);
  }
  int last = 0;
  for (int pulls = 0; pulls < n - 1; ++pulls) {
    check_internal(!q.empty(), "queue drained before n-1 pulls");
    auto [val, v] = q.pop();
    check_internal(slot[v].pending == 1, "pulled vertex lacks a single open neighbor");
    slot[v].pending = -1;
    int parent = -1;
    for (int u : t.neighbors(v))
      if (slot[u].pending >= 0) {
        parent = u;
        break;
      }
    check_internal(parent >= 0, "no open neighbor for pulled vertex");
    auto lv = k.leaf(val);
    k.check(lv);
    slot[parent].acc = k.op(slot[parent].acc, lv);
    if (--slot[parent].pending == 1) q.push(slot[parent].acc, parent);
    if (hanging) (*hanging)[v] = std::move(val);
    last = parent;
  }
  if (n == 1) last = 0;
  k.check(slot[last].acc);
  whole_root = std::move(slot[last].acc);
  return last;
}

// f(anchor, side of `anchor` when the edge anchor-excluded is cut), computed
// from scratch with one bounded BFS — the honest per-edge cost of the naive
// baseline.
template <class K>
typename K::value_type fold_hanging(const K& k, const Tree& t, int anchor, int excluded) {
  using V = typename K::value_type;
  const int n = t.n();
  std::vector<int> parent(static_cast<size_t>(n), -2), order;
  order.reserve(static_cast<size_t>(n));
  parent[anchor] = -1;
  order.push_back(anchor);
  for (size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (int u : t.neighbors(v))
      if (parent[u] == -2 && !(v == anchor && u == excluded)) {
        parent[u] = v;
        order.push_back(u);
      }
  }
  std::vector<V> acc(static_cast<size_t>(n), k.identity);
  for (size_t i = order.size() - 1; i >= 1; --i) {
    const int v = order[i];
    acc[parent[v]] = k.op(acc[parent[v]], k.leaf(acc[v]));
  }
  return std::move(acc[anchor]);
}

void require_symmetric(const ConstructiveSpec& spec) {
  if (!spec.symmetric())
    fail(errc::not_symmetric,
         "spec '" + spec.name() + "' is not symmetric; Find-a-root would not be correct");
}

RootResult checked_result(std::vector<int> roots, std::vector<ScoreKey> values,
                          RootResult::Method method, const Tree& t) {
  check_internal(!roots.empty() && std::is_sorted(roots.begin(), roots.end()), "root set order");
  if (roots.size() > 2 || (roots.size() == 2 && !t.has_edge(roots[0], roots[1]))) {
    std::string ids;
    for (int r : roots) ids += (ids.empty() ? "" : ",") + std::to_string(r);
    fail(errc::not_a_root, "winning set {" + ids + "} is not one vertex or two adjacent vertices");
  }
  RootResult res;
  res.roots = std::move(roots);
  res.values = std::move(values);
  res.method = method;
  return res;
}

template <class K>
RootResult run_find(const K& k, const Tree& t, bool both) {
  using V = typename K::value_type;
  if (t.n() == 1)
    return checked_result({0}, {K::key(k.identity)}, RootResult::Method::algorithm1, t);
  std::vector<V> hanging;
  V whole_root = k.identity;
  const int r = algo1_core(k, t, both ? &hanging : nullptr, whole_root);
  std::vector<int> roots{r};
  std::vector<ScoreKey> values{K::key(whole_root)};
  if (both) {
    // Prefix/suffix folds over r's children let us form f(r, T_{r,w}) for
    // each neighbor w in O(deg r) and test the exact-tie condition.
    const auto& nb = t.neighbors(r);
    const size_t d = nb.size();
    std::vector<V> pre(d + 1, k.identity), suf(d + 1, k.identity);
    for (size_t i = 0; i < d; ++i) pre[i + 1] = k.op(pre[i], k.leaf(hanging[nb[i]]));
    for (size_t i = d; i-- > 0;) suf[i] = k.op(suf[i + 1], k.leaf(hanging[nb[i]]));
    int ties = 0;
    for (size_t i = 0; i < d; ++i)
      if (K::key(hanging[nb[i]]) == K::key(k.op(pre[i], suf[i + 1]))) ++ties;
    check_internal(ties <= 1, "more than one tied second root");
    for (size_t i = 0; i < d && ties == 1; ++i) {
      const int w = nb[i];
      V rest = k.op(pre[i], suf[i + 1]);  // f(r, T_{r,w})
      if (K::key(hanging[w]) == K::key(rest)) {
        // f(w, T) = (fold of w's other children) op leaf(f(r, T_{r,w})).
        V acc_w = k.identity;
        for (int u : t.neighbors(w))
          if (u != r) acc_w = k.op(acc_w, k.leaf(hanging[u]));
        V whole_w = k.op(std::move(acc_w), k.leaf(rest));
        roots.push_back(w);
        values.push_back(K::key(std::move(whole_w)));
        break;
      }
    }
    if (roots.size() == 2 && roots[0] > roots[1]) {
      std::swap(roots[0], roots[1]);
      std::swap(values[0], values[1]);
    }
  }
  return checked_result(std::move(roots), std::move(values), RootResult::Method::algorithm1, t);
}

}  // namespace

RootResult find_root(const Tree& t, const ConstructiveSpec& spec, NumericMode mode) {
  require_symmetric(spec);
  return with_kernel(spec, mode, [&](const auto& k) { return run_find(k, t, false); });
}

RootResult find_roots_both(const Tree& t, const ConstructiveSpec& spec, NumericMode mode) {
  require_symmetric(spec);
  return with_kernel(spec, mode, [&](const auto& k) { return run_find(k, t, true); });
}

RootResult naive_root(const Tree& t, const Measure& m) {
  if (t.n() == 1) {
    // The lone vertex tops any ranking.  Measures that refuse to score it
    // (SingleVertex) still have it as the root; the value slot stays empty.
    std::vector<ScoreKey> values;
    try {
      values.push_back(score_one(m, t, 0));
    } catch (const Error& e) {
      if (e.code() != errc::single_vertex) throw;
    }
    return checked_result({0}, std::move(values), RootResult::Method::naive, t);
  }
  const auto scores = score_all(m, t);
  std::vector<int> best = max_set(scores);
  std::vector<ScoreKey> values;
  values.reserve(best.size());
  for (int v : best) values.push_back(scores[v]);
  return checked_result(std::move(best), std::move(values), RootResult::Method::naive, t);
}

RootResult naive_root(const Tree& t, const ConstructiveSpec& spec, NumericMode mode) {
  return with_kernel(spec, mode, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    const int n = t.n();
    std::vector<char> beaten(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : t.edges()) {
      const auto fu = fold_hanging(k, t, u, v);
      const auto fv = fold_hanging(k, t, v, u);
      const int cmp = K::key(fu).compare(K::key(fv));
      if (cmp < 0) beaten[u] = 1;
      if (cmp > 0) beaten[v] = 1;
    }
    std::vector<int> winners;
    for (int v = 0; v < n; ++v)
      if (!beaten[v]) winners.push_back(v);
    std::vector<ScoreKey> values;
    values.reserve(winners.size());
    for (int v : winners) values.push_back(K::key(fold_potential(k, t, v)));
    return checked_result(std::move(winners), std::move(values), RootResult::Method::naive, t);
  });
}

namespace {

template <class F>
double median_ms_of(int samples, F&& timed_run) {
  std::vector<double> ms;
  ms.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) ms.push_back(timed_run(i));
  std::sort(ms.begin(), ms.end());
  return ms[ms.size() / 2];
}

double fit_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double m = static_cast<double>(pts.size());
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

BenchReport bench_scaling(const std::vector<int>& sizes, const ConstructiveSpec& spec,
                          std::uint64_t seed, NumericMode mode, int repeats, int naive_cap) {
  require_symmetric(spec);
  repeats = std::max(repeats, 5);
  BenchReport rep;
  std::vector<std::pair<double, double>> algo_pts, naive_pts;
  for (size_t si = 0; si < sizes.size(); ++si) {
    const int n = sizes[si];
    if (n < 2) fail(errc::too_large, "benchmark sizes must be at least 2");
    // One deterministic tree stream per (seed, size index).
    std::uint64_t state = seed + 0x9e3779b97f4a7c15ULL * (si + 1);
    RandomTreeSource src(splitmix64(state));
    std::vector<Tree> trees;
    trees.reserve(static_cast<size_t>(repeats));
    for (int i = 0; i < repeats; ++i) trees.push_back(src.tree(n));

    using clock = std::chrono::steady_clock;
    auto time_once = [&](auto&& fn) {
      // Repeat tiny runs until the clock sees at least ~2ms, then average.
      int reps = 1;
      for (;;) {
        const auto t0 = clock::now();
        for (int ri = 0; ri < reps; ++ri) fn();
        const double ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
        if (ms >= 2.0 || reps >= 1 << 20) return ms / reps;
        reps *= 4;
      }
    };

    BenchRow row;
    row.n = n;
    row.algo1_ms = median_ms_of(repeats, [&](int i) {
      return time_once([&] { find_root(trees[static_cast<size_t>(i)], spec, mode); });
    });
    algo_pts.emplace_back(std::log(static_cast<double>(n)), std::log(row.algo1_ms));
    if (n <= naive_cap) {
      row.naive_ms = median_ms_of(repeats, [&](int i) {
        return time_once([&] { naive_root(trees[static_cast<size_t>(i)], spec, mode); });
      });
      naive_pts.emplace_back(std::log(static_cast<double>(n)), std::log(row.naive_ms));
    }
    rep.rows.push_back(row);
  }
  rep.algo1_slope = fit_slope(algo_pts);
  rep.naive_slope = fit_slope(naive_pts);
  return rep;
}

}  // namespace rootcast
