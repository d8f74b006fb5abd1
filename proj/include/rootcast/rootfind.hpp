#pragma once

#include "rootcast/constructive.hpp"
#include "rootcast/measures.hpp"
#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"

#include <cstdint>
#include <vector>

namespace rootcast {

// Root(s) of a tree under a measure or a symmetric constructive potential.
struct RootResult {
  enum class Method { algorithm1, naive };

  std::vector<int> roots;        // ascending; size 1, or 2 adjacent vertices
  std::vector<ScoreKey> values;  // f(root, T) / C(root, T), parallel to roots;
                                 // empty for measures undefined on the
                                 // one-vertex tree (closeness and friends)
  Method method = Method::algorithm1;
};

// Find-a-root: leaves enter a min-priority queue with the identity value;
// repeatedly discard the minimum, folding its leaf-mapped value into its one
// unprocessed neighbor, which is enqueued once it too has a single
// unprocessed neighbor left.  The last vertex standing is a root.
// O(n log n); ties in the queue break toward the smaller vertex id.
// Refuses non-symmetric specs (NotSymmetric), since correctness rests on
// hanging subtrees always carrying strictly smaller potential.
RootResult find_root(const Tree& t, const ConstructiveSpec& spec,
                     NumericMode mode = NumericMode::exact);

// Same, then adds the second root when some neighbor w of the found root r
// ties exactly: f(w, T_{w,r}) = f(r, T_{r,w}).  At most one such neighbor
// can exist for a symmetric spec.
RootResult find_roots_both(const Tree& t, const ConstructiveSpec& spec,
                           NumericMode mode = NumericMode::exact);

// Quadratic baselines.  For a measure: full score table, exact argmax set.
// For a spec: the local-winner set, i.e. vertices v with
// f(u, T_{u,v}) <= f(v, T_{v,u}) for every neighbor u, each side recomputed
// from scratch per edge.  Throws NotARoot if the winning set is not one
// vertex or two adjacent vertices (that is the interesting signal when
// sweeping non-rooting measures).
RootResult naive_root(const Tree& t, const Measure& m);
RootResult naive_root(const Tree& t, const ConstructiveSpec& spec,
                      NumericMode mode = NumericMode::exact);

// Wall-clock scaling of find_root vs the naive baseline on uniform random
// trees.  Per size: median over `repeats` fresh trees; the tree stream is a
// pure function of (seed, sizes).  naive runs only for n <= naive_cap
// (naive_ms = -1 otherwise).  Slopes are least-squares fits of log(time)
// against log(n); a slope needs two or more measured sizes, else NaN.
struct BenchRow {
  int n = 0;
  double algo1_ms = 0.0;
  double naive_ms = -1.0;
};
struct BenchReport {
  std::vector<BenchRow> rows;
  double algo1_slope = 0.0;
  double naive_slope = 0.0;
};
BenchReport bench_scaling(const std::vector<int>& sizes, const ConstructiveSpec& spec,
                          std::uint64_t seed, NumericMode mode = NumericMode::log_space,
                          int repeats = 5, int naive_cap = 20000);

}  // namespace rootcast
