#pragma once

#include "rootcast/numeric.hpp"
#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace rootcast {

// How a constructive potential is evaluated numerically.
//   exact      - big integers for the built-ins, exact rationals for abc.
//   floating   - plain doubles (fast, approximate).
//   log_space  - doubles carrying ln f; only for product monoids, where the
//                operation becomes addition of logs.  Intended for timing
//                runs where exact all-subgraphs counts would be astronomical.
enum class NumericMode { exact, floating, log_space };

// Float view of a commutative monoid (M, op, identity) over a real interval
// [carrier_min, inf).  Used by the sampled law checks and by float mode.
struct MonoidSpec {
  std::function<double(double, double)> op;
  double identity = 0.0;
  double carrier_min = 0.0;
  std::string carrier;  // human-readable, e.g. "[1, inf)"
};

// The per-child leaf function applied before folding into the monoid.
struct LeafFn {
  std::function<double(double)> fn;
  std::string name;  // e.g. "x+1" or "2x+1"
};

// A bottom-up potential: f(v, single vertex) = identity, and for children
// u_1..u_k of v, f(v,T) = leaf(f(u_1)) op ... op leaf(f(u_k)).
struct ConstructiveSpec {
  enum class Kind { degree, closeness, eccentricity, all_subgraphs, family_abc };

  Kind kind = Kind::all_subgraphs;
  Rat a = 1, b = 1, c = 1;  // family_abc parameters; unused otherwise

  // Named built-ins: "degree", "closeness", "eccentricity", "all-subgraphs".
  static ConstructiveSpec builtin(const std::string& name);
  // x op y = x*y/c, leaf(x) = a*x + b; requires a >= 1, b > 0, c > 0.
  static ConstructiveSpec abc(const Rat& a, const Rat& b, const Rat& c);
  // Built-in name or "abc:a=...,b=...,c=..." (values rational or decimal).
  static ConstructiveSpec parse(const std::string& text);
  std::string name() const;  // canonical; round-trips through parse

  // Whether f(u, T_{u,v}) < f(v, T) holds for all adjacent u,v (the rooting
  // gate for find_root).  False only for degree, whose leaf function is
  // constant.
  bool symmetric() const { return kind != Kind::degree; }
  // Whether the monoid is multiplication-flavored, i.e. log_space applies.
  bool product_monoid() const {
    return kind == Kind::all_subgraphs || kind == Kind::family_abc;
  }

  bool operator==(const ConstructiveSpec& o) const {
    return kind == o.kind && a == o.a && b == o.b && c == o.c;
  }

  MonoidSpec monoid() const;
  LeafFn leaf() const;
};

// f(v,T) computed in one iterative post-order pass from the leaves.
// Exact mode returns a big-integer key for built-ins and a rational key for
// family_abc; floating returns the value as a double; log_space returns ln f.
// Throws CarrierViolation if an intermediate value leaves the carrier.
ScoreKey eval_constructive(const ConstructiveSpec& spec, const Tree& t, int v,
                           NumericMode mode = NumericMode::exact);

// Per-condition verdicts for the sufficient rooting conditions:
//   (1) x < leaf(x);  (2) leaf is monotonic (non-decreasing);
//   (3) positively ordered: identity <= x, and x <= y implies
//       x op z <= y op z.
// Checked exactly on every value the potential attains on trees with at most
// `range_n` vertices, then on `sample_budget` random float carrier points
// (tolerance-free exact checks first; float checks use a 1e-9 margin).
struct LemmaReport {
  bool leaf_increasing = true;
  bool leaf_monotonic = true;
  bool positively_ordered = true;
  std::string witness;  // first failing value(s), empty if all pass
  bool all() const { return leaf_increasing && leaf_monotonic && positively_ordered; }
};

LemmaReport check_lemma_conditions(const ConstructiveSpec& spec, int sample_budget = 256,
                                   std::uint64_t seed = 1, int range_n = 7);

// Closed forms for the abc family (exact rationals, in-region parameters):
// value at the center of a star with n leaves, and at the endpoint of a path
// with m edges.
Rat abc_star_value(const Rat& a, const Rat& b, const Rat& c, int n);
Rat abc_path_value(const Rat& a, const Rat& b, const Rat& c, int m);

}  // namespace rootcast
