#pragma once

// Value-type kernels for constructive potentials.  Each kernel bundles the
// monoid operation, leaf function, identity, and carrier check for one
// numeric representation, so the tree fold and the root-finding loop can be
// written once as templates.  Internal header; not installed.

#include "rootcast/constructive.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/numeric.hpp"
#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace rootcast {
namespace detail {

using Kind = ConstructiveSpec::Kind;

// Big-integer kernel: the four built-ins all take nonnegative integer values.
struct exact_int_kernel {
  using value_type = BigInt;
  Kind kind;
  BigInt identity;
  int carrier_min;

  explicit exact_int_kernel(const ConstructiveSpec& s) : kind(s.kind) {
    check_internal(kind != Kind::family_abc, "abc spec routed to integer kernel");
    carrier_min = (kind == Kind::closeness || kind == Kind::all_subgraphs) ? 1 : 0;
    identity = carrier_min;
  }

  BigInt op(const BigInt& x, const BigInt& y) const {
    switch (kind) {
      case Kind::degree: return x + y;
      case Kind::closeness: return x + y - 1;
      case Kind::eccentricity: return x > y ? x : y;
      default: return x * y;  // all_subgraphs
    }
  }
  BigInt leaf(const BigInt& x) const { return kind == Kind::degree ? BigInt(1) : x + 1; }
  void check(const BigInt& x) const {
    if (x < carrier_min) fail(errc::carrier_violation, "value " + x.str() + " below carrier bound");
  }
  static ScoreKey key(BigInt v) { return ScoreKey::big(std::move(v)); }
  static std::string render(const BigInt& v) { return v.str(); }
};

// Exact-rational kernel for the abc family: x op y = x*y/c, leaf(x) = a*x+b.
struct exact_rat_kernel {
  using value_type = Rat;
  Rat a, b, c;
  Rat identity;

  explicit exact_rat_kernel(const ConstructiveSpec& s) : a(s.a), b(s.b), c(s.c), identity(s.c) {
    check_internal(s.kind == Kind::family_abc, "non-abc spec routed to rational kernel");
  }

  Rat op(const Rat& x, const Rat& y) const { return x * y / c; }
  Rat leaf(const Rat& x) const { return a * x + b; }
  void check(const Rat& x) const {
    if (x < c) fail(errc::carrier_violation, "value " + rat_to_string(x) + " below carrier bound " + rat_to_string(c));
  }
  static ScoreKey key(Rat v) { return ScoreKey::rational(std::move(v)); }
  static std::string render(const Rat& v) { return rat_to_string(v); }
};

inline double logadd(double x, double y) {
  // log(e^x + e^y), stable for widely separated magnitudes.
  if (x < y) std::swap(x, y);
  return x + std::log1p(std::exp(y - x));
}

// Double kernel; carries plain values, or ln f when logspace is set
// (product monoids only: multiplication turns into addition of logs).
struct float_kernel {
  using value_type = double;
  Kind kind;
  bool logspace;
  double a, b, c;     // abc parameters (1,1,1 for built-ins)
  double la, lb, lc;  // their logs, used in logspace mode
  double identity;
  double carrier_min;

  float_kernel(const ConstructiveSpec& s, bool log_mode) : kind(s.kind), logspace(log_mode) {
    a = static_cast<double>(s.a);
    b = static_cast<double>(s.b);
    c = static_cast<double>(s.c);
    if (kind != Kind::family_abc) a = b = c = 1.0;
    la = std::log(a);
    lb = std::log(b);
    lc = std::log(c);
    if (logspace) {
      check_internal(s.product_monoid(), "log-space kernel needs a product monoid");
      identity = kind == Kind::family_abc ? lc : 0.0;
      carrier_min = identity;
    } else {
      switch (kind) {
        case Kind::degree: identity = 0.0; break;
        case Kind::closeness: identity = 1.0; break;
        case Kind::eccentricity: identity = 0.0; break;
        case Kind::all_subgraphs: identity = 1.0; break;
        case Kind::family_abc: identity = c; break;
      }
      carrier_min = identity;
    }
  }

  double op(double x, double y) const {
    if (logspace) return x + y - (kind == Kind::family_abc ? lc : 0.0);
    switch (kind) {
      case Kind::degree: return x + y;
      case Kind::closeness: return x + y - 1.0;
      case Kind::eccentricity: return x > y ? x : y;
      case Kind::all_subgraphs: return x * y;
      case Kind::family_abc: return x * y / c;
    }
    return 0.0;
  }
  double leaf(double x) const {
    if (logspace) {
      // ln(a*e^x + b); for the built-ins a = b = 1, i.e. ln(e^x + 1).
      return logadd(la + x, lb);
    }
    switch (kind) {
      case Kind::degree: return 1.0;
      case Kind::family_abc: return a * x + b;
      default: return x + 1.0;
    }
  }
  void check(double x) const {
    if (!std::isfinite(x)) fail(errc::carrier_violation, "value left double range: " + format_double(x));
    if (!logspace && x < carrier_min - 1e-9 * std::max(1.0, std::abs(carrier_min)))
      fail(errc::carrier_violation, "value " + format_double(x) + " below carrier bound");
  }
  static ScoreKey key(double v) { return ScoreKey::real(v); }
  static std::string render(double v) { return format_double(v); }
};

// One bottom-up pass over T rooted at `root`; returns f(root, T).
// Children carry identity until folded, so a leaf contributes leaf(identity).
template <class K>
typename K::value_type fold_potential(const K& k, const Tree& t, int root) {
  std::vector<int> parent, order;
  rooted_orientation(t, root, parent, order);
  std::vector<typename K::value_type> acc(static_cast<size_t>(t.n()), k.identity);
  for (int i = t.n() - 1; i >= 1; --i) {
    const int v = order[i];
    auto lv = k.leaf(acc[v]);
    k.check(lv);
    acc[parent[v]] = k.op(acc[parent[v]], std::move(lv));
  }
  k.check(acc[root]);
  return std::move(acc[root]);
}

// Calls f with the kernel matching (spec, mode); f must be callable with all
// three kernel types and return the same type for each.
template <class F>
decltype(auto) with_kernel(const ConstructiveSpec& s, NumericMode m, F&& f) {
  switch (m) {
    case NumericMode::exact:
      if (s.kind == Kind::family_abc) return f(exact_rat_kernel(s));
      return f(exact_int_kernel(s));
    case NumericMode::floating:
      return f(float_kernel(s, false));
    case NumericMode::log_space:
      if (!s.product_monoid())
        fail(errc::bad_input, "log-space mode requires a product monoid (all-subgraphs or abc)");
      return f(float_kernel(s, true));
  }
  fail(errc::bad_input, "unknown numeric mode");
}

}  // namespace detail
}  // namespace rootcast
