#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "rootcast/numeric.hpp"

namespace rootcast {

// Relative tolerance for float score ties: |a-b| <= eps * max(1,|a|,|b|).
inline constexpr double kFloatTieEps = 1e-9;

// One comparable centrality/potential value.  Keys are oriented so that a
// larger key always means "wins the comparison"; measures that prefer small
// raw quantities (closeness, eccentricity) store the negated quantity.
// Exact kinds compare exactly; Float uses the relative tie tolerance.
class ScoreKey {
 public:
  ScoreKey() : v_(std::int64_t{0}) {}
  static ScoreKey exact(std::int64_t x) { return ScoreKey(x); }
  static ScoreKey big(BigInt x) { return ScoreKey(std::move(x)); }
  static ScoreKey rational(Rat x) { return ScoreKey(std::move(x)); }
  static ScoreKey real(double x) { return ScoreKey(x); }

  bool is_exact() const { return v_.index() != 3; }
  bool is_float() const { return v_.index() == 3; }

  // -1, 0, +1.  Both keys must hold the same kind.
  int compare(const ScoreKey& other) const;

  bool operator==(const ScoreKey& o) const { return compare(o) == 0; }
  bool operator<(const ScoreKey& o) const { return compare(o) < 0; }
  bool operator<=(const ScoreKey& o) const { return compare(o) <= 0; }

  // Value rendering: exact integers verbatim, rationals/floats with 12
  // significant digits.
  std::string to_string() const;

  double as_double() const;

  // log2 of a positive key; safe for big integers far past double range.
  double as_log2() const;

 private:
  explicit ScoreKey(std::int64_t x) : v_(x) {}
  explicit ScoreKey(BigInt x) : v_(std::move(x)) {}
  explicit ScoreKey(Rat x) : v_(std::move(x)) {}
  explicit ScoreKey(double x) : v_(x) {}

  std::variant<std::int64_t, BigInt, Rat, double> v_;
};

// Formats a double with 12 significant digits (the CLI-wide float format).
std::string format_double(double x);

// True when floats a and b tie under the relative tolerance.
bool float_tie(double a, double b);

// Fragility watch.  Float comparisons whose relative margin is positive but
// within 10x the tie tolerance are recorded here, so sweeps can flag verdicts
// that lean on borderline arithmetic.  Thread-local: each worker watches its
// own comparisons.
void fragile_reset();
bool fragile_seen();

}  // namespace rootcast
