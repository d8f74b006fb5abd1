#include "rootcast/score.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "rootcast/errors.hpp"

namespace rootcast {

namespace {
thread_local bool g_fragile = false;
}  // namespace

void fragile_reset() { g_fragile = false; }
bool fragile_seen() { return g_fragile; }

bool float_tie(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kFloatTieEps * scale;
}

int ScoreKey::compare(const ScoreKey& other) const {
  check_internal(v_.index() == other.v_.index(), "comparing score keys of different kinds");
  switch (v_.index()) {
    case 0: {
      auto a = std::get<0>(v_), b = std::get<0>(other.v_);
      return a < b ? -1 : a > b ? 1 : 0;
    }
    case 1: {
      const auto &a = std::get<1>(v_), &b = std::get<1>(other.v_);
      return a < b ? -1 : a > b ? 1 : 0;
    }
    case 2: {
      const auto &a = std::get<2>(v_), &b = std::get<2>(other.v_);
      return a < b ? -1 : a > b ? 1 : 0;
    }
    default: {
      double a = std::get<3>(v_), b = std::get<3>(other.v_);
      double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
      double rel = std::fabs(a - b) / scale;
      if (rel > 0 && rel <= 10 * kFloatTieEps) g_fragile = true;
      if (rel <= kFloatTieEps) return 0;
      return a < b ? -1 : 1;
    }
  }
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string ScoreKey::to_string() const {
  switch (v_.index()) {
    case 0: return std::to_string(std::get<0>(v_));
    case 1: return std::get<1>(v_).str();
    case 2: return rat_to_string(std::get<2>(v_));
    default: return format_double(std::get<3>(v_));
  }
}

double ScoreKey::as_double() const {
  switch (v_.index()) {
    case 0: return static_cast<double>(std::get<0>(v_));
    case 1: return std::get<1>(v_).convert_to<double>();
    case 2: return std::get<2>(v_).convert_to<double>();
    default: return std::get<3>(v_);
  }
}

double ScoreKey::as_log2() const {
  if (v_.index() == 1) return log2_bigint(std::get<1>(v_));
  return std::log2(as_double());
}

}  // namespace rootcast
