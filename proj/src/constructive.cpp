#include "rootcast/constructive.hpp"

#include "constructive_kernel.hpp"
#include "rootcast/errors.hpp"
#include "rootcast/prufer.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

namespace rootcast {

namespace {

// Exact textual form that parse_rational round-trips: "n" or "n/d".
std::string rat_token(const Rat& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r);
  if (boost::multiprecision::denominator(r) != 1) out << "/" << boost::multiprecision::denominator(r);
  return out.str();
}

}  // namespace

ConstructiveSpec ConstructiveSpec::builtin(const std::string& name) {
  ConstructiveSpec s;
  if (name == "degree") s.kind = Kind::degree;
  else if (name == "closeness") s.kind = Kind::closeness;
  else if (name == "eccentricity") s.kind = Kind::eccentricity;
  else if (name == "all-subgraphs") s.kind = Kind::all_subgraphs;
  else fail(errc::unknown_name, "no built-in constructive spec named '" + name + "'");
  return s;
}

ConstructiveSpec ConstructiveSpec::abc(const Rat& a, const Rat& b, const Rat& c) {
  if (!(a >= 1 && b > 0 && c > 0))
    fail(errc::params_out_of_region,
         "abc family needs a >= 1, b > 0, c > 0; got a=" + rat_token(a) + ", b=" + rat_token(b) +
             ", c=" + rat_token(c));
  ConstructiveSpec s;
  s.kind = Kind::family_abc;
  s.a = a;
  s.b = b;
  s.c = c;
  return s;
}

ConstructiveSpec ConstructiveSpec::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return builtin(text);
  const std::string head = text.substr(0, colon);
  const std::string params = text.substr(colon + 1);
  if (head != "abc") fail(errc::unknown_name, "only the abc family takes parameters; got '" + head + "'");
  bool have_a = false, have_b = false, have_c = false;
  Rat a, b, c;
  std::stringstream ss(params);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) fail(errc::bad_input, "expected key=value in abc parameters, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const Rat val = parse_rational(item.substr(eq + 1));
    if (key == "a" && !have_a) { a = val; have_a = true; }
    else if (key == "b" && !have_b) { b = val; have_b = true; }
    else if (key == "c" && !have_c) { c = val; have_c = true; }
    else fail(errc::bad_input, "unexpected or repeated abc parameter '" + key + "'");
  }
  if (!(have_a && have_b && have_c)) fail(errc::bad_input, "abc family needs all of a=, b=, c=");
  return abc(a, b, c);
}

std::string ConstructiveSpec::name() const {
  switch (kind) {
    case Kind::degree: return "degree";
    case Kind::closeness: return "closeness";
    case Kind::eccentricity: return "eccentricity";
    case Kind::all_subgraphs: return "all-subgraphs";
    case Kind::family_abc:
      return "abc:a=" + rat_token(a) + ",b=" + rat_token(b) + ",c=" + rat_token(c);
  }
  return "?";
}

MonoidSpec ConstructiveSpec::monoid() const {
  MonoidSpec m;
  switch (kind) {
    case Kind::degree:
      m.op = [](double x, double y) { return x + y; };
      m.identity = 0.0;
      m.carrier_min = 0.0;
      m.carrier = "[0, inf)";
      break;
    case Kind::closeness:
      m.op = [](double x, double y) { return x + y - 1.0; };
      m.identity = 1.0;
      m.carrier_min = 1.0;
      m.carrier = "[1, inf)";
      break;
    case Kind::eccentricity:
      m.op = [](double x, double y) { return x > y ? x : y; };
      m.identity = 0.0;
      m.carrier_min = 0.0;
      m.carrier = "[0, inf)";
      break;
    case Kind::all_subgraphs:
      m.op = [](double x, double y) { return x * y; };
      m.identity = 1.0;
      m.carrier_min = 1.0;
      m.carrier = "[1, inf)";
      break;
    case Kind::family_abc: {
      const double cv = static_cast<double>(c);
      m.op = [cv](double x, double y) { return x * y / cv; };
      m.identity = cv;
      m.carrier_min = cv;
      m.carrier = "[" + rat_token(c) + ", inf)";
      break;
    }
  }
  return m;
}

LeafFn ConstructiveSpec::leaf() const {
  LeafFn l;
  switch (kind) {
    case Kind::degree:
      l.fn = [](double) { return 1.0; };
      l.name = "1";
      break;
    case Kind::family_abc: {
      const double av = static_cast<double>(a), bv = static_cast<double>(b);
      l.fn = [av, bv](double x) { return av * x + bv; };
      l.name = rat_token(a) + "*x+" + rat_token(b);
      break;
    }
    default:
      l.fn = [](double x) { return x + 1.0; };
      l.name = "x+1";
      break;
  }
  return l;
}

ScoreKey eval_constructive(const ConstructiveSpec& spec, const Tree& t, int v, NumericMode mode) {
  if (v < 0 || v >= t.n()) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  return detail::with_kernel(spec, mode, [&](const auto& k) {
    using K = std::decay_t<decltype(k)>;
    return K::key(detail::fold_potential(k, t, v));
  });
}

namespace {

template <class K>
void lemma_check_exact(const K& k, int range_n, LemmaReport& rep) {
  using V = typename K::value_type;
  std::set<V> range;
  range.insert(k.identity);
  for (int n = 2; n <= range_n; ++n) {
    TreeEnumerator en(n);
    Tree t = Tree::single();
    while (en.next(t))
      for (int v = 0; v < n; ++v) range.insert(detail::fold_potential(k, t, v));
  }
  const std::vector<V> xs(range.begin(), range.end());

  for (const V& x : xs) {
    V lx = k.leaf(x);
    if (!(x < lx)) {
      rep.leaf_increasing = false;
      rep.witness += "condition (1): x=" + K::render(x) + ", leaf(x)=" + K::render(lx) + "; ";
      break;
    }
  }
  // Monotonicity / translation-invariance over consecutive sorted values
  // extends to all pairs by transitivity.
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (k.leaf(xs[i + 1]) < k.leaf(xs[i])) {
      rep.leaf_monotonic = false;
      rep.witness += "condition (2): x=" + K::render(xs[i]) + ", y=" + K::render(xs[i + 1]) + "; ";
      break;
    }
  }
  bool ordered = !(xs.front() < k.identity);
  std::string why = ordered ? "" : "identity above value " + K::render(xs.front());
  for (size_t i = 0; ordered && i + 1 < xs.size(); ++i)
    for (const V& z : xs) {
      if (k.op(xs[i + 1], z) < k.op(xs[i], z)) {
        ordered = false;
        why = "x=" + K::render(xs[i]) + ", y=" + K::render(xs[i + 1]) + ", z=" + K::render(z);
        break;
      }
    }
  if (!ordered) {
    rep.positively_ordered = false;
    rep.witness += "condition (3): " + why + "; ";
  }
}

void lemma_check_float(const ConstructiveSpec& spec, int sample_budget, std::uint64_t seed,
                       LemmaReport& rep) {
  const MonoidSpec m = spec.monoid();
  const LeafFn l = spec.leaf();
  std::uint64_t state = seed;
  auto draw = [&]() {
    // Carrier points spread over several orders of magnitude.
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    return m.carrier_min + std::expm1(u * 10.0);
  };
  auto slack = [](double x, double y) { return 1e-9 * std::max({1.0, std::abs(x), std::abs(y)}); };
  for (int i = 0; i < sample_budget; ++i) {
    const double x = draw(), y = draw(), z = draw();
    const double lo = std::min(x, y), hi = std::max(x, y);
    if (rep.leaf_increasing && l.fn(x) <= x - slack(x, l.fn(x))) {
      rep.leaf_increasing = false;
      rep.witness += "condition (1) at float x=" + format_double(x) + "; ";
    }
    if (rep.leaf_monotonic && l.fn(hi) < l.fn(lo) - slack(l.fn(lo), l.fn(hi))) {
      rep.leaf_monotonic = false;
      rep.witness += "condition (2) at float x=" + format_double(lo) + ", y=" + format_double(hi) + "; ";
    }
    if (rep.positively_ordered &&
        (m.op(hi, z) < m.op(lo, z) - slack(m.op(lo, z), m.op(hi, z)) ||
         x < m.identity - slack(x, m.identity))) {
      rep.positively_ordered = false;
      rep.witness += "condition (3) at float x=" + format_double(lo) + ", y=" + format_double(hi) +
                     ", z=" + format_double(z) + "; ";
    }
  }
}

}  // namespace

LemmaReport check_lemma_conditions(const ConstructiveSpec& spec, int sample_budget,
                                   std::uint64_t seed, int range_n) {
  LemmaReport rep;
  detail::with_kernel(spec, NumericMode::exact, [&](const auto& k) {
    lemma_check_exact(k, range_n, rep);
    return 0;
  });
  lemma_check_float(spec, sample_budget, seed, rep);
  if (!rep.witness.empty() && rep.witness.size() >= 2) rep.witness.resize(rep.witness.size() - 2);
  return rep;
}

Rat abc_star_value(const Rat& a, const Rat& b, const Rat& c, int n) {
  // (a c + b)^n / c^(n-1); the n = 0 star is a single vertex worth c.
  Rat v = c;
  const Rat step = (a * c + b) / c;
  for (int i = 0; i < n; ++i) v *= step;
  return v;
}

Rat abc_path_value(const Rat& a, const Rat& b, const Rat& c, int m) {
  // a^m c + sum_{i<m} a^i b, folded as m applications of x -> a*x + b.
  Rat v = c;
  for (int i = 0; i < m; ++i) v = a * v + b;
  return v;
}

}  // namespace rootcast
