#pragma once

#include "rootcast/measures.hpp"
#include "rootcast/potentials.hpp"
#include "rootcast/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rootcast {

// Checkable statements about a measure on trees.  Each id maps to exactly
// one checker below; cstar-no-potential is the fixed three-join
// demonstration rather than a per-tree predicate.
enum class PropertyId {
  rooting,
  amop,
  symmetry,
  consistency,
  monotonicity,
  potential_equivalence,
  cstar_no_potential,
};

PropertyId parse_property(const std::string& text);
std::string property_name(PropertyId p);

// What a sweep runs against: a measure, plus a potential when the property
// is potential-equivalence.
struct Subject {
  Measure measure;
  std::optional<Potential> potential;
  std::string name() const;
};

struct Counterexample {
  Tree tree = Tree::single();
  std::vector<int> vertices;  // offending vertices
  std::string detail;         // scores / values, human-readable
};

struct PropertyReport {
  PropertyId property = PropertyId::rooting;
  std::string subject;
  std::uint64_t trees_checked = 0;
  bool all_pass = true;
  // Some float comparison landed within 10x of the tie tolerance; the
  // verdict stands but hinges on fragile arithmetic.
  bool fragile = false;
  std::optional<Counterexample> counterexample;
  double wall_ms = 0.0;
};

// Max set is one vertex or two adjacent ones, and scores strictly decrease
// along every path leading away from it.
bool check_rooting(const Measure& m, const Tree& t);
// Every vertex has at most one neighbor scoring >= itself.
bool check_amop(const Measure& m, const Tree& t);
// For any two neighbors of v whose hanging subtrees are isomorphic as
// rooted trees, both score strictly below v.
bool check_symmetry_measure(const Measure& m, const Tree& t);
// For every root u of T, every attachment point v, and new leaf w:
// Max(T + vw) is inside path(u,w) union Max(T).  `all_roots=false` relaxes
// the quantifier to "some root u".
bool check_consistency(const Measure& m, const Tree& t, bool all_roots = true);
// Every strict comparison C(v,T) < C(u,T) across an edge survives adding a
// leaf anywhere on u's side.
bool check_monotonic(const Measure& m, const Tree& t);

// Rooting and consistency for the ordering a constructive potential induces
// across edges (u beats v when f(u, T_{u,v}) > f(v, T_{v,u})): the local
// winners are one vertex or two adjacent ones, comparisons strictly favor
// the parent along every path away from them, and a new leaf can only move
// the winner set along the path toward itself.
bool check_rooting_spec(const ConstructiveSpec& s, const Tree& t);
bool check_consistency_spec(const ConstructiveSpec& s, const Tree& t, bool all_roots = true);

struct SweepOptions {
  int n_max = 7;                   // exhaustive over all labeled trees 2..n_max
  std::uint64_t random_budget = 0; // extra random trees after a clean sweep
  int random_n_max = 14;           // random sizes drawn uniformly from [2, this]
  std::uint64_t seed = 1;
  int jobs = 1;
  bool consistency_all_roots = true;
};

// Runs the property checker over every labeled tree with 2..n_max vertices
// (enumeration order), then over the random budget.  The first failure by
// (vertex count, enumeration index) becomes the counterexample; verdict,
// witness, and trees_checked are independent of `jobs`.
PropertyReport sweep(PropertyId property, const Subject& subject, const SweepOptions& opt);

// The fixed witness pattern that rules out any potential function for C*:
// star(3) at its center, line(5) at its midpoint, line(5) at vertex 1;
// pairwise joins must compare (=, =, <).  Also sweeps rooting for C* over
// all trees n <= 8.
PropertyReport cstar_no_potential_demo();

}  // namespace rootcast
