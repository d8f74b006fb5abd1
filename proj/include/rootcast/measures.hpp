#pragma once

#include <string>
#include <vector>

#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"

namespace rootcast {

// A centrality measure, possibly parameterized.  Text form is
// "name" or "name:alpha=0.5"; parse/name round-trip.
struct Measure {
  enum class Family {
    degree,
    closeness,
    eccentricity,
    all_subgraphs,
    betweenness,
    decay,
    pagerank,
    eigenvector,
    cstar,
    ecc_minus_closeness,
  };

  Family family = Family::degree;
  double alpha = 0.0;  // decay / pagerank only

  static Measure parse(const std::string& text);
  static Measure make(Family f, double alpha = 0.0);
  std::string name() const;

  bool operator==(const Measure& o) const { return family == o.family && alpha == o.alpha; }
};

// All families, with the acceptance-default parameters for the two
// parameterized ones (decay 0.5, pagerank 0.85).
std::vector<Measure> standard_measures();

// Comparison keys for every vertex; larger key = more central.  Throws
// single_vertex for measures undefined on one vertex (closeness,
// eccentricity, ecc-minus-closeness).
std::vector<ScoreKey> score_all(const Measure& m, const Tree& t);
ScoreKey score_one(const Measure& m, const Tree& t, int v);

// Vertices attaining the maximum key (float ties per tolerance), ascending.
std::vector<int> max_set(const Measure& m, const Tree& t);
std::vector<int> max_set(const std::vector<ScoreKey>& scores);

// Human-facing value for a key of measure m: closeness prints 1/sum(d),
// eccentricity prints 1/max(d), all-subgraphs prints log2(count), everything
// else prints the key's own value.
std::string display_score(const Measure& m, const ScoreKey& key);

// Number of connected subgraphs of t containing v (the all-subgraphs count
// before the log2 transform).
BigInt all_subgraphs_count(const Tree& t, int v);

// Betweenness on trees: ordered pairs (u,w), both distinct from v, whose
// unique path passes through v.
long long betweenness_count(const Tree& t, int v);

// The ad-hoc two-case root set behind the cstar measure (eccentricity
// maximizers, then largest hanging subtrees); 1 or 2 vertices.
std::vector<int> cstar_root_set(const Tree& t);

}  // namespace rootcast
