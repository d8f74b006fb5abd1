#pragma once

#include "rootcast/constructive.hpp"
#include "rootcast/measures.hpp"
#include "rootcast/score.hpp"
#include "rootcast/tree.hpp"

#include <string>
#include <vector>

namespace rootcast {

// A potential function f(v, T): the per-subtree quantity whose pairwise
// comparisons across an edge mirror the centrality comparison of the edge's
// endpoints.  Closed forms:
//   f_degree        |N_T(v)|                      (exact int)
//   f_closeness     |V(T)|                        (exact int)
//   f_eccentricity  height of T seen from v       (exact int)
//   f_allsubgraphs  #connected subgraphs owning v (exact big int)
//   f_betweenness   Betweenness(v,T) + 2|T|       (exact int)
//   f_decay         (1-alpha) * Decay_alpha(v,T)  (float)
//   f_heightminus   height + 1/|T|                (exact rational)
//   constructive    monoid fold per spec          (exact int/rational)
struct Potential {
  enum class Family {
    f_degree,
    f_closeness,
    f_eccentricity,
    f_allsubgraphs,
    f_betweenness,
    f_decay,
    f_heightminus,
    constructive,
  };

  Family family = Family::f_closeness;
  double alpha = 0.5;     // f_decay only
  ConstructiveSpec spec;  // constructive only

  static Potential make(Family f, double alpha = 0.5);
  static Potential of_spec(const ConstructiveSpec& s);
  // "f_degree", "f_decay:alpha=0.25", ...; anything without the "f_" prefix
  // is parsed as a constructive spec name ("all-subgraphs", "abc:a=2,...").
  static Potential parse(const std::string& text);
  std::string name() const;

  bool operator==(const Potential& o) const {
    return family == o.family && alpha == o.alpha && spec == o.spec;
  }
};

// f(v, T) for T as a standalone tree.
ScoreKey eval_potential(const Potential& p, const Tree& t, int v);

// f(u, T_{u,v}) for adjacent u, v: the potential of u's side of the edge,
// evaluated on the materialized hanging subtree.
ScoreKey hanging_value(const Potential& p, const Tree& t, int u, int v);

// The paper's measure <-> potential table: (degree, f_degree), (closeness,
// f_closeness), (eccentricity, f_eccentricity), (all-subgraphs,
// f_allsubgraphs), (betweenness, f_betweenness), (decay(a), f_decay(a)),
// and the height-based pair for ecc-minus-closeness, in that order.
struct EquivalencePair {
  Measure measure;
  Potential potential;
};
std::vector<EquivalencePair> registered_pairs(double decay_alpha = 0.5);

// True iff for every edge {u,v} of T the centrality comparison C(u,T) vs
// C(v,T) has the same sign as f(u, T_{u,v}) vs f(v, T_{v,u}), ties included.
bool check_potential_equivalence(const Measure& m, const Potential& p, const Tree& t);

// True iff f(u, T_{u,v}) < f(v, T) strictly for every ordered adjacent pair.
bool is_symmetric_on(const Potential& p, const Tree& t);

// True iff deleting any single leaf never raises the potential of a
// surviving vertex: f(v, T - leaf) <= f(v, T).  Iterated deletions reach
// every subtree, so sweeping this over all trees up to a size bound covers
// full deletion chains by induction.
bool is_subtree_monotone_on(const Potential& p, const Tree& t);

// Combined monotone+symmetric form over proper complete subtrees
// T' = T_{u,v}: same-vertex values never grow, f(x, T') <= f(x, T), and the
// anchor stays strictly below every vertex beyond the cut,
// f(u, T') < f(w, T) for w outside T'.  Holds for exactly the potentials
// that are both symmetric and subtree-monotone.
bool combined_strict_check(const Potential& p, const Tree& t);

}  // namespace rootcast
