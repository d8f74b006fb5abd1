#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rootcast {

// An unrooted tree over dense vertex ids 0..n-1.  Construction validates
// treeness (connected, acyclic, no self loops or duplicates).  Vertices carry
// display labels: from_edges remaps arbitrary non-negative ids densely and
// keeps the originals, the synthetic builders label vertices by their index.
class Tree {
 public:
  static Tree single(long long label = 0);
  static Tree line(int n);        // path on n vertices, edges i-(i+1)
  static Tree star(int leaves);   // center 0 plus `leaves` leaves

  // Arbitrary non-negative 64-bit endpoint ids; remapped densely in
  // ascending id order.
  static Tree from_edges(const std::vector<std::pair<long long, long long>>& edges);

  // Endpoints already dense in 0..n-1.  Validates treeness.
  static Tree from_dense_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return static_cast<int>(labels_.size()); }
  std::span<const int> neighbors(int v) const {
    return {flat_.data() + offs_[v], flat_.data() + offs_[v + 1]};
  }
  int degree(int v) const { return offs_[v + 1] - offs_[v]; }
  long long label(int v) const { return labels_[v]; }
  bool has_edge(int u, int v) const;

  // Edges as (u,v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

 private:
  Tree() = default;
  void finish(std::vector<std::pair<int, int>> dense_edges);

  // Compressed adjacency: neighbors of v, each list ascending, live in
  // flat_[offs_[v] .. offs_[v+1]).
  std::vector<int> offs_;
  std::vector<int> flat_;
  std::vector<long long> labels_;
};

// The component of `anchor` in T minus the edge {anchor, excluded} — the
// subtree hanging at `anchor` away from `excluded`.  `materialize` copies it
// into a standalone tree whose vertex k corresponds to vertices()[k].
class SubtreeView {
 public:
  SubtreeView(const Tree& host, int anchor, int excluded);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<int>& vertices() const { return verts_; }  // ascending
  int anchor() const { return anchor_; }

  Tree materialize() const;       // standalone copy
  int anchor_index() const;       // anchor's vertex id inside materialize()

 private:
  const Tree* host_;
  int anchor_, excluded_;
  std::vector<int> verts_;
};

// New tree with one extra leaf attached at `v`; the leaf gets id/label n.
Tree add_leaf(const Tree& t, int v);

// Disjoint union of a and b plus the bridge {va, n_a + vb}; b's vertex i
// becomes n_a + i.
Tree join(const Tree& a, int va, const Tree& b, int vb);

// Standalone copy of the induced subgraph on `vertices` (must be connected).
Tree induced_subtree(const Tree& t, const std::vector<int>& vertices);

std::vector<int> distances_from(const Tree& t, int v);

// Unique path from u to v, inclusive of both endpoints.
std::vector<int> path_between(const Tree& t, int u, int v);

// Subtree sizes when rooting at `root`; parents[root] == -1.
void rooted_orientation(const Tree& t, int root, std::vector<int>& parent,
                        std::vector<int>& order);  // order = BFS order from root
std::vector<int> subtree_sizes(const Tree& t, int root);

// |T_{u,v}| for the edge {u,v}: size of u's side after removing the edge.
int hanging_size(const Tree& t, int u, int v);

// AHU canonical form of the tree rooted at `root`; equal strings iff the
// rooted trees are isomorphic.
std::string rooted_canonical(const Tree& t, int root);

}  // namespace rootcast
