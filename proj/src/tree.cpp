#include "rootcast/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rootcast/errors.hpp"

namespace rootcast {

namespace {

// Union-find with path halving; enough for edge validation.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

void Tree::finish(std::vector<std::pair<int, int>> dense_edges) {
  int n = static_cast<int>(labels_.size());
  // Diagnose the most specific defect first; the edge-count test alone would
  // blame "disconnected" for inputs whose real problem is a loop or a cycle.
  std::vector<std::pair<int, int>> seen;
  seen.reserve(dense_edges.size());
  Dsu dsu(n);
  for (auto [u, v] : dense_edges) {
    if (u == v)
      fail(errc::self_loop, "edge {" + std::to_string(labels_[u]) + "," +
                                std::to_string(labels_[v]) + "}");
    auto key = std::minmax(u, v);
    seen.push_back({key.first, key.second});
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end())
    fail(errc::duplicate_edge, "edge {" + std::to_string(labels_[dup->first]) + "," +
                                   std::to_string(labels_[dup->second]) + "}");
  for (auto [u, v] : dense_edges)
    if (!dsu.unite(u, v))
      fail(errc::cyclic, "edge {" + std::to_string(labels_[u]) + "," +
                             std::to_string(labels_[v]) + "} closes a cycle");
  if (static_cast<int>(dense_edges.size()) != n - 1)
    fail(errc::disconnected, "a tree on " + std::to_string(n) + " vertices needs " +
                                 std::to_string(n - 1) + " edges, got " +
                                 std::to_string(dense_edges.size()));

  offs_.assign(n + 1, 0);
  for (auto [u, v] : dense_edges) {
    ++offs_[u + 1];
    ++offs_[v + 1];
  }
  for (int v = 0; v < n; ++v) offs_[v + 1] += offs_[v];
  flat_.resize(2 * dense_edges.size());
  std::vector<int> cursor(offs_.begin(), offs_.end() - 1);
  for (auto [u, v] : dense_edges) {
    flat_[cursor[u]++] = v;
    flat_[cursor[v]++] = u;
  }
  for (int v = 0; v < n; ++v) std::sort(flat_.begin() + offs_[v], flat_.begin() + offs_[v + 1]);
}

Tree Tree::single(long long label) {
  Tree t;
  t.labels_ = {label};
  t.offs_ = {0, 0};
  return t;
}

Tree Tree::line(int n) {
  if (n < 1) fail(errc::bad_input, "line needs at least one vertex");
  if (n == 1) return single();
  std::vector<std::pair<int, int>> e;
  e.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return from_dense_edges(n, e);
}

Tree Tree::star(int leaves) {
  if (leaves < 0) fail(errc::bad_input, "negative leaf count");
  if (leaves == 0) return single();
  std::vector<std::pair<int, int>> e;
  e.reserve(leaves);
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return from_dense_edges(leaves + 1, e);
}

Tree Tree::from_dense_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) fail(errc::bad_input, "empty vertex set");
  Tree t;
  t.labels_.resize(n);
  std::iota(t.labels_.begin(), t.labels_.end(), 0);
  for (auto [u, v] : edges)
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::vertex_out_of_range,
           "edge endpoint " + std::to_string(std::max(u, v)) + " outside 0.." + std::to_string(n - 1));
  t.finish(edges);
  return t;
}

Tree Tree::from_edges(const std::vector<std::pair<long long, long long>>& edges) {
  if (edges.empty()) fail(errc::bad_input, "no edges; use a lone-vertex declaration for n=1");
  std::map<long long, int> id;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0) fail(errc::vertex_out_of_range, "negative vertex id");
    id.emplace(u, 0);
    id.emplace(v, 0);
  }
  Tree t;
  t.labels_.reserve(id.size());
  for (auto& [orig, dense] : id) {
    dense = static_cast<int>(t.labels_.size());
    t.labels_.push_back(orig);
  }
  std::vector<std::pair<int, int>> dense;
  dense.reserve(edges.size());
  for (auto [u, v] : edges) dense.push_back({id[u], id[v]});
  t.finish(std::move(dense));
  return t;
}

bool Tree::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(n() > 0 ? n() - 1 : 0);
  for (int u = 0; u < n(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

SubtreeView::SubtreeView(const Tree& host, int anchor, int excluded)
    : host_(&host), anchor_(anchor), excluded_(excluded) {
  if (anchor < 0 || anchor >= host.n() || excluded < 0 || excluded >= host.n())
    fail(errc::vertex_out_of_range, "subtree endpoints");
  if (!host.has_edge(anchor, excluded))
    fail(errc::not_an_edge, "{" + std::to_string(host.label(anchor)) + "," +
                                std::to_string(host.label(excluded)) + "}");
  verts_.push_back(anchor);
  std::vector<int> stack{anchor};
  std::vector<char> vis(host.n(), 0);
  vis[anchor] = vis[excluded] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : host.neighbors(v))
      if (!vis[w]) {
        vis[w] = 1;
        verts_.push_back(w);
        stack.push_back(w);
      }
  }
  std::sort(verts_.begin(), verts_.end());
}

Tree SubtreeView::materialize() const { return induced_subtree(*host_, verts_); }

int SubtreeView::anchor_index() const {
  return static_cast<int>(std::lower_bound(verts_.begin(), verts_.end(), anchor_) - verts_.begin());
}

Tree induced_subtree(const Tree& t, const std::vector<int>& vertices) {
  if (vertices.empty()) fail(errc::bad_input, "empty vertex set");
  std::vector<int> pos(t.n(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) pos[vertices[i]] = i;
  if (vertices.size() == 1) return Tree::single(t.label(vertices[0]));
  std::vector<std::pair<int, int>> edges;
  edges.reserve(vertices.size() - 1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    for (int w : t.neighbors(vertices[i]))
      if (pos[w] > i) edges.push_back({i, pos[w]});
  Tree out = Tree::from_dense_edges(static_cast<int>(vertices.size()), edges);
  return out;
}

Tree add_leaf(const Tree& t, int v) {
  if (v < 0 || v >= t.n()) fail(errc::vertex_out_of_range, "attach point " + std::to_string(v));
  std::vector<std::pair<int, int>> e = t.edges();
  e.push_back({v, t.n()});
  return Tree::from_dense_edges(t.n() + 1, e);
}

Tree join(const Tree& a, int va, const Tree& b, int vb) {
  if (va < 0 || va >= a.n() || vb < 0 || vb >= b.n())
    fail(errc::vertex_out_of_range, "join endpoints");
  std::vector<std::pair<int, int>> e = a.edges();
  for (auto [u, v] : b.edges()) e.push_back({u + a.n(), v + a.n()});
  e.push_back({va, vb + a.n()});
  return Tree::from_dense_edges(a.n() + b.n(), e);
}

std::vector<int> distances_from(const Tree& t, int v) {
  if (v < 0 || v >= t.n()) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  std::vector<int> dist(t.n(), -1), queue{v};
  dist[v] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int w : t.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

void rooted_orientation(const Tree& t, int root, std::vector<int>& parent, std::vector<int>& order) {
  parent.assign(t.n(), -1);
  order.clear();
  order.reserve(t.n());
  order.push_back(root);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int w : t.neighbors(u))
      if (parent[w] < 0) {
        parent[w] = u;
        order.push_back(w);
      }
  }
  parent[root] = -1;
}

std::vector<int> subtree_sizes(const Tree& t, int root) {
  std::vector<int> parent, order, size(t.n(), 1);
  rooted_orientation(t, root, parent, order);
  for (int i = t.n() - 1; i > 0; --i) size[parent[order[i]]] += size[order[i]];
  return size;
}

int hanging_size(const Tree& t, int u, int v) {
  if (!t.has_edge(u, v))
    fail(errc::not_an_edge,
         "{" + std::to_string(t.label(u)) + "," + std::to_string(t.label(v)) + "}");
  std::vector<int> size = subtree_sizes(t, v);
  return size[u];
}

std::vector<int> path_between(const Tree& t, int u, int v) {
  std::vector<int> parent, order;
  rooted_orientation(t, u, parent, order);
  std::vector<int> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

std::string rooted_canonical(const Tree& t, int root) {
  std::vector<int> parent, order;
  rooted_orientation(t, root, parent, order);
  std::vector<std::string> code(t.n());
  // Children appear later in BFS order, so a reverse pass sees them done.
  std::vector<std::vector<std::string>> kids(t.n());
  for (int i = t.n() - 1; i >= 0; --i) {
    int v = order[i];
    std::sort(kids[v].begin(), kids[v].end());
    std::string s = "(";
    for (auto& k : kids[v]) s += k;
    s += ")";
    if (i > 0)
      kids[parent[v]].push_back(std::move(s));
    else
      code[root] = std::move(s);
  }
  return code[root];
}

}  // namespace rootcast
