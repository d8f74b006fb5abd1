#include "rootcast/prufer.hpp"

#include <algorithm>

#include "rootcast/errors.hpp"

namespace rootcast {

Tree prufer_decode(const std::vector<int>& code) {
  int n = static_cast<int>(code.size()) + 2;
  std::vector<int> deg(n, 1);
  for (int c : code) {
    if (c < 0 || c >= n)
      fail(errc::entry_out_of_range, "code entry " + std::to_string(c) + " outside 0.." +
                                         std::to_string(n - 1));
    ++deg[c];
  }

  // Pointer-scan construction: O(n) overall.  `leaf` tracks the smallest
  // unconsumed leaf; removing an entry can only create one new leaf.
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.push_back({leaf, c});
    if (--deg[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({leaf, n - 1});
  return Tree::from_dense_edges(n, edges);
}

std::vector<int> prufer_encode(const Tree& t) {
  int n = t.n();
  if (n < 2) fail(errc::too_large, "no Prüfer code for a single vertex");
  std::vector<int> deg(n), parent(n, -1), order;
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  rooted_orientation(t, n - 1, parent, order);

  std::vector<int> code;
  code.reserve(n - 2);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int i = 0; i < n - 2; ++i) {
    int next = parent[leaf];
    code.push_back(next);
    if (--deg[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  return code;
}

std::uint64_t labeled_tree_count(int n) {
  if (n == 1) return 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

TreeEnumerator::TreeEnumerator(int n) : n_(n) {
  if (n < 2) fail(errc::too_large, "enumeration starts at n=2");
  if (n > 8)
    fail(errc::too_large, "exhaustive enumeration is capped at n=8 (" +
                              std::to_string(labeled_tree_count(8)) +
                              " trees); sample instead");
  total_ = labeled_tree_count(n);
}

Tree TreeEnumerator::at(std::uint64_t index) const {
  check_internal(index < total_, "enumeration index past the end");
  std::vector<int> code(n_ - 2);
  for (int i = 0; i < n_ - 2; ++i) {
    code[i] = static_cast<int>(index % n_);
    index /= n_;
  }
  return prufer_decode(code);
}

bool TreeEnumerator::next(Tree& out) {
  if (cursor_ >= total_) return false;
  out = at(cursor_++);
  return true;
}

int RandomTreeSource::uniform_int(int lo, int hi) {
  check_internal(lo <= hi, "empty uniform range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw exactly uniform and platform-independent.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / span * span;
  std::uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return lo + static_cast<int>(r % span);
}

Tree RandomTreeSource::tree(int n) {
  if (n < 1) fail(errc::bad_input, "empty tree");
  if (n == 1) return Tree::single();
  if (n == 2) return Tree::line(2);
  std::vector<int> code(n - 2);
  for (int& c : code) c = uniform_int(0, n - 1);
  return prufer_decode(code);
}

}  // namespace rootcast
