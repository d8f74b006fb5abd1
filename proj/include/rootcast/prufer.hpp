#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rootcast/tree.hpp"

namespace rootcast {

// Prüfer sequences give the classic bijection between labeled trees on
// n >= 2 vertices and sequences of length n-2 over {0..n-1}; they back both
// exhaustive enumeration and uniform random sampling.

// code entries in 0..n-1 where n = code.size() + 2.
Tree prufer_decode(const std::vector<int>& code);
std::vector<int> prufer_encode(const Tree& t);  // needs n >= 2

// Number of labeled trees on n vertices: n^(n-2).
std::uint64_t labeled_tree_count(int n);

// Streams all labeled trees on n vertices (2 <= n <= 8; the space is
// n^(n-2), anything past 8 is for sampling, not sweeping).  Index-addressable
// so ranges can be split across workers deterministically.
class TreeEnumerator {
 public:
  explicit TreeEnumerator(int n);
  std::uint64_t total() const { return total_; }
  int n() const { return n_; }

  // Tree number `index` in the fixed order (Prüfer code = base-n digits of
  // index, least significant first).
  Tree at(std::uint64_t index) const;

  bool next(Tree& out);  // false once exhausted

 private:
  int n_;
  std::uint64_t total_, cursor_ = 0;
};

// Deterministic uniform labeled trees; same (n, seed) => same stream.
class RandomTreeSource {
 public:
  explicit RandomTreeSource(std::uint64_t seed) : rng_(seed) {}
  Tree tree(int n);
  int uniform_int(int lo, int hi);  // inclusive, bias-free

 private:
  std::mt19937_64 rng_;
};

}  // namespace rootcast
