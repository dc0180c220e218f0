#pragma once

#include <cstdint>
#include <vector>

#include "polyform/errors.hpp"

namespace polyform {

// Strictly increasing index set I = {i_1 < ... < i_k}, 1-based indices, stored
// as a bitmask (bit i-1 = index i present). Labels the basis covector
// du_{i_1} ^ ... ^ du_{i_k}.
class IndexSet {
 public:
  IndexSet() : bits_(0) {}
  explicit IndexSet(uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> idx) : bits_(0) {
    for (int i : idx) {
      if (i < 1 || i > 32) throw DimensionError("IndexSet: index out of range");
      bits_ |= 1u << (i - 1);
    }
  }

  static IndexSet full(int n) { return IndexSet(n >= 32 ? ~0u : (1u << n) - 1); }

  uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  bool contains(int i) const { return bits_ & (1u << (i - 1)); }
  bool empty() const { return bits_ == 0; }
  int max_index() const { return bits_ ? 32 - __builtin_clz(bits_) : 0; }

  IndexSet with(int i) const { return IndexSet(bits_ | (1u << (i - 1))); }
  IndexSet without(int i) const { return IndexSet(bits_ & ~(1u << (i - 1))); }
  // Complement within {1..n}.
  IndexSet complement(int n) const { return IndexSet(full(n).bits_ & ~bits_); }

  std::vector<int> indices() const {
    std::vector<int> v;
    for (uint32_t b = bits_; b;) {
      int i = __builtin_ctz(b);
      v.push_back(i + 1);
      b &= b - 1;
    }
    return v;
  }

  // Position of index i within the sorted set (0-based); i must be a member.
  int position(int i) const { return __builtin_popcount(bits_ & ((1u << (i - 1)) - 1)); }

  bool operator==(const IndexSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const IndexSet& o) const { return bits_ != o.bits_; }

 private:
  uint32_t bits_;
};

// Order used everywhere index sets are enumerated or printed: by size, then
// lexicographically on the sorted index lists (smallest leading index first).
struct IndexSetOrder {
  bool operator()(const IndexSet& a, const IndexSet& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    uint32_t x = a.bits(), y = b.bits();
    if (x == y) return false;
    // The lowest differing bit decides: the set containing it has the smaller
    // leading index at the first disagreement, hence comes first.
    uint32_t diff = x ^ y;
    return x & (diff & -diff);
  }
};

// Sign of merging two disjoint sorted sets into one sorted sequence (the sign
// of du_A ^ du_B relative to du_{A union B}); 0 if they intersect.
inline int merge_sign(const IndexSet& a, const IndexSet& b) {
  if (a.bits() & b.bits()) return 0;
  // Count inversions: pairs (i in a, j in b) with j < i.
  int inv = 0;
  for (uint32_t x = a.bits(); x;) {
    int i = __builtin_ctz(x);
    inv += __builtin_popcount(b.bits() & ((1u << i) - 1));
    x &= x - 1;
  }
  return inv & 1 ? -1 : 1;
}

// All size-k subsets of {1..n} in IndexSetOrder.
std::vector<IndexSet> index_sets(int n, int k);

}  // namespace polyform
