#ifndef HICOMM_PARTITION_HPP
#define HICOMM_PARTITION_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hicomm {

// Canonical partition of {0, ..., n-1}: block ids are assigned by first
// occurrence, so equal equivalence relations compare equal as vectors.
class Partition {
 public:
  Partition() = default;
  static Partition zero(int n);  // all singletons
  static Partition one(int n);   // single block
  // Canonicalizes arbitrary block labels.
  static Partition from_block_ids(const std::vector<int>& ids);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int size() const { return static_cast<int>(block_.size()); }
  int block_of(int x) const { return block_[x]; }
  int num_blocks() const { return num_blocks_; }
  bool same(int a, int b) const { return block_[a] == block_[b]; }
  bool is_zero() const { return num_blocks_ == size(); }
  bool is_one() const { return num_blocks_ <= 1; }

  // Refinement order: *this <= other iff every block of *this lies inside a
  // block of other.
  bool leq(const Partition& other) const;

  std::vector<std::vector<int>> blocks() const;

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> block_;
  int num_blocks_ = 0;
};

Partition meet(const Partition& p, const Partition& q);

// All partitions of an n-set in lexicographic restricted-growth-string order.
std::vector<Partition> all_partitions(int n);

// Text form: blocks as sorted lists, blocks ordered by least element,
// e.g. [[0,1],[2],[3,4,5]].
std::string partition_render(const Partition& p);
Partition partition_parse(std::string_view text, int expect_n = -1);

}  // namespace hicomm

#endif  // HICOMM_PARTITION_HPP
