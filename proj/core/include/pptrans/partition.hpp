#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pptrans {

/// An ordered set partition of X = {0, ..., n-1} into contiguous blocks,
/// stored as block sizes in ascending order.  Block b covers the half-open
/// element range [offset(b), offset(b) + size(b)).  The text form is a
/// '+'-separated list of sizes, accepted in any order and rendered in
/// descending order, e.g. "3+2+1".
class Partition {
 public:
  /// Sizes may be given in any order; they are sorted ascending.
  /// Throws std::invalid_argument if empty or any size is < 1.
  explicit Partition(std::vector<int> sizes);

  /// Parses "a+b+c".  Throws std::invalid_argument naming the bad token.
  static Partition parse(std::string_view spec);

  /// Descending render, e.g. "3+2+1".  parse(render()) == *this.
  std::string render() const;

  int degree() const { return degree_; }            // |X|
  int block_count() const { return static_cast<int>(sizes_.size()); }
  const std::vector<int>& block_sizes() const { return sizes_; }  // ascending

  int block_size(int b) const { return sizes_.at(static_cast<size_t>(b)); }
  /// Element range [first, last) of block b.
  std::pair<int, int> block_range(int b) const;
  /// Index of the block containing element x.  Throws if out of range.
  int block_of(int x) const;

  bool operator==(const Partition& other) const { return sizes_ == other.sizes_; }

 private:
  std::vector<int> sizes_;     // ascending
  std::vector<int> offsets_;   // offsets_[b] = first element of block b, plus sentinel degree_
  std::vector<int> block_of_;  // element -> block index
  int degree_ = 0;
};

/// Size-class statistics of a partition.  With blocks of n distinct sizes,
/// p counts sizes >= 2 occurring with multiplicity >= 2, q counts sizes >= 2
/// occurring exactly once, and t is the number of singleton blocks.
struct PartitionSignature {
  int p = 0;
  int q = 0;
  int t = 0;
  std::vector<std::pair<int, int>> repeated_sizes;  // (size, multiplicity), size >= 2, mult >= 2, ascending
  std::vector<int> unique_sizes;                    // sizes >= 2 with multiplicity 1, ascending
  std::vector<int> distinct_sizes;                  // all distinct sizes incl. 1 when t >= 1, ascending
  int s = 0;      // number of distinct sizes
  int r_rep = 0;  // sizes with multiplicity >= 2, counting size 1 when t >= 2
};

PartitionSignature signature(const Partition& p);

/// All partitions of n, each in canonical (ascending sizes) form.
/// Deterministic enumeration order.
std::vector<Partition> partitions_of(int n);

}  // namespace pptrans
