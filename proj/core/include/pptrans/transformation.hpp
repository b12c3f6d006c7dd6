#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pptrans/partition.hpp"

namespace pptrans {

/// A full transformation of {0, .., n-1}, written on the right of its
/// argument: composition is left to right, (x)(f * g) = ((x)f)g.
class Transformation {
 public:
  explicit Transformation(std::vector<int> images);
  static Transformation identity(int n);

  /// Parses "1,0,2" (0-based images).  Throws std::invalid_argument naming
  /// the bad token or out-of-range image.
  static Transformation parse(std::string_view text);
  std::string render() const;  // "1,0,2"

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  bool is_permutation() const;
  std::vector<int> image_set() const;  // sorted, distinct
  int rank() const { return static_cast<int>(image_set().size()); }

  bool operator==(const Transformation& other) const = default;
  auto operator<=>(const Transformation& other) const = default;

 private:
  std::vector<int> images_;
};

/// (x)(f * g) = ((x)f)g.  Degrees must match.
Transformation compose(const Transformation& f, const Transformation& g);

/// Inverse of a permutation.  Throws if f is not a permutation.
Transformation inverse(const Transformation& f);

/// The map induced on block indices when f sends each block of p into a
/// single block; undefined otherwise.
class BlockMap {
 public:
  BlockMap() = default;
  explicit BlockMap(Transformation t) : map_(std::move(t)) {}
  bool defined() const { return map_.has_value(); }
  const Transformation& get() const;  // throws std::logic_error if undefined
  bool operator==(const BlockMap&) const = default;

 private:
  std::optional<Transformation> map_;
};

BlockMap induced_block_map(const Partition& p, const Transformation& f);

enum class Membership {
  NotInT,   // some block is not mapped into a single block
  InT,      // in T(X,P) but the induced block map is not a permutation
  InSigma,  // induced block map is a permutation, f not bijective
  InS,      // a unit: f bijective and block-preserving
};

Membership membership(const Partition& p, const Transformation& f);

inline bool in_T(const Partition& p, const Transformation& f) {
  return membership(p, f) != Membership::NotInT;
}
inline bool in_Sigma(const Partition& p, const Transformation& f) {
  auto m = membership(p, f);
  return m == Membership::InSigma || m == Membership::InS;
}
inline bool in_S(const Partition& p, const Transformation& f) {
  return membership(p, f) == Membership::InS;
}

const char* to_string(Membership m);

/// Kernel classes of f restricted to [first, last): the classes of
/// "same image under f", each sorted, ordered by least element.
std::vector<std::vector<int>> kernel_classes_on_range(const Transformation& f, int first, int last);

}  // namespace pptrans
