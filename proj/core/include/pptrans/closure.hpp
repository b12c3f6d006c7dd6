#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pptrans/counting.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

namespace pptrans {

struct ClosureOptions {
  /// Stop as soon as more than this many elements have been found.
  std::optional<std::uint64_t> cap;
  /// Elements are returned only while the count stays within this limit;
  /// beyond it the run is order-only.
  std::uint64_t retain_limit = std::uint64_t{1} << 20;
};

struct ClosureStats {
  std::uint64_t multiplications = 0;
  int frontier_depth = 0;
};

struct ClosureResult {
  std::uint64_t order = 0;  // elements found; the exact order when complete
  bool complete = true;     // false iff the cap was exceeded
  std::optional<std::vector<Transformation>> elements;  // discovery order
  ClosureStats stats;
};

/// Semigroup generated by nonempty products of gens, by breadth-first
/// right multiplication with hashed deduplication.  Deterministic: elements
/// are discovered in BFS order with generators applied in the given order.
/// Throws std::invalid_argument on an empty generator list or mixed degrees.
ClosureResult closure(const std::vector<Transformation>& gens, const ClosureOptions& opts = {});

/// Whether gens generate T(X,P), decided by comparing the closure order with
/// |T(X,P)|.  Throws std::invalid_argument naming the index of any generator
/// outside T(X,P).
bool generates_T(const Partition& p, const std::vector<Transformation>& gens);

/// All of T(X,P) in a fixed enumeration order (mixed-radix over per-block
/// target choices).  Size is |T(X,P)|; intended for small cases.
/// Throws std::invalid_argument if |T(X,P)| > hard_cap.
std::vector<Transformation> enumerate_T(const Partition& p, std::uint64_t hard_cap = 2'000'000);

/// All units of S(X,P) in a fixed enumeration order.
/// Throws std::invalid_argument if |S(X,P)| > hard_cap.
std::vector<Transformation> enumerate_units(const Partition& p, std::uint64_t hard_cap = 2'000'000);

struct SearchOptions {
  std::uint64_t max_order = 200;          // refuse larger ground sets
  std::uint64_t max_subsets = 200'000'000;  // budget on candidate subsets examined
};

struct SearchResult {
  enum class Status { Exact, Inconclusive };
  Status status = Status::Inconclusive;
  int rank = -1;  // valid when status == Exact
  std::uint64_t subsets_examined = 0;
  std::uint64_t closures_run = 0;
};

/// Smallest k such that some k-subset of T(X,P) generates it, by exhaustive
/// search ascending in k.  Candidate subsets failing the necessity
/// certificate (class coverage and unit parity span) are skipped without a
/// closure run; subsets drawn from double-coset representatives (and units)
/// are tried first at each k to find witnesses early.  Exact when it
/// returns Status::Exact; Status::Inconclusive when a budget is exceeded.
SearchResult minimal_genset_search(const Partition& p, const SearchOptions& opts = {});

}  // namespace pptrans
