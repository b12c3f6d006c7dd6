// Independent reference implementations for the test suite.  Everything here
// is deliberately brute force: enumerate all self-maps, filter by the defining
// predicate, and count.  Keep these dumb; the library under test is the
// clever one.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "pptrans/counting.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

namespace oracles {

using pptrans::BigInt;
using pptrans::Partition;
using pptrans::Transformation;

// Calls fn(images) for every self-map of {0..n-1}; n^n calls.
template <typename Fn>
void for_all_self_maps(int n, Fn&& fn) {
  std::vector<int> im(static_cast<size_t>(n), 0);
  while (true) {
    fn(im);
    int pos = n - 1;
    while (pos >= 0 && im[static_cast<size_t>(pos)] == n - 1) {
      im[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++im[static_cast<size_t>(pos)];
  }
}

// Sends each block into a single block?
inline bool maps_blocks_into_blocks(const Partition& p, const std::vector<int>& im) {
  for (int b = 0; b < p.block_count(); ++b) {
    auto [first, last] = p.block_range(b);
    const int target = p.block_of(im[static_cast<size_t>(first)]);
    for (int x = first + 1; x < last; ++x)
      if (p.block_of(im[static_cast<size_t>(x)]) != target) return false;
  }
  return true;
}

// Image meets every block?
inline bool image_meets_every_block(const Partition& p, const std::vector<int>& im) {
  std::vector<char> hit(static_cast<size_t>(p.block_count()), 0);
  for (int v : im) hit[static_cast<size_t>(p.block_of(v))] = 1;
  for (char h : hit)
    if (!h) return false;
  return true;
}

inline bool is_bijection(const std::vector<int>& im) {
  std::vector<char> seen(im.size(), 0);
  for (int v : im) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

struct MembershipCounts {
  std::uint64_t in_T = 0, in_Sigma = 0, in_S = 0;
};

// Exhaustive membership counts; usable up to n = 7 or so (7^7 = 823543).
inline MembershipCounts count_by_brute_force(const Partition& p) {
  MembershipCounts c;
  for_all_self_maps(p.degree(), [&](const std::vector<int>& im) {
    if (!maps_blocks_into_blocks(p, im)) return;
    ++c.in_T;
    if (!image_meets_every_block(p, im)) return;
    ++c.in_Sigma;
    if (is_bijection(im)) ++c.in_S;
  });
  return c;
}

// The double coset S f S as an explicit element set.  |S|^2 products.
inline std::set<std::vector<int>> double_coset(const std::vector<Transformation>& units,
                                               const Transformation& f) {
  std::set<std::vector<int>> out;
  for (const auto& u : units)
    for (const auto& v : units)
      out.insert(compose(compose(u, f), v).images());
  return out;
}

// Uniform-ish random unit: permute the blocks within each size class, then
// permute inside every block.
inline Transformation random_unit(const Partition& p, std::mt19937_64& rng) {
  const int nb = p.block_count();
  std::vector<int> block_dest(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) block_dest[static_cast<size_t>(b)] = b;
  // Fisher-Yates within every run of equal sizes (blocks are sorted by size).
  int run_start = 0;
  for (int b = 1; b <= nb; ++b) {
    if (b == nb || p.block_size(b) != p.block_size(run_start)) {
      for (int i = b - 1; i > run_start; --i) {
        std::uniform_int_distribution<int> d(run_start, i);
        std::swap(block_dest[static_cast<size_t>(i)], block_dest[static_cast<size_t>(d(rng))]);
      }
      run_start = b;
    }
  }
  std::vector<int> im(static_cast<size_t>(p.degree()));
  for (int b = 0; b < nb; ++b) {
    auto [first, last] = p.block_range(b);
    auto [tfirst, tlast] = p.block_range(block_dest[static_cast<size_t>(b)]);
    (void)tlast;
    const int sz = last - first;
    std::vector<int> inner(static_cast<size_t>(sz));
    for (int i = 0; i < sz; ++i) inner[static_cast<size_t>(i)] = i;
    for (int i = sz - 1; i > 0; --i) {
      std::uniform_int_distribution<int> d(0, i);
      std::swap(inner[static_cast<size_t>(i)], inner[static_cast<size_t>(d(rng))]);
    }
    for (int i = 0; i < sz; ++i)
      im[static_cast<size_t>(first + i)] = tfirst + inner[static_cast<size_t>(i)];
  }
  return Transformation(im);
}

// Random element of Sigma: a random permutation of the blocks, then each
// element goes to an independent uniform point of its block's target.
inline Transformation random_sigma(const Partition& p, std::mt19937_64& rng) {
  const int nb = p.block_count();
  std::vector<int> tau(static_cast<size_t>(nb));
  for (int b = 0; b < nb; ++b) tau[static_cast<size_t>(b)] = b;
  for (int i = nb - 1; i > 0; --i) {
    std::uniform_int_distribution<int> d(0, i);
    std::swap(tau[static_cast<size_t>(i)], tau[static_cast<size_t>(d(rng))]);
  }
  std::vector<int> im(static_cast<size_t>(p.degree()));
  for (int b = 0; b < nb; ++b) {
    auto [first, last] = p.block_range(b);
    auto [tfirst, tlast] = p.block_range(tau[static_cast<size_t>(b)]);
    std::uniform_int_distribution<int> d(tfirst, tlast - 1);
    for (int x = first; x < last; ++x) im[static_cast<size_t>(x)] = d(rng);
  }
  return Transformation(im);
}

// Random element of T: like random_sigma but with an arbitrary block target
// map instead of a permutation.
inline Transformation random_T(const Partition& p, std::mt19937_64& rng) {
  const int nb = p.block_count();
  std::uniform_int_distribution<int> pick(0, nb - 1);
  std::vector<int> im(static_cast<size_t>(p.degree()));
  for (int b = 0; b < nb; ++b) {
    auto [first, last] = p.block_range(b);
    auto [tfirst, tlast] = p.block_range(pick(rng));
    std::uniform_int_distribution<int> d(tfirst, tlast - 1);
    for (int x = first; x < last; ++x) im[static_cast<size_t>(x)] = d(rng);
  }
  return Transformation(im);
}

// Rank over GF(2) of a list of bit vectors.
inline int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i]) continue;
    ++rank;
    const std::uint64_t pivot = rows[i] & (~rows[i] + 1);
    for (size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j] & pivot) rows[j] ^= rows[i];
  }
  return rank;
}

// All partitions of every n in [lo, hi], canonical form.
inline std::vector<Partition> partitions_in_range(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = lo; n <= hi; ++n)
    for (const auto& p : pptrans::partitions_of(n)) out.push_back(p);
  return out;
}

}  // namespace oracles
