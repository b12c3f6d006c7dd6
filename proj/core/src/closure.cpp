#include "pptrans/closure.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pptrans/certify.hpp"
#include "pptrans/classify.hpp"
#include "pptrans/rank.hpp"

namespace pptrans {

namespace {

// 4 bits per point; usable whenever the degree is at most 16.
std::uint64_t pack16(const std::vector<int>& im) {
  std::uint64_t key = 0;
  for (size_t i = 0; i < im.size(); ++i)
    key |= static_cast<std::uint64_t>(im[i]) << (4 * i);
  return key;
}

void unpack16(std::uint64_t key, std::vector<int>& im) {
  for (size_t i = 0; i < im.size(); ++i) im[i] = static_cast<int>((key >> (4 * i)) & 0xF);
}

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

ClosureResult closure(const std::vector<Transformation>& gens, const ClosureOptions& opts) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  const int n = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("closure: mixed degrees");

  const std::uint64_t cap = opts.cap.value_or(std::numeric_limits<std::uint64_t>::max());
  ClosureResult res;

  std::vector<const std::vector<int>*> gim;
  gim.reserve(gens.size());
  for (const auto& g : gens) gim.push_back(&g.images());

  if (n <= 16) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> list;
    auto push = [&](std::uint64_t key) {
      if (seen.insert(key).second) list.push_back(key);
    };
    for (const auto& g : gens) push(pack16(g.images()));

    std::vector<int> f(static_cast<size_t>(n)), prod(static_cast<size_t>(n));
    size_t lo = 0, hi = list.size();
    int depth = 1;
    bool over = list.size() > cap;
    while (!over && lo < hi) {
      for (size_t idx = lo; idx < hi && !over; ++idx) {
        unpack16(list[idx], f);
        for (const auto* g : gim) {
          for (int x = 0; x < n; ++x)
            prod[static_cast<size_t>(x)] = (*g)[static_cast<size_t>(f[static_cast<size_t>(x)])];
          ++res.stats.multiplications;
          push(pack16(prod));
          if (list.size() > cap) {
            over = true;
            break;
          }
        }
      }
      lo = hi;
      hi = list.size();
      if (lo < hi) ++depth;
    }
    res.order = list.size();
    res.complete = !over;
    res.stats.frontier_depth = depth;
    if (res.complete && res.order <= opts.retain_limit) {
      res.elements.emplace();
      res.elements->reserve(list.size());
      for (std::uint64_t key : list) {
        unpack16(key, f);
        res.elements->push_back(Transformation(f));
      }
    }
    return res;
  }

  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::vector<int>> list;
  auto push = [&](const std::vector<int>& im) {
    if (seen.insert(im).second) list.push_back(im);
  };
  for (const auto& g : gens) push(g.images());

  std::vector<int> prod(static_cast<size_t>(n));
  size_t lo = 0, hi = list.size();
  int depth = 1;
  bool over = list.size() > cap;
  while (!over && lo < hi) {
    for (size_t idx = lo; idx < hi && !over; ++idx) {
      for (const auto* g : gim) {
        const auto& f = list[idx];
        for (int x = 0; x < n; ++x)
          prod[static_cast<size_t>(x)] = (*g)[static_cast<size_t>(f[static_cast<size_t>(x)])];
        ++res.stats.multiplications;
        push(prod);
        if (list.size() > cap) {
          over = true;
          break;
        }
      }
    }
    lo = hi;
    hi = list.size();
    if (lo < hi) ++depth;
  }
  res.order = list.size();
  res.complete = !over;
  res.stats.frontier_depth = depth;
  if (res.complete && res.order <= opts.retain_limit) {
    res.elements.emplace();
    res.elements->reserve(list.size());
    for (const auto& im : list) res.elements->push_back(Transformation(im));
  }
  return res;
}

bool generates_T(const Partition& p, const std::vector<Transformation>& gens) {
  for (size_t i = 0; i < gens.size(); ++i)
    if (!in_T(p, gens[i]))
      throw std::invalid_argument("generates_T: generator " + std::to_string(i) +
                                  " is not in T(X,P)");
  const BigInt want = order_T(p);
  if (want > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
    throw std::invalid_argument("generates_T: |T(X,P)| too large to enumerate");
  const auto target = want.convert_to<std::uint64_t>();
  ClosureOptions o;
  o.cap = target;
  o.retain_limit = 0;
  const auto r = closure(gens, o);
  return r.complete && r.order == target;
}

std::vector<Transformation> enumerate_T(const Partition& p, std::uint64_t hard_cap) {
  const BigInt sz = order_T(p);
  if (sz > BigInt(hard_cap))
    throw std::invalid_argument("enumerate_T: |T(X,P)| = " + sz.str() + " exceeds the cap");

  const int nb = p.block_count();
  const int deg = p.degree();

  // Per-block choice: a target block j and one of |P_j|^|P_i| maps into it,
  // decoded most-significant-first so the enumeration is lexicographic in
  // the image tuple.
  std::vector<std::uint64_t> radix(static_cast<size_t>(nb));
  for (int i = 0; i < nb; ++i) {
    std::uint64_t total = 0;
    for (int j = 0; j < nb; ++j) {
      std::uint64_t pw = 1;
      for (int r = 0; r < p.block_size(i); ++r) pw *= static_cast<std::uint64_t>(p.block_size(j));
      total += pw;
    }
    radix[static_cast<size_t>(i)] = total;
  }

  auto decode_block = [&](int i, std::uint64_t c, std::vector<int>& im) {
    const auto [bf, bl] = p.block_range(i);
    const int a = bl - bf;
    for (int j = 0; j < nb; ++j) {
      const int b = p.block_size(j);
      std::uint64_t pw = 1;
      for (int r = 0; r < a; ++r) pw *= static_cast<std::uint64_t>(b);
      if (c >= pw) {
        c -= pw;
        continue;
      }
      const int tf = p.block_range(j).first;
      for (int r = a - 1; r >= 0; --r) {
        im[static_cast<size_t>(bf + r)] = tf + static_cast<int>(c % b);
        c /= static_cast<std::uint64_t>(b);
      }
      return;
    }
    throw std::logic_error("enumerate_T: choice out of range");
  };

  std::vector<Transformation> out;
  out.reserve(static_cast<size_t>(sz.convert_to<std::uint64_t>()));
  std::vector<std::uint64_t> ch(static_cast<size_t>(nb), 0);
  std::vector<int> im(static_cast<size_t>(deg));
  while (true) {
    for (int i = 0; i < nb; ++i) decode_block(i, ch[static_cast<size_t>(i)], im);
    out.push_back(Transformation(im));
    int i = nb - 1;
    while (i >= 0 && ++ch[static_cast<size_t>(i)] == radix[static_cast<size_t>(i)]) {
      ch[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::vector<Transformation> enumerate_units(const Partition& p, std::uint64_t hard_cap) {
  const BigInt sz = order_S(p);
  if (sz > BigInt(hard_cap))
    throw std::invalid_argument("enumerate_units: |S(X,P)| = " + sz.str() + " exceeds the cap");

  // Size classes, ascending by size.
  std::map<int, std::vector<int>> classes;
  for (int b = 0; b < p.block_count(); ++b) classes[p.block_size(b)].push_back(b);

  auto perms_of = [](int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    do {
      out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  };

  // One digit per class for the block permutation, then one per block for
  // its inner permutation; the odometer runs last-digit-fastest.
  struct Slot {
    const std::vector<std::vector<int>>* perms;
    int cls;    // index into class list
    int member; // -1 for the outer digit, else position within the class
  };
  std::vector<std::vector<int>> class_blocks;
  std::vector<std::vector<std::vector<int>>> tables;
  std::vector<Slot> slots;
  std::map<int, size_t> table_of_size;
  for (const auto& [d, blocks] : classes) {
    const int ci = static_cast<int>(class_blocks.size());
    class_blocks.push_back(blocks);
    if (!table_of_size.count(static_cast<int>(blocks.size())))
      table_of_size[static_cast<int>(blocks.size())] = tables.size(),
          tables.push_back(perms_of(static_cast<int>(blocks.size())));
    if (!table_of_size.count(~d))
      table_of_size[~d] = tables.size(), tables.push_back(perms_of(d));
    slots.push_back({nullptr, ci, -1});
    for (size_t j = 0; j < blocks.size(); ++j)
      slots.push_back({nullptr, ci, static_cast<int>(j)});
  }
  // Resolve table pointers after all growth.
  {
    size_t si = 0;
    for (const auto& [d, blocks] : classes) {
      slots[si++].perms = &tables[table_of_size[static_cast<int>(blocks.size())]];
      for (size_t j = 0; j < blocks.size(); ++j) slots[si++].perms = &tables[table_of_size[~d]];
    }
  }

  std::vector<size_t> digit(slots.size(), 0);
  std::vector<Transformation> out;
  out.reserve(static_cast<size_t>(sz.convert_to<std::uint64_t>()));
  std::vector<int> im(static_cast<size_t>(p.degree()));
  while (true) {
    std::iota(im.begin(), im.end(), 0);
    {
      size_t si = 0;
      for (const auto& blocks : class_blocks) {
        const auto& outer = (*slots[si].perms)[digit[si]];
        ++si;
        for (size_t j = 0; j < blocks.size(); ++j, ++si) {
          const auto& inner = (*slots[si].perms)[digit[si]];
          const int sf = p.block_range(blocks[j]).first;
          const int tf = p.block_range(blocks[outer[j]]).first;
          for (size_t r = 0; r < inner.size(); ++r)
            im[static_cast<size_t>(sf + static_cast<int>(r))] = tf + inner[r];
        }
      }
    }
    out.push_back(Transformation(im));
    int i = static_cast<int>(slots.size()) - 1;
    while (i >= 0 && ++digit[static_cast<size_t>(i)] == slots[static_cast<size_t>(i)].perms->size()) {
      digit[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

SearchResult minimal_genset_search(const Partition& p, const SearchOptions& opts) {
  const BigInt ot = order_T(p);
  if (ot > BigInt(opts.max_order))
    throw std::invalid_argument("minimal_genset_search: |T(X,P)| = " + ot.str() +
                                " exceeds max_order " + std::to_string(opts.max_order));

  const auto elements = enumerate_T(p, opts.max_order);
  const auto target = static_cast<std::uint64_t>(elements.size());

  // Necessity data per element: which class obligations it can discharge,
  // whether it is a unit, and its parity row.
  std::vector<Obligation> obs = obligations_for(p);
  std::vector<Obligation> structural;
  for (const auto& ob : obs)
    if (ob.kind == Obligation::Kind::AClass || ob.kind == Obligation::Kind::BClass ||
        ob.kind == Obligation::Kind::CClass)
      structural.push_back(ob);
  const int n_struct = static_cast<int>(structural.size());
  if (n_struct > 63) throw std::logic_error("minimal_genset_search: too many class obligations");
  const std::uint64_t full_mask = (std::uint64_t{1} << n_struct) - 1;
  const int dim = parity_dim(p);
  int units_needed = dim;
  for (const auto& ob : obs)
    if (ob.kind == Obligation::Kind::UnitSlot) ++units_needed;

  std::vector<std::uint64_t> mask(elements.size(), 0);
  std::vector<char> unit(elements.size(), 0);
  std::vector<std::uint64_t> parity(elements.size(), 0);
  std::map<std::string, int> jrep;
  std::vector<size_t> reps;
  for (size_t i = 0; i < elements.size(); ++i) {
    const auto lb = classify(p, elements[i]);
    for (int b = 0; b < n_struct; ++b) {
      const auto& ob = structural[static_cast<size_t>(b)];
      const bool hit =
          (ob.kind == Obligation::Kind::AClass && lb.kind == ClassLabel::Kind::A &&
           lb.a == ob.a && lb.b == ob.b) ||
          (ob.kind == Obligation::Kind::BClass && lb.kind == ClassLabel::Kind::B &&
           lb.index == ob.index) ||
          (ob.kind == Obligation::Kind::CClass && lb.kind == ClassLabel::Kind::C &&
           lb.index == ob.index);
      if (hit) mask[i] |= std::uint64_t{1} << b;
    }
    if (lb.kind == ClassLabel::Kind::Unit) {
      unit[i] = 1;
      std::uint64_t row = 0;
      const auto pv = parity_vector(p, elements[i]);
      for (size_t j = 0; j < pv.bits.size(); ++j)
        if (pv.bits[j]) row |= std::uint64_t{1} << j;
      parity[i] = row;
    }
    const auto key = j_invariant(p, elements[i]).canonical_key();
    if (!jrep.count(key)) {
      jrep[key] = static_cast<int>(i);
      reps.push_back(i);
    }
  }

  std::vector<size_t> reps_units = reps;
  for (size_t i = 0; i < elements.size(); ++i)
    if (unit[i]) reps_units.push_back(i);
  std::sort(reps_units.begin(), reps_units.end());
  reps_units.erase(std::unique(reps_units.begin(), reps_units.end()), reps_units.end());
  std::vector<size_t> all(elements.size());
  std::iota(all.begin(), all.end(), size_t{0});

  SearchResult sr;

  auto passes = [&](const std::vector<size_t>& subset) {
    std::uint64_t m = 0;
    int units = 0;
    for (size_t i : subset) {
      m |= mask[i];
      units += unit[i];
    }
    if (m != full_mask || units < units_needed) return false;
    std::uint64_t basis[64] = {};
    int rank = 0;
    for (size_t i : subset) {
      if (!unit[i]) continue;
      std::uint64_t row = parity[i];
      for (int j = 0; j < dim; ++j)
        if (((row >> j) & 1) && basis[j]) row ^= basis[j];
      if (row) {
        basis[std::countr_zero(row)] = row;
        ++rank;
      }
    }
    return rank == dim;
  };

  auto generates = [&](const std::vector<size_t>& subset) {
    std::vector<Transformation> gens;
    gens.reserve(subset.size());
    for (size_t i : subset) gens.push_back(elements[i]);
    ClosureOptions o;
    o.retain_limit = 0;
    ++sr.closures_run;
    return closure(gens, o).order == target;
  };

  // Returns 1 on witness found, 0 on pool exhausted, -1 on budget out.
  auto sweep = [&](const std::vector<size_t>& pool, int k) -> int {
    if (static_cast<int>(pool.size()) < k) return 0;
    std::vector<size_t> comb(static_cast<size_t>(k));
    std::vector<size_t> subset(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) comb[static_cast<size_t>(i)] = static_cast<size_t>(i);
    while (true) {
      if (++sr.subsets_examined > opts.max_subsets) return -1;
      for (int i = 0; i < k; ++i) subset[static_cast<size_t>(i)] = pool[comb[static_cast<size_t>(i)]];
      if (passes(subset) && generates(subset)) return 1;
      int i = k - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] == pool.size() - static_cast<size_t>(k - i))
        --i;
      if (i < 0) return 0;
      ++comb[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        comb[static_cast<size_t>(j)] = comb[static_cast<size_t>(j - 1)] + 1;
    }
  };

  for (int k = 1; k <= static_cast<int>(target); ++k) {
    for (const auto* pool : {&reps, &reps_units, &all}) {
      const int got = sweep(*pool, k);
      if (got == 1) {
        sr.status = SearchResult::Status::Exact;
        sr.rank = k;
        return sr;
      }
      if (got == -1) {
        sr.status = SearchResult::Status::Inconclusive;
        return sr;
      }
    }
    // The full pool was exhausted at this k: no k-subset generates.
  }
  sr.status = SearchResult::Status::Inconclusive;
  return sr;
}

}  // namespace pptrans
