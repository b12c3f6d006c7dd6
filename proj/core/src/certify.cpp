#include "pptrans/certify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "pptrans/generators.hpp"
#include "pptrans/rank.hpp"

namespace pptrans {

namespace {

// Parity of a permutation given as an image vector, via cycle lengths.
int perm_sign_bit(const std::vector<int>& im) {
  const int n = static_cast<int>(im.size());
  std::vector<char> seen(static_cast<size_t>(n), 0);
  int bit = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<size_t>(j)]; j = im[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = 1;
      ++len;
    }
    bit ^= (len - 1) & 1;
  }
  return bit;
}

std::uint64_t pack_bits(const ParityVector& pv) {
  std::uint64_t row = 0;
  for (size_t j = 0; j < pv.bits.size(); ++j)
    if (pv.bits[j]) row |= std::uint64_t{1} << j;
  return row;
}

std::vector<int> blocks_of_size(const Partition& p, int d) {
  std::vector<int> out;
  for (int b = 0; b < p.block_count(); ++b)
    if (p.block_size(b) == d) out.push_back(b);
  return out;
}

}  // namespace

std::string ParityVector::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < bits.size(); ++i) {
    if (i) out += ',';
    out += bits[i] ? '1' : '0';
  }
  out += ')';
  return out;
}

int parity_dim(const Partition& p) {
  const auto sig = signature(p);
  return 2 * sig.p + sig.q + (sig.t >= 2 ? 1 : 0);
}

ParityVector parity_vector(const Partition& p, const Transformation& f) {
  if (membership(p, f) != Membership::InS)
    throw std::invalid_argument("parity_vector: transformation is not a unit");
  const auto sig = signature(p);
  ParityVector pv;

  // A unit permutes the blocks of each size among themselves.  For a size
  // class {B_0 < ... < B_{m-1}} the outer bit is the sign of the induced
  // permutation of {0..m-1}; the inner bit is the product of the signs of
  // the maps B_i -> B_{sigma(i)} read through the order-preserving
  // identifications with {0..d-1}.
  auto class_bits = [&](const std::vector<int>& blocks, int d, int& inner, int& outer) {
    const int m = static_cast<int>(blocks.size());
    std::vector<int> sigma(static_cast<size_t>(m));
    inner = 0;
    for (int i = 0; i < m; ++i) {
      const auto [first, last] = p.block_range(blocks[static_cast<size_t>(i)]);
      const int target = p.block_of(f(first));
      const auto it = std::find(blocks.begin(), blocks.end(), target);
      sigma[static_cast<size_t>(i)] = static_cast<int>(it - blocks.begin());
      const auto [tfirst, tlast] = p.block_range(target);
      (void)last;
      (void)tlast;
      std::vector<int> local(static_cast<size_t>(d));
      for (int r = 0; r < d; ++r) local[static_cast<size_t>(r)] = f(first + r) - tfirst;
      inner ^= perm_sign_bit(local);
    }
    outer = perm_sign_bit(sigma);
  };

  for (const auto& [d, m] : sig.repeated_sizes) {
    (void)m;
    int inner = 0, outer = 0;
    class_bits(blocks_of_size(p, d), d, inner, outer);
    pv.bits.push_back(static_cast<std::uint8_t>(inner));
    pv.bits.push_back(static_cast<std::uint8_t>(outer));
  }
  for (int d : sig.unique_sizes) {
    int inner = 0, outer = 0;
    class_bits(blocks_of_size(p, d), d, inner, outer);
    pv.bits.push_back(static_cast<std::uint8_t>(inner));
  }
  if (sig.t >= 2) {
    // Singleton blocks are the first t blocks, so their elements are 0..t-1.
    std::vector<int> sing(static_cast<size_t>(sig.t));
    for (int x = 0; x < sig.t; ++x) sing[static_cast<size_t>(x)] = f(x);
    pv.bits.push_back(static_cast<std::uint8_t>(perm_sign_bit(sing)));
  }
  return pv;
}

std::string Obligation::name() const {
  switch (kind) {
    case Kind::AClass:
      return "class A(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::BClass:
      return "class B(" + std::to_string(index) + ")";
    case Kind::CClass:
      return "class C(" + std::to_string(index) + ")";
    case Kind::ParityBit:
      return "parity bit " + std::to_string(index);
    case Kind::UnitSlot:
      return "extra unit " + std::to_string(index + 1);
  }
  return "?";
}

std::vector<Obligation> obligations_for(const Partition& p) {
  const auto sig = signature(p);
  const auto& ds = sig.distinct_sizes;
  std::vector<Obligation> obs;

  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = i + 1; j < ds.size(); ++j)
      obs.push_back({Obligation::Kind::AClass, ds[i], ds[j], 0, -1});
  if (sig.t >= 2) obs.push_back({Obligation::Kind::AClass, 1, 1, 0, -1});
  for (const auto& [d, m] : sig.repeated_sizes) {
    (void)m;
    obs.push_back({Obligation::Kind::AClass, d, d, 0, -1});
  }

  for (int i = 1; i <= sig.s - 1; ++i)
    obs.push_back({Obligation::Kind::BClass, 0, 0, i, -1});

  for (int i = 1; i <= sig.s; ++i) {
    const int li = ds[static_cast<size_t>(i - 1)];
    const bool wanted = (i == 1) ? (li != 1) : (li - ds[static_cast<size_t>(i - 2)] >= 2);
    if (wanted) obs.push_back({Obligation::Kind::CClass, 0, 0, i, -1});
  }

  const int dim = parity_dim(p);
  for (int j = 0; j < dim; ++j)
    obs.push_back({Obligation::Kind::ParityBit, 0, 0, j, -1});

  // A generating set must contain max{2, dim} distinct units once the group
  // of units has order >= 3 (it is never cyclic then); the parity bits
  // account for dim of them.
  if (!is_special_case(p))
    for (int j = dim; j < std::max(2, dim); ++j)
      obs.push_back({Obligation::Kind::UnitSlot, 0, 0, j - dim, -1});

  return obs;
}

Certificate certify_lower_bound(const Partition& p, const std::vector<Transformation>& U) {
  Certificate cert;
  cert.obligations = obligations_for(p);

  std::vector<ClassLabel> labels;
  labels.reserve(U.size());
  for (size_t i = 0; i < U.size(); ++i) {
    if (!in_T(p, U[i]))
      throw std::invalid_argument("certify_lower_bound: element " + std::to_string(i) +
                                  " is not in T(X,P)");
    labels.push_back(classify(p, U[i]));
  }

  for (auto& ob : cert.obligations) {
    if (ob.kind == Obligation::Kind::ParityBit || ob.kind == Obligation::Kind::UnitSlot) continue;
    for (size_t i = 0; i < U.size(); ++i) {
      const auto& lb = labels[i];
      bool hit = false;
      switch (ob.kind) {
        case Obligation::Kind::AClass:
          hit = lb.kind == ClassLabel::Kind::A && lb.a == ob.a && lb.b == ob.b;
          break;
        case Obligation::Kind::BClass:
          hit = lb.kind == ClassLabel::Kind::B && lb.index == ob.index;
          break;
        case Obligation::Kind::CClass:
          hit = lb.kind == ClassLabel::Kind::C && lb.index == ob.index;
          break;
        default:
          break;
      }
      if (hit) {
        ob.satisfied_by = static_cast<int>(i);
        break;
      }
    }
  }

  // Units must span the parity space.  Row-reduce their parity vectors in
  // order; the unit installing the pivot of bit j discharges that bit.
  const int dim = parity_dim(p);
  std::vector<std::uint64_t> basis(static_cast<size_t>(dim), 0);
  std::vector<int> pivot_owner(static_cast<size_t>(dim), -1);
  std::vector<char> used(U.size(), 0);
  for (size_t i = 0; i < U.size(); ++i) {
    if (labels[i].kind != ClassLabel::Kind::Unit) continue;
    std::uint64_t row = pack_bits(parity_vector(p, U[i]));
    for (int j = 0; j < dim; ++j)
      if (((row >> j) & 1) && basis[static_cast<size_t>(j)]) row ^= basis[static_cast<size_t>(j)];
    if (row) {
      const int j = std::countr_zero(row);
      basis[static_cast<size_t>(j)] = row;
      pivot_owner[static_cast<size_t>(j)] = static_cast<int>(i);
      used[i] = 1;
    }
  }
  for (auto& ob : cert.obligations)
    if (ob.kind == Obligation::Kind::ParityBit)
      ob.satisfied_by = pivot_owner[static_cast<size_t>(ob.index)];

  size_t next = 0;
  for (auto& ob : cert.obligations) {
    if (ob.kind != Obligation::Kind::UnitSlot) continue;
    while (next < U.size() && (labels[next].kind != ClassLabel::Kind::Unit || used[next])) ++next;
    if (next < U.size()) {
      ob.satisfied_by = static_cast<int>(next);
      used[next] = 1;
      ++next;
    }
  }

  cert.pass = true;
  for (const auto& ob : cert.obligations) {
    if (ob.satisfied_by < 0) {
      cert.pass = false;
      cert.notes.push_back("unmet: " + ob.name());
    }
  }
  return cert;
}

Certificate certify_minimality(const Partition& p) {
  if (is_special_case(p))
    throw SpecialCaseError("certify_minimality: group of units of " + p.render() +
                           " has order < 3");
  const auto gs = full_generating_set(p);
  Certificate cert = certify_lower_bound(p, gs.elements);

  const auto rb = rank_total(p);
  if (static_cast<int>(gs.elements.size()) != rb.total) {
    cert.pass = false;
    cert.notes.push_back("set has " + std::to_string(gs.elements.size()) +
                         " elements, formula gives " + std::to_string(rb.total));
  }
  if (cert.obligations.size() != gs.elements.size()) {
    cert.pass = false;
    cert.notes.push_back("obligation count " + std::to_string(cert.obligations.size()) +
                         " != set size " + std::to_string(gs.elements.size()));
  }

  std::vector<int> uses(gs.elements.size(), 0);
  for (const auto& ob : cert.obligations)
    if (ob.satisfied_by >= 0) ++uses[static_cast<size_t>(ob.satisfied_by)];
  for (size_t i = 0; i < uses.size(); ++i) {
    if (uses[i] != 1) {
      cert.pass = false;
      cert.notes.push_back("element " + std::to_string(i) + " discharges " +
                           std::to_string(uses[i]) + " obligations");
    }
  }
  return cert;
}

}  // namespace pptrans
