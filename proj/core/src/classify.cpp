#include "pptrans/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace pptrans {

namespace {

// Lexicographically least row-sorted form of the landing matrix over all
// column orders.  Equal columns are interchangeable, so next_permutation on
// the sorted column list walks each distinct arrangement exactly once.
std::vector<std::vector<int>> canonical_landing(const std::vector<std::vector<int>>& rows) {
  const size_t m = rows.size();
  const size_t d = rows.front().size();
  std::vector<std::vector<int>> cols(d, std::vector<int>(m));
  for (size_t r = 0; r < m; ++r)
    for (size_t c = 0; c < d; ++c) cols[c][static_cast<size_t>(r)] = rows[r][c];
  std::sort(cols.begin(), cols.end());

  double arrangements = 1.0, run = 1.0;
  for (size_t c = 1; c <= d; ++c) {
    arrangements *= static_cast<double>(c);
    if (c < d && cols[c] == cols[c - 1])
      run += 1.0;
    else {
      for (double k = 2.0; k <= run; k += 1.0) arrangements /= k;
      run = 1.0;
    }
  }
  if (arrangements > 5e6)
    throw std::runtime_error("j_invariant: landing matrix too large to canonicalize");

  std::vector<std::vector<int>> best;
  std::vector<std::vector<int>> cand(m, std::vector<int>(d));
  do {
    for (size_t r = 0; r < m; ++r)
      for (size_t c = 0; c < d; ++c) cand[r][c] = cols[c][r];
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return best;
}

}  // namespace

std::string JInvariant::to_string() const {
  std::string out;
  for (const auto& [key, lists] : table) {
    if (!out.empty()) out += "; ";
    out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): ";
    for (size_t i = 0; i < lists.size(); ++i) {
      if (i) out += " ";
      out += "{";
      for (size_t j = 0; j < lists[i].size(); ++j) {
        if (j) out += ",";
        out += std::to_string(lists[i][j]);
      }
      out += "}";
    }
  }
  return out;
}

std::string JInvariant::canonical_key() const {
  std::string out = to_string();
  for (const auto& [size, rows] : refinement) {
    out += "|" + std::to_string(size) + ":";
    for (const auto& row : rows) {
      out += "[";
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(row[i]);
      }
      out += "]";
    }
  }
  return out;
}

JInvariant j_invariant(const Partition& p, const Transformation& f) {
  BlockMap bm = induced_block_map(p, f);
  if (!bm.defined()) {
    throw std::invalid_argument("j_invariant: transformation does not preserve the partition");
  }
  JInvariant inv;
  std::vector<std::vector<std::vector<int>>> landing(
      static_cast<size_t>(p.block_count()));
  for (int b = 0; b < p.block_count(); ++b) {
    auto [first, last] = p.block_range(b);
    const int target = bm.get()(b);
    std::vector<int> sizes;
    for (const auto& cls : kernel_classes_on_range(f, first, last)) {
      sizes.push_back(static_cast<int>(cls.size()));
    }
    std::sort(sizes.rbegin(), sizes.rend());
    inv.table[{p.block_size(b), p.block_size(target)}].push_back(std::move(sizes));

    auto [tfirst, tlast] = p.block_range(target);
    std::vector<int> row(static_cast<size_t>(tlast - tfirst), 0);
    for (int x = first; x < last; ++x) ++row[static_cast<size_t>(f(x) - tfirst)];
    landing[static_cast<size_t>(target)].push_back(std::move(row));
  }
  for (auto& [key, lists] : inv.table) {
    std::sort(lists.begin(), lists.end(), std::greater<>());
  }
  for (int b = 0; b < p.block_count(); ++b) {
    auto& rows = landing[static_cast<size_t>(b)];
    if (rows.empty()) continue;
    inv.refinement.emplace_back(p.block_size(b), canonical_landing(rows));
  }
  std::sort(inv.refinement.begin(), inv.refinement.end());
  return inv;
}

bool same_double_coset(const Partition& p, const Transformation& f, const Transformation& g) {
  return j_invariant(p, f) == j_invariant(p, g);
}

std::string ClassLabel::to_string() const {
  switch (kind) {
    case Kind::Unit: return "unit";
    case Kind::SigmaOnly: return "Sigma";
    case Kind::A: return "A(" + std::to_string(a) + "," + std::to_string(b) + ")";
    case Kind::B: return "B(" + std::to_string(index) + ")";
    case Kind::C: return "C(" + std::to_string(index) + ")";
    case Kind::PlainT: return "T";
  }
  return "?";
}

bool ClassLabel::same_class(const ClassLabel& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::A: return a == other.a && b == other.b;
    case Kind::B:
    case Kind::C: return index == other.index;
    default: return true;
  }
}

namespace {

// Per-block behaviour of f: target block and whether the restriction is
// injective / onto the target.
struct BlockBehaviour {
  int target = -1;
  bool injective = false;
  bool surjective = false;
  int image_size = 0;
};

std::vector<BlockBehaviour> block_behaviours(const Partition& p, const Transformation& f,
                                             const Transformation& bar) {
  std::vector<BlockBehaviour> out(static_cast<size_t>(p.block_count()));
  for (int b = 0; b < p.block_count(); ++b) {
    auto [first, last] = p.block_range(b);
    std::vector<int> im;
    im.reserve(static_cast<size_t>(last - first));
    for (int x = first; x < last; ++x) im.push_back(f(x));
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    BlockBehaviour bb;
    bb.target = bar(b);
    bb.image_size = static_cast<int>(im.size());
    bb.injective = bb.image_size == p.block_size(b);
    bb.surjective = bb.image_size == p.block_size(bb.target);
    out[static_cast<size_t>(b)] = bb;
  }
  return out;
}

}  // namespace

ClassLabel classify(const Partition& p, const Transformation& f) {
  const Membership m = membership(p, f);
  if (m == Membership::NotInT) {
    throw std::invalid_argument("classify: transformation does not preserve the partition");
  }
  ClassLabel label;
  if (m == Membership::InS) {
    label.kind = ClassLabel::Kind::Unit;
    return label;
  }

  const Transformation bar = induced_block_map(p, f).get();
  const auto behaviours = block_behaviours(p, f, bar);
  const PartitionSignature sig = signature(p);
  const auto& sizes = sig.distinct_sizes;

  if (m == Membership::InT) {
    // A: injective on every block, block map merges exactly one pair.
    bool all_injective = true;
    for (const auto& bb : behaviours) all_injective = all_injective && bb.injective;
    if (all_injective) {
      std::vector<std::vector<int>> preimages(static_cast<size_t>(p.block_count()));
      for (int b = 0; b < p.block_count(); ++b) {
        preimages[static_cast<size_t>(bar(b))].push_back(b);
      }
      bool clean = true;
      bool merged = false;
      int image_blocks = 0;
      for (const auto& pre : preimages) {
        if (!pre.empty()) ++image_blocks;
        if (pre.size() == 2) {
          if (merged) clean = false;
          merged = true;
          label.blocks = {pre[0], pre[1]};
        } else if (pre.size() > 2) {
          clean = false;
        }
      }
      if (clean && merged && image_blocks == p.block_count() - 1) {
        label.kind = ClassLabel::Kind::A;
        int sa = p.block_size(label.blocks[0]);
        int sb = p.block_size(label.blocks[1]);
        if (sa > sb) std::swap(sa, sb);
        label.a = sa;
        label.b = sb;
        return label;
      }
    }
    label.kind = ClassLabel::Kind::PlainT;
    return label;
  }

  // f in Sigma \ S.  Try B, then C.
  {
    // B: exactly one block strictly grows (injectively), exactly one block
    // strictly shrinks (surjectively), sizes form a consecutive distinct pair,
    // everything else maps bijectively to a block of equal size.
    int up = -1, down = -1;
    bool rest_ok = true;
    for (int b = 0; b < p.block_count() && rest_ok; ++b) {
      const auto& bb = behaviours[static_cast<size_t>(b)];
      const int sa = p.block_size(b), sb = p.block_size(bb.target);
      if (sa == sb && bb.injective && bb.surjective) continue;
      if (sa < sb && bb.injective) {
        if (up >= 0) rest_ok = false;
        up = b;
      } else if (sa > sb && bb.surjective) {
        if (down >= 0) rest_ok = false;
        down = b;
      } else {
        rest_ok = false;
      }
    }
    if (rest_ok && up >= 0 && down >= 0) {
      const int li = p.block_size(up);
      const int lnext = p.block_size(behaviours[static_cast<size_t>(up)].target);
      const int down_from = p.block_size(down);
      const int down_to = p.block_size(behaviours[static_cast<size_t>(down)].target);
      auto it = std::find(sizes.begin(), sizes.end(), li);
      const int i = static_cast<int>(it - sizes.begin()) + 1;  // 1-based
      const bool consecutive =
          it != sizes.end() && i < sig.s && sizes[static_cast<size_t>(i)] == lnext;
      if (consecutive && down_from == lnext && down_to == li) {
        label.kind = ClassLabel::Kind::B;
        label.index = i;
        label.blocks = {up, down};
        return label;
      }
    }
  }
  {
    // C: every block to a block of its own size, exactly one block one short
    // of injective, the rest injective.
    int deficient = -1;
    bool ok = true;
    for (int b = 0; b < p.block_count() && ok; ++b) {
      const auto& bb = behaviours[static_cast<size_t>(b)];
      if (p.block_size(bb.target) != p.block_size(b)) {
        ok = false;
      } else if (bb.injective) {
        continue;
      } else if (bb.image_size == p.block_size(b) - 1) {
        if (deficient >= 0) ok = false;
        deficient = b;
      } else {
        ok = false;
      }
    }
    if (ok && deficient >= 0) {
      auto it = std::find(sizes.begin(), sizes.end(), p.block_size(deficient));
      label.kind = ClassLabel::Kind::C;
      label.index = static_cast<int>(it - sizes.begin()) + 1;  // 1-based
      label.blocks = {deficient, -1};
      return label;
    }
  }
  label.kind = ClassLabel::Kind::SigmaOnly;
  return label;
}

}  // namespace pptrans
