#include "pptrans/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "pptrans/counting.hpp"
#include "pptrans/permgroup.hpp"
#include "pptrans/rank.hpp"

namespace pptrans {

namespace {

std::vector<int> identity_images(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  return im;
}

Transformation swap_points(int n, int a, int b) {
  auto im = identity_images(n);
  std::swap(im[static_cast<size_t>(a)], im[static_cast<size_t>(b)]);
  return Transformation(im);
}

// Full cycle points[0] -> points[1] -> ... -> points[0].
Transformation cycle_points(int n, const std::vector<int>& points) {
  auto im = identity_images(n);
  for (size_t i = 0; i + 1 < points.size(); ++i)
    im[static_cast<size_t>(points[i])] = points[i + 1];
  im[static_cast<size_t>(points.back())] = points.front();
  return Transformation(im);
}

// An odd-length cycle generating, together with the swap of the first two
// points, the full symmetric group on the points: the whole cycle when the
// count is odd, the cycle skipping the first point when it is even.
Transformation odd_cycle(int n, const std::vector<int>& points) {
  if (points.size() % 2 == 1) return cycle_points(n, points);
  if (points.size() == 2) return Transformation(identity_images(n));
  return cycle_points(n, std::vector<int>(points.begin() + 1, points.end()));
}

// Merge of two permutations with disjoint supports.
Transformation merge(const Transformation& f, const Transformation& g) {
  return compose(f, g);
}

std::vector<int> block_points(const Partition& p, int b) {
  const auto [first, last] = p.block_range(b);
  std::vector<int> pts(static_cast<size_t>(last - first));
  std::iota(pts.begin(), pts.end(), first);
  return pts;
}

std::vector<int> blocks_of_size(const Partition& p, int d) {
  std::vector<int> out;
  for (int b = 0; b < p.block_count(); ++b)
    if (p.block_size(b) == d) out.push_back(b);
  return out;
}

void shuffle_vec(std::vector<int>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

WreathGenPair wreath_pair(const Partition& p, const std::vector<int>& blocks,
                          std::uint64_t seed) {
  const int m = static_cast<int>(blocks.size());
  if (m < 2) throw std::invalid_argument("wreath_pair: need at least 2 blocks");
  const int n = p.block_size(blocks.front());
  if (n < 2) throw std::invalid_argument("wreath_pair: block size must be >= 2");
  for (int b : blocks)
    if (p.block_size(b) != n)
      throw std::invalid_argument("wreath_pair: blocks must share one size");

  const int deg = p.degree();
  auto first_of = [&](int j) { return p.block_range(blocks[static_cast<size_t>(j)]).first; };

  const BigInt want = [&] {
    BigInt f = factorial(n), w = 1;
    for (int i = 0; i < m; ++i) w *= f;
    return w * factorial(m);
  }();

  auto build = [&](const std::vector<int>& outer, const std::vector<std::vector<int>>& inner) {
    auto im = identity_images(deg);
    for (int j = 0; j < m; ++j)
      for (int r = 0; r < n; ++r)
        im[static_cast<size_t>(first_of(j) + r)] =
            first_of(outer[static_cast<size_t>(j)]) +
            inner[static_cast<size_t>(j)][static_cast<size_t>(r)];
    return Transformation(im);
  };

  auto verified = [&](const Transformation& x, const Transformation& y) {
    return PermGroup({x, y}).order() == want;
  };

  // A shift of the blocks advancing the first one's contents by one step.
  std::vector<int> shift(static_cast<size_t>(m));
  for (int j = 0; j < m; ++j) shift[static_cast<size_t>(j)] = (j + 1) % m;
  std::vector<std::vector<int>> twist(static_cast<size_t>(m), identity_images(n));
  for (int r = 0; r < n; ++r) twist[0][static_cast<size_t>(r)] = (r + 1) % n;
  const Transformation x = build(shift, twist);

  // Mixed candidates for the second generator.
  std::vector<int> swap01 = identity_images(m);
  std::swap(swap01[0], swap01[1]);
  const std::vector<std::vector<int>> plain(static_cast<size_t>(m), identity_images(n));
  auto twisted = plain;
  std::swap(twisted[0][0], twisted[0][1]);

  for (const auto& y : {build(swap01, twisted), build(swap01, plain), build(shift, plain)}) {
    if (verified(x, y)) return {x, y};
  }

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull ^
                      (static_cast<std::uint64_t>(n) << 20) ^ static_cast<std::uint64_t>(m));
  for (int attempt = 0; attempt < 500; ++attempt) {
    auto random_element = [&] {
      std::vector<int> outer = identity_images(m);
      shuffle_vec(outer, rng);
      std::vector<std::vector<int>> inner(static_cast<size_t>(m), identity_images(n));
      for (auto& v : inner) shuffle_vec(v, rng);
      return build(outer, inner);
    };
    const Transformation rx = random_element(), ry = random_element();
    if (verified(rx, ry)) return {rx, ry};
  }
  throw std::runtime_error("wreath_pair: no generating pair found for n=" + std::to_string(n) +
                           ", m=" + std::to_string(m));
}

std::vector<Transformation> units_generators(const Partition& p, std::uint64_t seed) {
  if (is_special_case(p))
    throw SpecialCaseError("units_generators: group of units of " + p.render() +
                           " has order < 3");
  const auto sig = signature(p);
  const int deg = p.degree();

  std::vector<WreathGenPair> pairs;
  for (const auto& [d, m] : sig.repeated_sizes) {
    (void)m;
    pairs.push_back(wreath_pair(p, blocks_of_size(p, d), seed));
  }
  const int k = static_cast<int>(pairs.size());

  // Point sets of the symmetric factors: one per unique size >= 2, plus the
  // singleton blocks acting as one factor when there are at least two.
  std::vector<std::vector<int>> factors;
  for (int d : sig.unique_sizes) factors.push_back(block_points(p, blocks_of_size(p, d).front()));
  if (sig.t >= 2) {
    std::vector<int> sing(static_cast<size_t>(sig.t));
    std::iota(sing.begin(), sing.end(), 0);
    factors.push_back(sing);
  }
  const int u = static_cast<int>(factors.size());

  std::vector<Transformation> gens;
  if (u == 0) {
    for (const auto& pr : pairs) {
      gens.push_back(pr.x);
      gens.push_back(pr.y);
    }
  } else if (u == 1) {
    const auto& pts = factors.front();
    if (k == 0) {
      gens.push_back(swap_points(deg, pts[0], pts[1]));
      gens.push_back(cycle_points(deg, pts));
    } else {
      for (int i = 0; i + 1 < k; ++i) {
        gens.push_back(pairs[static_cast<size_t>(i)].x);
        gens.push_back(pairs[static_cast<size_t>(i)].y);
      }
      gens.push_back(pairs.back().x);
      gens.push_back(merge(pairs.back().y, cycle_points(deg, pts)));
      gens.push_back(swap_points(deg, pts[0], pts[1]));
    }
  } else {
    for (const auto& pr : pairs) {
      gens.push_back(pr.x);
      gens.push_back(pr.y);
    }
    for (int i = 0; i + 1 < u; ++i) {
      const auto& a = factors[static_cast<size_t>(i)];
      gens.push_back(merge(swap_points(deg, a[0], a[1]),
                           odd_cycle(deg, factors[static_cast<size_t>(i + 1)])));
    }
    const auto& last = factors.back();
    gens.push_back(merge(odd_cycle(deg, factors.front()), swap_points(deg, last[0], last[1])));
  }

  if (static_cast<int>(gens.size()) != std::max(2, 2 * k + u))
    throw std::logic_error("units_generators: unexpected generator count");
  if (PermGroup(gens).order() != order_S(p))
    throw std::logic_error("units_generators: generators do not span the group of units");
  return gens;
}

std::vector<Transformation> a_representatives(const Partition& p) {
  const auto sig = signature(p);
  const auto& ds = sig.distinct_sizes;
  const int deg = p.degree();
  std::vector<Transformation> out;

  auto inject = [&](int src, int dst) {
    auto im = identity_images(deg);
    const auto [sf, sl] = p.block_range(src);
    const int df = p.block_range(dst).first;
    for (int x = sf; x < sl; ++x) im[static_cast<size_t>(x)] = df + (x - sf);
    return Transformation(im);
  };

  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = i + 1; j < ds.size(); ++j)
      out.push_back(inject(blocks_of_size(p, ds[i]).front(), blocks_of_size(p, ds[j]).front()));
  for (int d : ds) {
    const auto bs = blocks_of_size(p, d);
    if (bs.size() >= 2) out.push_back(inject(bs[0], bs[1]));
  }
  return out;
}

std::vector<Transformation> bc_representatives(const Partition& p) {
  const auto sig = signature(p);
  const auto& ds = sig.distinct_sizes;
  const int deg = p.degree();
  std::vector<Transformation> out;

  for (size_t i = 0; i + 1 < ds.size(); ++i) {
    const int up = blocks_of_size(p, ds[i]).front();
    const int down = blocks_of_size(p, ds[i + 1]).front();
    const auto [uf, ul] = p.block_range(up);
    const auto [df, dl] = p.block_range(down);
    const int a = ds[i];
    auto im = identity_images(deg);
    for (int x = uf; x < ul; ++x) im[static_cast<size_t>(x)] = df + (x - uf);
    for (int x = df; x < dl; ++x) im[static_cast<size_t>(x)] = uf + std::min(x - df, a - 1);
    out.push_back(Transformation(im));
  }
  for (size_t i = 0; i < ds.size(); ++i) {
    const int li = ds[i];
    const bool wanted = (i == 0) ? (li != 1) : (li - ds[i - 1] >= 2);
    if (!wanted) continue;
    const auto [f, l] = p.block_range(blocks_of_size(p, li).front());
    auto im = identity_images(deg);
    im[static_cast<size_t>(l - 1)] = l - 2;
    (void)f;
    out.push_back(Transformation(im));
  }
  return out;
}

GeneratingSet full_generating_set(const Partition& p, std::uint64_t seed) {
  GeneratingSet gs;
  std::vector<Transformation> units;
  if (is_special_case(p)) {
    const int deg = p.degree();
    if (deg == 1) {
      units.push_back(Transformation::identity(1));
    } else {
      // "2", "1+1", "2+1": the group of units is one swap.
      const int b = p.block_count() - 1;  // unique largest block, or second singleton
      const auto [f, l] = p.block_range(b);
      units.push_back(l - f == 2 ? swap_points(deg, f, f + 1) : swap_points(deg, 0, 1));
    }
  } else {
    units = units_generators(p, seed);
  }

  auto add = [&](const Transformation& t, const std::string& note) {
    gs.elements.push_back(t);
    gs.provenance.push_back(classify(p, t));
    gs.notes.push_back(note);
  };
  for (const auto& t : units) add(t, "unit part");
  for (const auto& t : a_representatives(p)) {
    const auto lb = classify(p, t);
    add(t, "merges a size-" + std::to_string(lb.a) + " block into a size-" +
               std::to_string(lb.b) + " block");
  }
  for (const auto& t : bc_representatives(p)) {
    const auto lb = classify(p, t);
    add(t, lb.kind == ClassLabel::Kind::B
               ? "trades the lowest blocks of two consecutive sizes"
               : "identifies two points of one block");
  }
  return gs;
}

namespace {

// Swap of adjacent blocks k, k+1: the smaller is placed order-preservingly
// on the leading section of the larger, the larger collapsed tail-first onto
// the smaller; identity elsewhere.
Transformation adjacent_swap(const Partition& p, int k) {
  const auto [af, al] = p.block_range(k);
  const auto [bf, bl] = p.block_range(k + 1);
  const int a = al - af;
  auto im = identity_images(p.degree());
  for (int x = af; x < al; ++x) im[static_cast<size_t>(x)] = bf + (x - af);
  for (int x = bf; x < bl; ++x) im[static_cast<size_t>(x)] = af + std::min(x - bf, a - 1);
  return Transformation(im);
}

Transformation block_transposition(const Partition& p, int i, int j) {
  Transformation res = adjacent_swap(p, j - 1);
  for (int k = j - 2; k >= i; --k) res = compose(res, adjacent_swap(p, k));
  for (int k = i + 1; k <= j - 1; ++k) res = compose(res, adjacent_swap(p, k));
  return res;
}

// cyc lists block indices with the minimum first.
Transformation cycle_companion(const Partition& p, std::vector<int> cyc) {
  if (cyc.size() <= 1) return Transformation::identity(p.degree());
  if (cyc.size() == 2) return block_transposition(p, cyc[0], cyc[1]);

  std::vector<int> rest(cyc.begin() + 1, cyc.end());
  std::rotate(rest.begin(), std::min_element(rest.begin(), rest.end()), rest.end());
  const Transformation h1 = cycle_companion(p, rest);

  const int x0 = cyc[0], x1 = cyc[1], xlast = cyc.back();

  // h1 carries the last cycle block into block x1; realign enough of that
  // image onto the leading section of x1, which the swap with x0 treats as
  // a transversal of its collapse.
  std::set<int> w;
  {
    const auto [f, l] = p.block_range(xlast);
    for (int x = f; x < l; ++x) w.insert(h1(x));
  }
  const auto [x1f, x1l] = p.block_range(x1);
  const int a = p.block_size(x0);
  auto im = identity_images(p.degree());
  {
    std::vector<char> is_source(static_cast<size_t>(x1l - x1f), 0);
    std::vector<char> taken(static_cast<size_t>(x1l - x1f), 0);
    auto it = w.begin();
    for (int r = 0; r < a; ++r, ++it) {
      im[static_cast<size_t>(*it)] = x1f + r;
      is_source[static_cast<size_t>(*it - x1f)] = 1;
      taken[static_cast<size_t>(r)] = 1;
    }
    int next = 0;
    for (int x = x1f; x < x1l; ++x) {
      if (is_source[static_cast<size_t>(x - x1f)]) continue;
      while (taken[static_cast<size_t>(next)]) ++next;
      im[static_cast<size_t>(x)] = x1f + next;
      taken[static_cast<size_t>(next)] = 1;
    }
  }
  const Transformation g(im);

  return compose(compose(h1, g), block_transposition(p, x0, x1));
}

}  // namespace

Transformation companion_of(const Partition& p, const std::vector<int>& tau) {
  const int nb = p.block_count();
  if (static_cast<int>(tau.size()) != nb)
    throw std::invalid_argument("companion_of: wrong number of block images");
  {
    std::vector<char> seen(static_cast<size_t>(nb), 0);
    for (int v : tau) {
      if (v < 0 || v >= nb || seen[static_cast<size_t>(v)])
        throw std::invalid_argument("companion_of: not a permutation of the blocks");
      seen[static_cast<size_t>(v)] = 1;
    }
  }

  Transformation acc = Transformation::identity(p.degree());
  std::vector<char> visited(static_cast<size_t>(nb), 0);
  for (int start = 0; start < nb; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    std::vector<int> cyc;
    for (int b = start; !visited[static_cast<size_t>(b)]; b = tau[static_cast<size_t>(b)]) {
      visited[static_cast<size_t>(b)] = 1;
      cyc.push_back(b);
    }
    if (cyc.size() >= 2) acc = compose(acc, cycle_companion(p, cyc));
  }
  return acc;
}

SigmaDecomposition decompose_sigma(const Partition& p, const Transformation& f) {
  if (!in_Sigma(p, f)) throw std::invalid_argument("decompose_sigma: not in Sigma(X,P)");
  const int deg = p.degree();
  const auto tau = induced_block_map(p, f).get();

  auto e_im = identity_images(deg);
  for (int b = 0; b < p.block_count(); ++b) {
    const auto [bf, bl] = p.block_range(b);
    for (const auto& cls : kernel_classes_on_range(f, bf, bl))
      for (int x : cls) e_im[static_cast<size_t>(x)] = cls.front();
  }
  const Transformation e(e_im);

  // Companion following f's block permutation whose image on each growing
  // block covers f's values there, so the matching below can always land.
  auto g_im = identity_images(deg);
  for (int b = 0; b < p.block_count(); ++b) {
    const auto [bf, bl] = p.block_range(b);
    const int tb = tau(b);
    const auto [tf, tl] = p.block_range(tb);
    const int a = bl - bf, bsz = tl - tf;
    if (a < bsz) {
      std::set<int> vals;
      for (int x = bf; x < bl; ++x) vals.insert(f(x));
      for (int y = tf; y < tl && static_cast<int>(vals.size()) < a; ++y) vals.insert(y);
      auto it = vals.begin();
      for (int x = bf; x < bl; ++x, ++it) g_im[static_cast<size_t>(x)] = *it;
    } else if (a == bsz) {
      for (int x = bf; x < bl; ++x) g_im[static_cast<size_t>(x)] = tf + (x - bf);
    } else {
      for (int x = bf; x < bl; ++x) g_im[static_cast<size_t>(x)] = tf + std::min(x - bf, bsz - 1);
    }
  }
  const Transformation g(g_im);

  auto h_im = identity_images(deg);
  for (int b = 0; b < p.block_count(); ++b) {
    const auto [bf, bl] = p.block_range(b);
    std::vector<char> used(static_cast<size_t>(bl - bf), 0);
    std::vector<char> placed(static_cast<size_t>(bl - bf), 0);
    for (const auto& cls : kernel_classes_on_range(f, bf, bl)) {
      const int r = cls.front();
      const int val = f(r);
      for (int y = bf; y < bl; ++y) {
        if (!used[static_cast<size_t>(y - bf)] && g(y) == val) {
          h_im[static_cast<size_t>(r)] = y;
          used[static_cast<size_t>(y - bf)] = 1;
          placed[static_cast<size_t>(r - bf)] = 1;
          break;
        }
      }
    }
    int next = bf;
    for (int x = bf; x < bl; ++x) {
      if (placed[static_cast<size_t>(x - bf)]) continue;
      while (used[static_cast<size_t>(next - bf)]) ++next;
      h_im[static_cast<size_t>(x)] = next;
      used[static_cast<size_t>(next - bf)] = 1;
    }
  }
  const Transformation h(h_im);

  if (compose(compose(e, h), g) != f)
    throw std::logic_error("decompose_sigma: factorization failed");
  return {e, h, g};
}

}  // namespace pptrans
