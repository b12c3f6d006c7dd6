#include "pptrans/permgroup.hpp"

#include <stdexcept>

namespace pptrans {

namespace {

std::vector<int> compose_images(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[x] = g[static_cast<size_t>(f[x])];
  return out;
}

std::vector<int> invert_images(const std::vector<int>& f) {
  std::vector<int> out(f.size());
  for (size_t x = 0; x < f.size(); ++x) out[static_cast<size_t>(f[x])] = static_cast<int>(x);
  return out;
}

bool is_identity_images(const std::vector<int>& f) {
  for (size_t x = 0; x < f.size(); ++x) {
    if (f[x] != static_cast<int>(x)) return false;
  }
  return true;
}

}  // namespace

PermGroup::PermGroup(const std::vector<Transformation>& gens) {
  if (gens.empty()) throw std::invalid_argument("PermGroup: no generators");
  degree_ = gens.front().degree();
  for (const auto& g : gens) {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup: degree mismatch");
    if (!g.is_permutation()) throw std::invalid_argument("PermGroup: generator is not a permutation");
  }
  for (const auto& g : gens) add_residue(g);

  // Verify the chain: every Schreier generator of every level must sift to
  // the identity through the deeper levels.  On a failure, add the residue
  // and start over from the deepest level.  Terminates because each added
  // residue properly enlarges the group described by the chain.
  long guard = 20'000'000;
  bool changed = true;
  while (changed) {
    changed = false;
    // Index-based access throughout: sifts_to_identity may grow levels_.
    for (size_t i = levels_.size(); i-- > 0 && !changed;) {
      for (size_t qi = 0; qi < levels_[i].orbit.size() && !changed; ++qi) {
        const int x = levels_[i].orbit[qi];
        for (size_t si = 0; si < levels_[i].gens.size() && !changed; ++si) {
          if (--guard < 0) throw std::runtime_error("PermGroup: verification did not settle");
          const std::vector<int> ux = levels_[i].orbit_rep[static_cast<size_t>(x)];
          const std::vector<int> s = levels_[i].gens[si].images();
          const std::vector<int> uy = levels_[i].orbit_rep[static_cast<size_t>(s[static_cast<size_t>(x)])];
          auto schreier = compose_images(compose_images(ux, s), invert_images(uy));
          if (!sifts_to_identity(std::move(schreier), i + 1)) changed = true;
        }
      }
    }
  }
}

bool PermGroup::sifts_to_identity(std::vector<int> im, size_t from) {
  size_t level = from;
  for (; level < levels_.size(); ++level) {
    const Level& lv = levels_[level];
    const int x = im[static_cast<size_t>(lv.base)];
    if (lv.orbit_rep[static_cast<size_t>(x)].empty()) break;
    im = compose_images(im, invert_images(lv.orbit_rep[static_cast<size_t>(x)]));
  }
  if (is_identity_images(im)) return true;
  if (level == levels_.size()) {
    Level lv;
    for (size_t x = 0; x < im.size(); ++x) {
      if (im[x] != static_cast<int>(x)) {
        lv.base = static_cast<int>(x);
        break;
      }
    }
    levels_.push_back(std::move(lv));
  }
  // The residue fixes every base above the stall level, so it is a valid
  // generator for each of those levels, and it can extend their orbits even
  // so (a product may route through points it moves).
  for (size_t j = 0; j <= level; ++j) {
    levels_[j].gens.emplace_back(im);
    rebuild_orbit(j);
  }
  return false;
}

void PermGroup::add_residue(const Transformation& g) { sifts_to_identity(g.images(), 0); }

void PermGroup::rebuild_orbit(size_t level) {
  Level& lv = levels_[level];
  lv.orbit_rep.assign(static_cast<size_t>(degree_), {});
  lv.orbit.clear();
  lv.orbit.push_back(lv.base);
  lv.orbit_rep[static_cast<size_t>(lv.base)] = Transformation::identity(degree_).images();
  for (size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    const int x = lv.orbit[qi];
    for (const auto& s : lv.gens) {
      const int y = s(x);
      if (lv.orbit_rep[static_cast<size_t>(y)].empty()) {
        lv.orbit_rep[static_cast<size_t>(y)] =
            compose_images(lv.orbit_rep[static_cast<size_t>(x)], s.images());
        lv.orbit.push_back(y);
      }
    }
  }
}

BigInt PermGroup::order() const {
  BigInt total = 1;
  for (const auto& lv : levels_) total *= static_cast<int>(lv.orbit.size());
  return total;
}

bool PermGroup::contains(const Transformation& g) const {
  if (g.degree() != degree_ || !g.is_permutation()) return false;
  std::vector<int> im = g.images();
  for (size_t level = 0; level < levels_.size(); ++level) {
    const Level& lv = levels_[level];
    const int x = im[static_cast<size_t>(lv.base)];
    if (lv.orbit_rep[static_cast<size_t>(x)].empty()) return false;
    im = compose_images(im, invert_images(lv.orbit_rep[static_cast<size_t>(x)]));
  }
  return is_identity_images(im);
}

}  // namespace pptrans
