#include "pptrans/transformation.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pptrans {

Transformation::Transformation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("transformation: degree 0 not allowed");
  const int n = degree();
  for (int v : images_) {
    if (v < 0 || v >= n) {
      throw std::invalid_argument("transformation: image " + std::to_string(v) +
                                  " out of range for degree " + std::to_string(n));
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  return Transformation(std::move(im));
}

Transformation Transformation::parse(std::string_view text) {
  std::vector<int> images;
  size_t pos = 0;
  while (true) {
    size_t next = text.find(',', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("transformation: bad token \"" + std::string(tok) + "\" in \"" +
                                  std::string(text) + "\"");
    }
    long v = 0;
    for (char c : tok) {
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("transformation: token \"" + std::string(tok) + "\" too large");
    }
    images.push_back(static_cast<int>(v));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Transformation(std::move(images));
}

std::string Transformation::render() const {
  std::string out;
  for (int v : images_) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

bool Transformation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (images_[static_cast<size_t>(i)] != i) return false;
  }
  return true;
}

bool Transformation::is_permutation() const {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

std::vector<int> Transformation::image_set() const {
  std::vector<int> im = images_;
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.degree() != g.degree()) {
    throw std::invalid_argument("compose: degree mismatch " + std::to_string(f.degree()) +
                                " vs " + std::to_string(g.degree()));
  }
  std::vector<int> im(static_cast<size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) im[static_cast<size_t>(x)] = g(f(x));
  return Transformation(std::move(im));
}

Transformation inverse(const Transformation& f) {
  if (!f.is_permutation()) throw std::invalid_argument("inverse: not a permutation");
  std::vector<int> im(static_cast<size_t>(f.degree()));
  for (int x = 0; x < f.degree(); ++x) im[static_cast<size_t>(f(x))] = x;
  return Transformation(std::move(im));
}

const Transformation& BlockMap::get() const {
  if (!map_.has_value()) throw std::logic_error("block map undefined");
  return *map_;
}

BlockMap induced_block_map(const Partition& p, const Transformation& f) {
  if (f.degree() != p.degree()) {
    throw std::invalid_argument("block map: transformation degree " + std::to_string(f.degree()) +
                                " does not match partition degree " + std::to_string(p.degree()));
  }
  std::vector<int> im(static_cast<size_t>(p.block_count()));
  for (int b = 0; b < p.block_count(); ++b) {
    auto [first, last] = p.block_range(b);
    const int target = p.block_of(f(first));
    for (int x = first + 1; x < last; ++x) {
      if (p.block_of(f(x)) != target) return BlockMap();
    }
    im[static_cast<size_t>(b)] = target;
  }
  return BlockMap(Transformation(std::move(im)));
}

Membership membership(const Partition& p, const Transformation& f) {
  BlockMap bm = induced_block_map(p, f);
  if (!bm.defined()) return Membership::NotInT;
  if (f.is_permutation()) return Membership::InS;
  if (bm.get().is_permutation()) return Membership::InSigma;
  return Membership::InT;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::NotInT: return "not in T";
    case Membership::InT: return "T";
    case Membership::InSigma: return "Sigma";
    case Membership::InS: return "S";
  }
  return "?";
}

std::vector<std::vector<int>> kernel_classes_on_range(const Transformation& f, int first, int last) {
  std::map<int, std::vector<int>> by_image;
  for (int x = first; x < last; ++x) by_image[f(x)].push_back(x);
  std::vector<std::vector<int>> classes;
  classes.reserve(by_image.size());
  for (auto& [img, cls] : by_image) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace pptrans
