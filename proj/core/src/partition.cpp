#include "pptrans/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pptrans {

Partition::Partition(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw std::invalid_argument("partition: at least one block required");
  }
  for (int s : sizes_) {
    if (s < 1) {
      throw std::invalid_argument("partition: block size " + std::to_string(s) +
                                  " is not positive");
    }
  }
  std::sort(sizes_.begin(), sizes_.end());
  offsets_.reserve(sizes_.size() + 1);
  offsets_.push_back(0);
  for (int s : sizes_) offsets_.push_back(offsets_.back() + s);
  degree_ = offsets_.back();
  block_of_.resize(static_cast<size_t>(degree_));
  for (int b = 0; b < block_count(); ++b) {
    for (int x = offsets_[static_cast<size_t>(b)]; x < offsets_[static_cast<size_t>(b) + 1]; ++x) {
      block_of_[static_cast<size_t>(x)] = b;
    }
  }
}

Partition Partition::parse(std::string_view spec) {
  std::vector<int> sizes;
  size_t pos = 0;
  while (true) {
    size_t next = spec.find('+', pos);
    std::string_view tok = spec.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("partition: bad token \"" + std::string(tok) + "\" in \"" +
                                  std::string(spec) + "\"");
    }
    long v = 0;
    for (char c : tok) {
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("partition: token \"" + std::string(tok) + "\" too large");
    }
    if (v < 1) {
      throw std::invalid_argument("partition: bad token \"" + std::string(tok) +
                                  "\" (block sizes start at 1)");
    }
    sizes.push_back(static_cast<int>(v));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return Partition(std::move(sizes));
}

std::string Partition::render() const {
  std::string out;
  for (auto it = sizes_.rbegin(); it != sizes_.rend(); ++it) {
    if (!out.empty()) out += '+';
    out += std::to_string(*it);
  }
  return out;
}

std::pair<int, int> Partition::block_range(int b) const {
  if (b < 0 || b >= block_count()) {
    throw std::out_of_range("partition: block index " + std::to_string(b) + " out of range");
  }
  return {offsets_[static_cast<size_t>(b)], offsets_[static_cast<size_t>(b) + 1]};
}

int Partition::block_of(int x) const {
  if (x < 0 || x >= degree_) {
    throw std::out_of_range("partition: element " + std::to_string(x) + " out of range");
  }
  return block_of_[static_cast<size_t>(x)];
}

PartitionSignature signature(const Partition& p) {
  PartitionSignature sig;
  std::map<int, int> mult;
  for (int s : p.block_sizes()) ++mult[s];
  sig.t = mult.count(1) ? mult[1] : 0;
  for (auto [size, m] : mult) {
    sig.distinct_sizes.push_back(size);
    if (size >= 2 && m >= 2) {
      sig.repeated_sizes.emplace_back(size, m);
      ++sig.p;
    } else if (size >= 2) {
      sig.unique_sizes.push_back(size);
      ++sig.q;
    }
    if (m >= 2 && (size >= 2 || sig.t >= 2)) ++sig.r_rep;
  }
  sig.s = static_cast<int>(sig.distinct_sizes.size());
  return sig;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
  std::vector<Partition> out;
  std::vector<int> parts;
  // Enumerate non-decreasing part lists summing to n.
  auto rec = [&](auto&& self, int remaining, int minimum) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int next = minimum; next <= remaining; ++next) {
      parts.push_back(next);
      self(self, remaining - next, next);
      parts.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

}  // namespace pptrans
