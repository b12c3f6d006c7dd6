#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pptrans {

/// Published rank values for the partitions of 3 to 7, keyed by the
/// canonical descending render ("3+2+1").
const std::vector<std::pair<std::string, int>>& reference_ranks();

/// Published monoid sizes for the same partitions.  Two entries ("2+1" and
/// "3+1") are known misprints; see order_entry_is_anomalous.
const std::vector<std::pair<std::string, std::int64_t>>& reference_orders();

std::optional<int> reference_rank(const std::string& partition);
std::optional<std::int64_t> reference_order(const std::string& partition);

/// True for the two published size entries that disagree with both the
/// product formula and exhaustive counting ("2+1": listed 6, actual 15;
/// "3+1": listed 100, actual 112).
bool order_entry_is_anomalous(const std::string& partition);

}  // namespace pptrans
