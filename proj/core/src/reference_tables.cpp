#include "pptrans/reference_tables.hpp"

namespace pptrans {

const std::vector<std::pair<std::string, int>>& reference_ranks() {
  static const std::vector<std::pair<std::string, int>> table = {
      {"2+1", 3},
      {"2+1+1", 5},
      {"2+2", 4},
      {"3+1", 5},
      {"2+1+1+1", 5},
      {"2+2+1", 5},
      {"3+1+1", 6},
      {"3+2", 5},
      {"4+1", 5},
      {"2+1+1+1+1", 5},
      {"2+2+1+1", 7},
      {"2+2+2", 4},
      {"3+1+1+1", 6},
      {"3+2+1", 7},
      {"3+3", 4},
      {"4+1+1", 6},
      {"4+2", 6},
      {"5+1", 5},
      {"2+1+1+1+1+1", 5},
      {"2+2+1+1+1", 7},
      {"2+2+2+1", 5},
      {"3+1+1+1+1", 6},
      {"3+2+1+1", 9},
      {"3+2+2", 7},
      {"3+3+1", 6},
      {"4+1+1+1", 6},
      {"4+2+1", 8},
      {"4+3", 5},
      {"5+1+1", 6},
      {"5+2", 6},
      {"6+1", 5},
  };
  return table;
}

const std::vector<std::pair<std::string, std::int64_t>>& reference_orders() {
  static const std::vector<std::pair<std::string, std::int64_t>> table = {
      {"2+1", 6},
      {"2+1+1", 96},
      {"2+2", 64},
      {"3+1", 100},
      {"2+1+1+1", 875},
      {"2+2+1", 405},
      {"3+1+1", 725},
      {"3+2", 455},
      {"4+1", 1285},
      {"2+1+1+1+1", 10368},
      {"2+2+1+1", 3600},
      {"2+2+2", 1728},
      {"3+1+1+1", 6480},
      {"3+2+1", 3024},
      {"3+3", 2916},
      {"4+1+1", 9288},
      {"4+2", 5440},
      {"5+1", 18756},
      {"2+1+1+1+1+1", 151263},
      {"2+2+1+1+1", 41503},
      {"2+2+2+1", 15379},
      {"3+1+1+1+1", 74431},
      {"3+2+1+1", 27195},
      {"3+2+2", 12427},
      {"3+3+1", 21175},
      {"4+1+1+1", 88837},
      {"4+2+1", 40131},
      {"4+3", 30667},
      {"5+1+1", 153223},
      {"5+2", 91553},
      {"6+1", 326599},
  };
  return table;
}

std::optional<int> reference_rank(const std::string& partition) {
  for (const auto& [name, value] : reference_ranks())
    if (name == partition) return value;
  return std::nullopt;
}

std::optional<std::int64_t> reference_order(const std::string& partition) {
  for (const auto& [name, value] : reference_orders())
    if (name == partition) return value;
  return std::nullopt;
}

bool order_entry_is_anomalous(const std::string& partition) {
  return partition == "2+1" || partition == "3+1";
}

}  // namespace pptrans
