#include "pptrans/counting.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace pptrans {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= (n - i);
    r /= (i + 1);
  }
  return r;
}

static BigInt ipow(BigInt base, int exp) {
  BigInt r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

BigInt order_T(const Partition& p) {
  BigInt total = 1;
  for (int i = 0; i < p.block_count(); ++i) {
    BigInt choices = 0;
    for (int j = 0; j < p.block_count(); ++j) {
      choices += ipow(p.block_size(j), p.block_size(i));
    }
    total *= choices;
  }
  return total;
}

BigInt order_Sigma(const Partition& p) {
  const int n = p.block_count();
  if (n > 24) {
    throw std::invalid_argument("order_Sigma: more than 24 blocks not supported");
  }
  // Permanent of M[i][j] = size_j ^ size_i via dp over column subsets:
  // dp[mask] covers rows 0..popcount(mask)-1.
  std::vector<std::vector<BigInt>> m(static_cast<size_t>(n), std::vector<BigInt>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = ipow(p.block_size(j), p.block_size(i));
    }
  }
  std::vector<BigInt> dp(size_t{1} << n);
  dp[0] = 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int row = __builtin_popcount(mask) - 1;
    BigInt acc = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (1u << j)) {
        acc += dp[mask & ~(1u << j)] * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
      }
    }
    dp[mask] = std::move(acc);
  }
  return dp[(size_t{1} << n) - 1];
}

BigInt order_S(const Partition& p) {
  std::map<int, int> mult;
  for (int s : p.block_sizes()) ++mult[s];
  BigInt total = 1;
  for (auto [size, count] : mult) {
    total *= ipow(factorial(size), count);
    total *= factorial(count);
  }
  return total;
}

}  // namespace pptrans
