#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "pptrans/partition.hpp"

namespace pptrans {

using BigInt = boost::multiprecision::cpp_int;

/// |T(X,P)|: product over blocks i of (sum over blocks j of |P_j|^{|P_i|}).
BigInt order_T(const Partition& p);

/// |Sigma(X,P)|: sum over permutations tau of the blocks of
/// prod_i |P_{tau(i)}|^{|P_i|}, i.e. the permanent of the matrix
/// M[i][j] = |P_j|^{|P_i|}.  Computed by subset dynamic programming.
BigInt order_Sigma(const Partition& p);

/// |S(X,P)|: product over size classes (size d, count c) of (d!)^c * c!.
BigInt order_S(const Partition& p);

BigInt factorial(int n);
BigInt binomial(int n, int k);

}  // namespace pptrans
