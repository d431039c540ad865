#pragma once

#include <vector>

namespace hallwin {

// Exact binomial coefficient; 0 outside 0 <= k <= n.
long long binomial(long long n, long long k);

// All vectors in Z_{>=0}^parts with entry sum == total (resp. <= total),
// in descending lexicographic order. parts == 0 yields the empty vector
// when total == 0 (resp. always).
std::vector<std::vector<int>> compositions_eq(int parts, int total);
std::vector<std::vector<int>> compositions_leq(int parts, int total);

}  // namespace hallwin
