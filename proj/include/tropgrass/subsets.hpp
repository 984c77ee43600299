#pragma once

// Subsets of [n] = {1..n} as bitmasks (bit i-1 <-> element i), and the
// lexicographic enumeration of d-subsets used to index Pluecker coordinates.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tropgrass {

using Subset = std::uint32_t;

constexpr int kMaxGroundSet = 30;

inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline bool subset_contains(Subset s, int element) { return (s >> (element - 1)) & 1u; }
inline Subset singleton(int element) { return Subset{1} << (element - 1); }
inline Subset full_set(int n) { return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1); }

/// Elements in increasing order, 1-based.
std::vector<int> elements(Subset s);
Subset make_subset(const std::vector<int>& elems);

/// All k-subsets of [n], sorted lexicographically as increasing tuples.
std::vector<Subset> k_subsets(int n, int k);

/// Position of a k-subset inside k_subsets(n, k).
std::size_t subset_rank(Subset s, int n);

/// "123" for n <= 9, otherwise comma separated ("1,10,12").
std::string subset_name(Subset s, int n);
/// Inverse of subset_name; also accepts comma separated digits.
Subset parse_subset(std::string_view text, int n);

long long binomial(int n, int k);

}  // namespace tropgrass
