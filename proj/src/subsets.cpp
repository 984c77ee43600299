#include "tropgrass/subsets.hpp"

#include <stdexcept>

namespace tropgrass {

std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Subset make_subset(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) {
    if (e < 1 || e > kMaxGroundSet) throw std::out_of_range("subset element out of range");
    s |= singleton(e);
  }
  return s;
}

namespace {

void collect(int n, int k, int start, Subset acc, std::vector<Subset>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (int i = start; i <= n - k + 1; ++i) collect(n, k - 1, i + 1, acc | singleton(i), out);
}

}  // namespace

std::vector<Subset> k_subsets(int n, int k) {
  if (n < 0 || n > kMaxGroundSet || k < 0) throw std::invalid_argument("k_subsets: bad arguments");
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, k)));
  collect(n, k, 1, 0, out);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t subset_rank(Subset s, int n) {
  // Count the k-subsets that precede s in lexicographic order.
  int k = subset_size(s);
  std::size_t rank = 0;
  int prev = 0;
  int remaining = k;
  for (int e : elements(s)) {
    for (int smaller = prev + 1; smaller < e; ++smaller)
      rank += static_cast<std::size_t>(binomial(n - smaller, remaining - 1));
    prev = e;
    --remaining;
  }
  return rank;
}

std::string subset_name(Subset s, int n) {
  std::string out;
  for (int e : elements(s)) {
    if (n > 9 && !out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

Subset parse_subset(std::string_view text, int n) {
  Subset s = 0;
  auto add = [&](int e) {
    if (e < 1 || e > n) throw std::invalid_argument("subset element out of range in '" + std::string(text) + "'");
    if (subset_contains(s, e)) throw std::invalid_argument("repeated element in '" + std::string(text) + "'");
    s |= singleton(e);
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      add(std::stoi(std::string(text.substr(pos, next - pos))));
      pos = next + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad subset literal '" + std::string(text) + "'");
      add(c - '0');
    }
  }
  return s;
}

}  // namespace tropgrass
