#pragma once

// Brute-force reference computations used by the tests. Nothing here calls
// into the library beyond its basic types.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tropgrass/rational.hpp"
#include "tropgrass/subsets.hpp"

namespace oracle {

using tropgrass::Integer;
using tropgrass::Rational;

// a/b in lowest terms (the two-argument mpq constructor does not reduce)
inline Rational q(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// min over permutations of sum a[i][sigma(i)]
inline Rational trop_det(const std::vector<std::vector<Rational>>& a) {
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  bool first = true;
  Rational best;
  do {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i][p[i]];
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Number of SSYT of rectangular shape rows x cols with entries <= n
// (hook-content formula). This is dim of degree `cols` in the coordinate
// ring of G(rows, n).
inline Integer ssyt_rectangle(int rows, int cols, int n) {
  Rational r = 1;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      int content = j - i;
      int hook = (cols - j - 1) + (rows - i - 1) + 1;
      r *= q(n + content, hook);
    }
  return r.get_num();
}

inline Integer binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer catalan(int m) { return binom(2 * m, m) / (m + 1); }

inline long long double_factorial(int k) {
  long long r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

// All exponent vectors of total degree k in n variables.
inline void for_each_monomial(int n, int k, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      e[i] = left;
      f(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[i] = a;
      rec(i + 1, left - a);
    }
  };
  rec(0, k);
}

// Standard monomials of degree k for a monomial ideal given by exponent vectors.
inline long long count_standard(const std::vector<std::vector<unsigned>>& gens, int n, int k) {
  long long count = 0;
  for_each_monomial(n, k, [&](const std::vector<unsigned>& e) {
    for (const auto& g : gens) {
      bool div = true;
      for (int i = 0; i < n && div; ++i) div = g[i] <= e[i];
      if (div) return;
    }
    ++count;
  });
  return count;
}

// An explicit weighted tree: leaves are nodes 0..n-1 (leaf i+1), internal
// nodes follow. Built by inserting leaves into random edges.
struct ExplicitTree {
  int n = 0;
  struct Edge {
    int a, b;
    Rational len;
  };
  std::vector<Edge> edges;
  int nodes = 0;

  static ExplicitTree random(int n, std::mt19937_64& rng) {
    ExplicitTree t;
    t.n = n;
    t.nodes = n + 1;  // node n is the first internal node
    auto len = [&] { return q(static_cast<long>(rng() % 7 + 1), static_cast<long>(rng() % 2 + 1)); };
    for (int i = 0; i < 3; ++i) t.edges.push_back({i, n, len()});
    for (int leaf = 3; leaf < n; ++leaf) {
      std::size_t pick = rng() % t.edges.size();
      Edge old = t.edges[pick];
      int mid = t.nodes++;
      t.edges[pick] = {old.a, mid, old.len};
      t.edges.push_back({mid, old.b, len()});
      t.edges.push_back({leaf, mid, len()});
    }
    return t;
  }

  std::vector<Rational> distances_from(int s) const {
    std::vector<Rational> d(nodes, -1);
    d[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        int v = e.a == u ? e.b : (e.b == u ? e.a : -1);
        if (v >= 0 && d[v] < 0) {
          d[v] = d[u] + e.len;
          stack.push_back(v);
        }
      }
    }
    return d;
  }

  Rational distance(int i, int j) const { return distances_from(i - 1)[j - 1]; }

  // Leaf sets (containing leaf 1) cut off by removing each internal edge.
  std::set<tropgrass::Subset> splits() const {
    std::set<tropgrass::Subset> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (edges[k].a < n || edges[k].b < n) continue;
      std::vector<bool> seen(nodes, false);
      std::vector<int> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (std::size_t m = 0; m < edges.size(); ++m) {
          if (m == k) continue;
          int v = edges[m].a == u ? edges[m].b : (edges[m].b == u ? edges[m].a : -1);
          if (v >= 0 && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
      tropgrass::Subset s = 0;
      for (int i = 0; i < n; ++i)
        if (seen[i]) s |= tropgrass::singleton(i + 1);
      out.insert(s);
    }
    return out;
  }
};

}  // namespace oracle
