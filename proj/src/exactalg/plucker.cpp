#include "tropgrass/exactalg/plucker.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tropgrass::alg {

namespace {

void check_dn(int d, int n) {
  if (d < 1 || n > 9 || d > n) throw std::invalid_argument("Pluecker ring needs 1 <= d <= n <= 9");
}

// Sign of the permutation sorting `v` (no repeats).
int sorting_sign(std::vector<int> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) sign = -sign;
  return sign;
}

}  // namespace

RingPtr plucker_ring(int d, int n, Field field) {
  check_dn(d, n);
  std::vector<std::string> names;
  for (Subset s : k_subsets(n, d)) names.push_back("p_" + subset_name(s, n));
  return make_ring(std::move(names), field);
}

std::size_t plucker_index(Subset s, int n) { return subset_rank(s, n); }

MultiPoly plucker_variable(const RingPtr& ring, const std::vector<int>& indices, int n) {
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return MultiPoly(ring);
  return MultiPoly::variable(ring, plucker_index(make_subset(sorted), n)).scaled(sorting_sign(indices));
}

std::vector<MultiPoly> exchange_relations(int d, int n, Field field) {
  check_dn(d, n);
  if (d < 2 || d >= n) throw std::invalid_argument("exchange relations need 2 <= d < n");
  RingPtr ring = plucker_ring(d, n, field);
  std::vector<MultiPoly> out;
  for (Subset I : k_subsets(n, d - 1)) {
    std::vector<int> ie = elements(I);
    for (Subset J : k_subsets(n, d + 1)) {
      std::vector<int> je = elements(J);
      MultiPoly rel(ring);
      for (std::size_t l = 0; l < je.size(); ++l) {
        std::vector<int> left = ie;
        left.push_back(je[l]);
        std::vector<int> right;
        for (std::size_t m = 0; m < je.size(); ++m)
          if (m != l) right.push_back(je[m]);
        MultiPoly term = plucker_variable(ring, left, n) * plucker_variable(ring, right, n);
        rel = (l % 2 == 0) ? rel + term : rel - term;
      }
      if (!rel.is_zero()) out.push_back(rel);
    }
  }
  return out;
}

namespace {

std::vector<MultiPoly> three_term_relations(int n, Field field) {
  RingPtr ring = plucker_ring(2, n, field);
  auto var = [&](int a, int b) { return MultiPoly::variable(ring, plucker_index(singleton(a) | singleton(b), n)); };
  std::vector<MultiPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l)
          out.push_back(var(i, j) * var(k, l) - var(i, k) * var(j, l) + var(i, l) * var(j, k));
  return out;
}

// Keeps the polynomials that are linearly independent of the earlier ones.
std::vector<MultiPoly> independent_subset(const std::vector<MultiPoly>& polys, const Field& field) {
  std::map<Monomial, std::map<Monomial, Rational>> echelon;  // pivot -> reduced row
  std::vector<MultiPoly> kept;
  for (const auto& f : polys) {
    std::map<Monomial, Rational> row;
    for (const auto& t : f.terms()) row[t.mono] = t.coeff;
    while (!row.empty()) {
      auto lead = std::prev(row.end());
      auto it = echelon.find(lead->first);
      if (it == echelon.end()) break;
      Rational factor = lead->second;
      for (const auto& [m, c] : it->second) {
        Rational v = field.normalize(row[m] - factor * c);
        if (v == 0) row.erase(m);
        else row[m] = v;
      }
    }
    if (row.empty()) continue;
    auto lead = std::prev(row.end());
    Rational inv = field.inverse(lead->second);
    for (auto& [m, c] : row) c = field.normalize(c * inv);
    echelon[lead->first] = std::move(row);
    kept.push_back(f);
  }
  return kept;
}

}  // namespace

std::vector<MultiPoly> plucker_generators(int d, int n, Field field, bool minimal) {
  check_dn(d, n);
  if (d < 2 || d >= n) throw std::invalid_argument("plucker_generators needs 2 <= d < n");
  if (d == 2) return three_term_relations(n, field);
  std::vector<MultiPoly> all = exchange_relations(d, n, field);
  if (!minimal) return all;
  return independent_subset(all, field);
}

RingPtr generic_matrix_ring(int d, int n, Field field) {
  std::vector<std::string> names;
  for (int r = 1; r <= d; ++r)
    for (int c = 1; c <= n; ++c) names.push_back("x_" + std::to_string(r) + "_" + std::to_string(c));
  return make_ring(std::move(names), field);
}

MultiPoly expand_on_generic_matrix(const MultiPoly& f, int d, int n) {
  check_dn(d, n);
  const auto subsets = k_subsets(n, d);
  if (f.ring()->size() != subsets.size())
    throw std::invalid_argument("polynomial is not in the Pluecker ring of the given (d, n)");
  RingPtr target = generic_matrix_ring(d, n, f.ring()->field);

  // Minor on columns S by the Leibniz formula.
  std::vector<MultiPoly> minors;
  minors.reserve(subsets.size());
  for (Subset s : subsets) {
    std::vector<int> cols = elements(s);
    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Term> terms;
    do {
      Monomial m;
      for (int r = 0; r < d; ++r) {
        std::size_t idx = static_cast<std::size_t>(r * n + (cols[perm[r]] - 1));
        m.set(idx, m[idx] + 1);
      }
      terms.push_back(Term{m, Rational(sorting_sign(perm))});
    } while (std::next_permutation(perm.begin(), perm.end()));
    minors.emplace_back(target, std::move(terms));
  }

  std::map<Monomial, Rational> acc;
  for (const auto& t : f.terms()) {
    MultiPoly prod = MultiPoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < subsets.size(); ++v)
      for (unsigned e = 0; e < t.mono[v]; ++e) prod = prod * minors[v];
    for (const auto& pt : prod.terms()) acc[pt.mono] += pt.coeff;
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return MultiPoly(target, std::move(out));
}

}  // namespace tropgrass::alg
