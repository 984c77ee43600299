#include "tropgrass/exactalg/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgrass::alg {

namespace {

using Series = std::vector<Integer>;

void add_into(Series& a, const Series& b, std::size_t shift = 0) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

Series times_one_minus_t_power(Series s, unsigned d) {
  // s * (1 - t^d)
  Series out = s;
  out.resize(s.size() + d, 0);
  for (std::size_t i = 0; i < s.size(); ++i) out[i + d] -= s[i];
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Pivot recursion: K(M) = K(M + <x>) + t * K(M : x) with x a variable
// shared by several generators.
Series numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  // Pairwise coprime generators: product formula.
  std::array<int, kMaxVars> count{};
  for (const auto& g : gens)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (g[i]) ++count[i];
  std::size_t pivot = kMaxVars;
  int best = 1;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (count[i] > best) {
      best = count[i];
      pivot = i;
    }
  if (pivot == kMaxVars) {
    Series s{1};
    for (const auto& g : gens) s = times_one_minus_t_power(s, g.degree());
    return s;
  }
  Monomial x;
  x.set(pivot, 1);
  std::vector<Monomial> with_x{x}, colon;
  for (const auto& g : gens) {
    if (!g[pivot]) with_x.push_back(g);
    colon.push_back(g[pivot] ? g / x : g);
  }
  Series out = numerator(std::move(with_x));
  add_into(out, numerator(std::move(colon)), 1);
  return out;
}

Integer eval_at_one(const Series& s) {
  Integer v = 0;
  for (const auto& c : s) v += c;
  return v;
}

}  // namespace

std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens) {
  Series s = numerator(gens);
  while (s.size() > 1 && s.back() == 0) s.pop_back();
  return s;
}

HilbertData hilbert_data(const std::vector<Monomial>& gens, std::size_t nvars) {
  Series s = hilbert_numerator(gens);
  unsigned codim = 0;
  // Divide by (1 - t) while it is a root.
  while (eval_at_one(s) == 0) {
    if (s.size() == 1 && s[0] == 0) throw std::invalid_argument("unit ideal has no Hilbert polynomial");
    Series q(s.size() - 1, 0);
    Integer carry = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      carry += s[i];
      q[i] = carry;
    }
    s = std::move(q);
    ++codim;
  }
  if (codim > nvars) throw std::logic_error("codimension exceeds the number of variables");
  HilbertData d;
  d.h = s;
  d.dimension = static_cast<unsigned>(nvars - codim);
  d.degree = eval_at_one(s);
  return d;
}

std::vector<Monomial> lead_monomials(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& options) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner(order, options)) leads.push_back(leading_monomial(g, order));
  return leads;
}

Integer degree_of(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("degree_of needs a homogeneous ideal");
  return hilbert_data(lead_monomials(ideal, order, options), ideal.ring()->size()).degree;
}

unsigned krull_dimension(const Ideal& ideal, const TermOrder& order, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("krull_dimension needs a homogeneous ideal");
  return hilbert_data(lead_monomials(ideal, order, options), ideal.ring()->size()).dimension;
}

}  // namespace tropgrass::alg
