#include "tropgrass/exactalg/char7.hpp"

#include "tropgrass/exactalg/plucker.hpp"
#include "tropgrass/exactalg/valuation.hpp"

namespace tropgrass::alg {

std::vector<Rational> fano_weight() { return fano_vector().finite_values(); }

std::vector<Rational> fano_weight_prime() {
  auto w = fano_weight();
  w[plucker_index(make_subset({1, 2, 4}), 7)] -= 1;
  return w;
}

MultiPoly special_cubic(Field field) {
  return parse_poly(plucker_ring(3, 7, field),
                    "2*p_123*p_467*p_567 - p_367*p_567*p_124 - p_167*p_467*p_235 - p_127*p_567*p_346"
                    " - p_126*p_367*p_457 - p_237*p_467*p_156 + p_134*p_567*p_267 + p_246*p_567*p_137"
                    " + p_136*p_267*p_457");
}

std::map<unsigned, std::size_t> degree_census(const std::vector<MultiPoly>& basis) {
  std::map<unsigned, std::size_t> out;
  for (const auto& g : basis) ++out[g.total_degree()];
  return out;
}

}  // namespace tropgrass::alg
