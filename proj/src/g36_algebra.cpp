#include "tropgrass/g36_algebra.hpp"

#include <stdexcept>

#include "tropgrass/exactalg/plucker.hpp"

namespace tropgrass::g36 {

namespace {

const char* const kFfggBinomials[] = {
    "p_124*p_135 - p_123*p_145", "p_123*p_146 - p_124*p_136", "p_125*p_136 - p_126*p_135",
    "p_125*p_146 - p_126*p_145", "p_135*p_146 - p_136*p_145", "p_123*p_245 - p_124*p_235",
    "p_123*p_246 - p_124*p_236", "p_126*p_235 - p_125*p_236", "p_125*p_246 - p_126*p_245",
    "p_134*p_235 - p_135*p_234", "p_136*p_234 - p_134*p_236", "p_136*p_235 - p_135*p_236",
    "p_134*p_245 - p_145*p_234", "p_134*p_246 - p_146*p_234", "p_146*p_245 - p_145*p_246",
    "p_135*p_346 - p_136*p_345", "p_146*p_345 - p_145*p_346", "p_135*p_245 - p_145*p_235",
    "p_135*p_256 - p_156*p_235", "p_156*p_245 - p_145*p_256", "p_135*p_456 - p_145*p_356",
    "p_136*p_246 - p_146*p_236", "p_136*p_256 - p_156*p_236", "p_146*p_256 - p_156*p_246",
    "p_136*p_456 - p_146*p_356", "p_235*p_246 - p_236*p_245", "p_235*p_346 - p_236*p_345",
    "p_245*p_346 - p_246*p_345", "p_235*p_456 - p_245*p_356", "p_246*p_356 - p_236*p_456",
    "p_136*p_245 - p_135*p_246", "p_145*p_236 - p_135*p_246", "p_146*p_235 - p_135*p_246",
    "p_123*p_456 - p_124*p_356", "p_134*p_256 - p_156*p_234",
};

}  // namespace

std::vector<alg::MultiPoly> ffgg_printed_binomials(alg::Field field) {
  auto ring = alg::plucker_ring(3, 6, field);
  std::vector<alg::MultiPoly> out;
  for (const char* s : kFfggBinomials) out.push_back(alg::parse_poly(ring, s));
  return out;
}

alg::Ideal bipyramid_prime_p(alg::Field field) {
  auto gens = ffgg_printed_binomials(field);
  gens.push_back(alg::parse_poly(gens.front().ring(), "p_125*p_346 - p_126*p_345"));
  return alg::Ideal(gens.front().ring(), gens);
}

alg::Ideal bipyramid_prime_q(alg::Field field) {
  auto gens = ffgg_printed_binomials(field);
  for (const char* v : {"p_135", "p_136", "p_145", "p_146", "p_235", "p_236", "p_245", "p_246"})
    gens.push_back(alg::parse_poly(gens.front().ring(), v));
  return alg::Ideal(gens.front().ring(), gens);
}

TropMatrix sagbi_weight_matrix() {
  std::vector<std::vector<ExtReal>> rows{
      {2L, 1L, 2L, 1L, 0L, 0L},
      {1L, 2L, 0L, 0L, 2L, 1L},
      {0L, 0L, 1L, 2L, 1L, 2L},
  };
  return TropMatrix(rows);
}

std::vector<alg::MultiPoly> sagbi_initial_minors(const TropMatrix& w) {
  if (w.rows() != 3 || w.cols() != 6) throw std::invalid_argument("expected a 3x6 weight matrix");
  auto pring = alg::plucker_ring(3, 6);
  std::vector<Rational> weights;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 6; ++c) weights.push_back(w(r, c).value());
  std::vector<alg::MultiPoly> out;
  for (std::size_t i = 0; i < pring->size(); ++i) {
    auto minor = alg::expand_on_generic_matrix(alg::MultiPoly::variable(pring, i), 3, 6);
    out.push_back(alg::initial_form(minor, weights));
  }
  return out;
}

const std::vector<std::pair<std::string, std::string>>& sagbi_printed_monomials() {
  static const std::vector<std::pair<std::string, std::string>> list{
      {"123", "z1*x2*y3"},  {"124", "z1*x2*y4"},  {"125", "y1*z2*x5"},  {"126", "y1*z2*x6"},
      {"134", "-z1*y3*x4"}, {"135", "-z1*y3*x5"}, {"136", "-z1*y3*x6"}, {"145", "-z1*y4*x5"},
      {"146", "-z1*y4*x6"}, {"156", "z1*x5*y6"},  {"234", "-z2*y3*x4"}, {"235", "-z2*y3*x5"},
      {"236", "-z2*y3*x6"}, {"245", "-z2*y4*x5"}, {"246", "-z2*y4*x6"}, {"256", "z2*x5*y6"},
      {"345", "-z3*y4*x5"}, {"346", "-z3*y4*x6"}, {"356", "y3*z5*x6"},  {"456", "y4*z5*x6"},
  };
  return list;
}

std::vector<alg::MultiPoly> sagbi_printed_polys() {
  auto ring = alg::generic_matrix_ring(3, 6);
  std::vector<alg::MultiPoly> out;
  for (const auto& [s, text] : sagbi_printed_monomials()) {
    // x3 -> x_1_3, y3 -> x_2_3, z3 -> x_3_3
    std::string t;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if ((c == 'x' || c == 'y' || c == 'z') && i + 1 < text.size()) {
        t += "x_" + std::to_string(c - 'x' + 1) + "_" + text[i + 1];
        ++i;
      } else {
        t += c;
      }
    }
    out.push_back(alg::parse_poly(ring, t));
  }
  return out;
}

alg::Ideal sagbi_toric_ideal(const std::vector<alg::MultiPoly>& monomials, const alg::GroebnerOptions& options) {
  if (monomials.size() != 20) throw std::invalid_argument("expected 20 monomials");
  return alg::toric_kernel(alg::plucker_ring(3, 6), monomials.front().ring(), monomials, options);
}

}  // namespace tropgrass::g36
