#pragma once

// Algebra around the G(3,6) bipyramid: the FFGG initial ideal, its two
// primary components, and the maximal minors that fail to be a sagbi basis.

#include <string>
#include <utility>
#include <vector>

#include "tropgrass/exactalg/ideal.hpp"
#include "tropgrass/minplus.hpp"

namespace tropgrass::g36 {

/// The 35 binomials printed for in_w(I_{3,6}), w = f_1256 + f_3456 + g_123456 + g_125634.
std::vector<alg::MultiPoly> ffgg_printed_binomials(alg::Field field = alg::Field());

/// in_w + <p125 p346 - p126 p345>.
alg::Ideal bipyramid_prime_p(alg::Field field = alg::Field());
/// in_w + <p135, p136, p145, p146, p235, p236, p245, p246>.
alg::Ideal bipyramid_prime_q(alg::Field field = alg::Field());

/// The 3x6 weight matrix W of the sagbi counterexample.
TropMatrix sagbi_weight_matrix();

/// Initial forms of the 3x3 minors of the generic matrix (rows x, y, z)
/// under the weights W, one per 3-subset in lex order.
std::vector<alg::MultiPoly> sagbi_initial_minors(const TropMatrix& w);

/// The 20 signed monomials as printed, e.g. {"123", "z1*x2*y3"}.
const std::vector<std::pair<std::string, std::string>>& sagbi_printed_monomials();
/// The printed list as polynomials in the generic matrix ring (x = row 1).
std::vector<alg::MultiPoly> sagbi_printed_polys();

/// Kernel of p_S -> (initial minor S), an ideal in the Pluecker ring.
alg::Ideal sagbi_toric_ideal(const std::vector<alg::MultiPoly>& monomials, const alg::GroebnerOptions& options = {});

}  // namespace tropgrass::g36
