#pragma once

// The G(3,7) computation: the Fano weight vectors and the special cubic.

#include <map>
#include <vector>

#include "tropgrass/exactalg/poly.hpp"

namespace tropgrass::alg {

/// e124 + e235 + e346 + e457 + e156 + e267 + e137 over the 35 coordinates.
std::vector<Rational> fano_weight();
/// fano_weight() - e124.
std::vector<Rational> fano_weight_prime();

/// The cubic 2 p123 p467 p567 - p367 p567 p124 - ... + p136 p267 p457 in
/// plucker_ring(3, 7, field).
MultiPoly special_cubic(Field field = Field());

/// Number of basis elements per total degree.
std::map<unsigned, std::size_t> degree_census(const std::vector<MultiPoly>& basis);

}  // namespace tropgrass::alg
