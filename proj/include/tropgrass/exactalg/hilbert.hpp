#pragma once

// Hilbert series numerators of monomial ideals and projective degrees.

#include <vector>

#include "tropgrass/exactalg/ideal.hpp"

namespace tropgrass::alg {

/// Coefficients of K(t), low degree first, where the Hilbert series of
/// S/<gens> is K(t) / (1-t)^nvars.
std::vector<Integer> hilbert_numerator(const std::vector<Monomial>& gens);

struct HilbertData {
  /// Numerator after cancelling (1-t) factors: series = h(t) / (1-t)^dimension.
  std::vector<Integer> h;
  unsigned dimension = 0;  // Krull dimension of S/I
  Integer degree;          // h(1)
};

HilbertData hilbert_data(const std::vector<Monomial>& gens, std::size_t nvars);

/// Degree of the projective scheme of a homogeneous ideal, read off the
/// lead-monomial ideal for `order`.
Integer degree_of(const Ideal& ideal, const TermOrder& order = TermOrder::degrevlex(),
                  const GroebnerOptions& options = {});

/// Krull dimension of S/I (homogeneous I).
unsigned krull_dimension(const Ideal& ideal, const TermOrder& order = TermOrder::degrevlex(),
                         const GroebnerOptions& options = {});

/// Lead monomials of the reduced basis.
std::vector<Monomial> lead_monomials(const Ideal& ideal, const TermOrder& order,
                                     const GroebnerOptions& options = {});

}  // namespace tropgrass::alg
