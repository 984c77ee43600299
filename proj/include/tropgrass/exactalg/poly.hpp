#pragma once

// Sparse multivariate polynomials with exact coefficients over Q or GF(p).

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tropgrass/rational.hpp"

namespace tropgrass::alg {

constexpr std::size_t kMaxVars = 64;

/// The coefficient field: characteristic 0 means Q, otherwise GF(p).
class Field {
 public:
  Field() = default;
  /// Throws std::invalid_argument unless p is 0 or a prime below 2^31.
  explicit Field(unsigned characteristic);

  static Field rationals() { return Field(); }
  static Field prime(unsigned p) { return Field(p); }

  unsigned characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  /// Maps a rational into the field. In GF(p) the result is an integer in
  /// [0, p); throws std::domain_error if the denominator vanishes mod p.
  Rational normalize(const Rational& q) const;
  Rational inverse(const Rational& q) const;
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  unsigned p_ = 0;
};

/// Exponent vector; at most kMaxVars variables with exponents below 256.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned value);
  unsigned degree() const;
  bool is_one() const { return degree() == 0; }
  /// Bit i set when variable i occurs (variables >= 64 are ignored).
  std::uint64_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  const std::uint8_t* data() const { return e_.data(); }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

/// Variable names plus coefficient field.
struct PolyRing {
  std::vector<std::string> names;
  Field field;

  std::size_t size() const { return names.size(); }
  /// Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, Field field = Field());
/// Same variables over another field.
RingPtr with_field(const RingPtr& ring, Field field);

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Immutable-by-convention sparse polynomial. Terms are kept sorted in
/// degree-reverse-lexicographic order (largest first), with no zero
/// coefficients; in GF(p) coefficients are integers in [0, p).
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Combines like terms and drops zeros.
  MultiPoly(RingPtr ring, std::vector<Term> terms);

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t index);
  static MultiPoly monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  bool is_homogeneous() const;
  unsigned total_degree() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m) const;
  /// Divides by the leading (degrevlex) coefficient.
  MultiPoly monic() const;

  /// Re-expresses the polynomial in another ring, mapping variable i to
  /// variable index_map[i] of the target; coefficients are reduced into the
  /// target field.
  MultiPoly mapped(const RingPtr& target, const std::vector<std::size_t>& index_map) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Degree-reverse-lexicographic comparison with variable 0 largest:
/// negative, zero or positive.
int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars);

std::string to_string(const Monomial& m, const PolyRing& ring);
/// Text form "2*p_123*p_467 - p_124^2 + 1".
std::string to_string(const MultiPoly& f);
/// Parses the text form; unknown variable names are rejected.
MultiPoly parse_poly(const RingPtr& ring, std::string_view text);

}  // namespace tropgrass::alg
