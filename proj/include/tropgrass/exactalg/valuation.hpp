#pragma once

// Matrices over k[t] and the t-adic valuations of their maximal minors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropgrass/exactalg/poly.hpp"
#include "tropgrass/minplus.hpp"

namespace tropgrass::alg {

/// Coefficient field for t-polynomials: Q, GF(p), or GF(2^k) for k <= 8.
/// GF(2^k) elements are stored as integers whose bits are coordinates in
/// the basis 1, a, a^2, ... of GF(2)[a] / (modulus).
class ResidueField {
 public:
  ResidueField() = default;
  explicit ResidueField(Field prime_or_q) : base_(prime_or_q) {}
  /// GF(2^k); `modulus` is the irreducible polynomial as a bit mask
  /// including the top bit (0b111 for GF(4), 0b1011 for GF(8)).
  static ResidueField gf2k(unsigned k, unsigned modulus);

  Rational normalize(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational mul(const Rational& a, const Rational& b) const;
  std::string name() const;
  unsigned characteristic() const { return k_ ? 2 : base_.characteristic(); }
  /// Number of elements (0 for Q).
  unsigned size() const;

  friend bool operator==(const ResidueField&, const ResidueField&) = default;

 private:
  Field base_;
  unsigned k_ = 0, modulus_ = 0;
};

/// Univariate polynomial in t, coefficients low degree first; no trailing
/// zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::vector<Rational> coeffs, ResidueField field);
  static UPoly constant(const Rational& c, ResidueField field) { return UPoly({c}, field); }

  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const ResidueField& field() const { return field_; }
  /// Lowest exponent with a nonzero coefficient; nullopt for zero.
  std::optional<unsigned> valuation() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;

 private:
  std::vector<Rational> c_;
  ResidueField field_;
};

std::string to_string(const UPoly& p);

class TPolyMatrix {
 public:
  TPolyMatrix(std::size_t rows, std::size_t cols, ResidueField field);
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const ResidueField& field() const { return field_; }
  const UPoly& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  void set(std::size_t i, std::size_t j, UPoly p);

  /// Determinant of the square submatrix on the given 0-based columns.
  UPoly minor(const std::vector<int>& cols) const;

 private:
  std::size_t r_, c_;
  ResidueField field_;
  std::vector<UPoly> a_;
};

/// Coordinate S = lowest t-degree of the minor on columns S, +inf when the
/// minor vanishes.
PlueckerVector plucker_valuations(const TPolyMatrix& m);

/// The Fano vector e124 + e235 + e346 + e457 + e156 + e267 + e137.
PlueckerVector fano_vector();

/// 3x7 matrix whose columns are alpha^0..alpha^6 in GF(8) with
/// alpha^3 = alpha + 1, written in the basis 1, alpha, alpha^2 (entries 0/1,
/// embedded in `field`, which must have characteristic 2). Its dependent
/// triples are exactly the Fano lines.
TPolyMatrix fano_matrix(ResidueField field = ResidueField(Field(2)));

struct FanoSearchResult {
  std::optional<TPolyMatrix> matrix;  // A + t*B when found
  std::vector<unsigned> perturbation;  // entries of B, row-major
  std::uint64_t candidates_tried = 0;
  bool exhausted = false;  // the whole bounded space was searched
};

/// Bounded search for B over `field` (characteristic 2, at most 256
/// elements) such that A + t*B has valuation exactly the Fano vector.
/// Candidates are enumerated by number of nonzero entries, then positions,
/// then values, up to `max_support` nonzero entries.
FanoSearchResult find_fano_perturbation(const ResidueField& field, unsigned max_support,
                                        std::uint64_t max_candidates = std::uint64_t{1} << 32);

}  // namespace tropgrass::alg
