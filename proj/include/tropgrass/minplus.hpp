#pragma once

// Min-plus arithmetic: tropical polynomials, hypersurfaces, determinants
// and vectors of tropical minors.

#include <string>
#include <string_view>
#include <vector>

#include "tropgrass/rational.hpp"
#include "tropgrass/subsets.hpp"

namespace tropgrass {

using Exponent = std::vector<unsigned>;

struct TropTerm {
  Exponent exp;
  ExtReal coeff;
};

class TropPolynomial {
 public:
  /// Throws std::invalid_argument on repeated or wrong-length exponents or
  /// when every coefficient is infinite.
  TropPolynomial(std::size_t variables, std::vector<TropTerm> terms);

  /// Tropical linear form: sum_i coeffs[i] * x_i (one term per finite or
  /// infinite coefficient).
  static TropPolynomial linear(const std::vector<ExtReal>& coeffs);

  std::size_t variables() const { return n_; }
  const std::vector<TropTerm>& terms() const { return terms_; }

 private:
  std::size_t n_;
  std::vector<TropTerm> terms_;
};

/// min over terms of coeff + <exp, x>.
ExtReal evaluate(const TropPolynomial& f, const std::vector<Rational>& x);
/// Exponents attaining the minimum (finite terms only).
std::vector<Exponent> tight_terms(const TropPolynomial& f, const std::vector<Rational>& x);
/// x lies on the tropical hypersurface: the minimum is attained twice.
bool on_hypersurface(const TropPolynomial& f, const std::vector<Rational>& x);

class TropMatrix {
 public:
  TropMatrix() = default;
  TropMatrix(std::size_t rows, std::size_t cols, ExtReal fill = ExtReal(0L));
  explicit TropMatrix(const std::vector<std::vector<ExtReal>>& rows);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  ExtReal& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const ExtReal& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  /// Columns in the given (0-based) order.
  TropMatrix columns(const std::vector<int>& cols) const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<ExtReal> a_;
};

struct TropDeterminant {
  ExtReal value;
  /// Permutations (row r -> column perm[r]) attaining the minimum.
  std::vector<std::vector<int>> optimal;
  bool singular() const { return optimal.size() >= 2; }
};

/// Brute-force minimum over all permutations; square matrices up to 8x8.
TropDeterminant tropical_determinant_full(const TropMatrix& m);
ExtReal tropical_determinant(const TropMatrix& m);

/// A real (or +inf) coordinate per d-subset of [n], stored in the
/// lexicographic order of k_subsets(n, d).
class PlueckerVector {
 public:
  PlueckerVector() = default;
  PlueckerVector(int d, int n, ExtReal fill = ExtReal(0L));
  PlueckerVector(int d, int n, std::vector<ExtReal> coords);

  int d() const { return d_; }
  int n() const { return n_; }
  std::size_t size() const { return coords_.size(); }
  const std::vector<ExtReal>& coords() const { return coords_; }
  ExtReal& operator[](std::size_t i) { return coords_[i]; }
  const ExtReal& operator[](std::size_t i) const { return coords_[i]; }
  const ExtReal& at(Subset s) const;
  void set(Subset s, const ExtReal& v);
  bool all_finite() const;
  /// Finite coordinates as rationals (throws on an infinite one).
  std::vector<Rational> finite_values() const;

  /// e_S for a d-subset S ("124").
  static PlueckerVector unit(int d, int n, Subset s);
  /// phi(a): coordinate S is sum of a_i over i in S.
  static PlueckerVector phi(int d, const std::vector<Rational>& a);

  PlueckerVector operator+(const PlueckerVector& o) const;
  PlueckerVector operator-(const PlueckerVector& o) const;
  PlueckerVector scaled(const Rational& c) const;

  friend bool operator==(const PlueckerVector&, const PlueckerVector&) = default;

 private:
  int d_ = 0, n_ = 0;
  std::vector<ExtReal> coords_;
};

/// Sum of unit vectors named like {"124", "235"}.
PlueckerVector pluecker_from_names(int d, int n, const std::vector<std::string>& names);

/// Canonical representative of w modulo image(phi): a is chosen so that the
/// first n coordinates along a fixed spanning pattern vanish. Two vectors
/// agree modulo image(phi) iff their representatives are equal.
PlueckerVector reduce_mod_phi(const PlueckerVector& w);
bool equal_mod_phi(const PlueckerVector& a, const PlueckerVector& b);

/// Coordinate S = tropical determinant of the columns S.
PlueckerVector tropical_minors(const TropMatrix& m);

/// Row-major CSV, "inf" for +infinity.
TropMatrix parse_trop_matrix_csv(std::string_view text);
std::string trop_matrix_to_csv(const TropMatrix& m);

/// JSON: {"vars": n, "terms": [{"exp": [...], "coeff": "p/q" | "inf"}]}.
TropPolynomial parse_trop_polynomial_json(std::string_view text);
std::string trop_polynomial_to_json(const TropPolynomial& f);

/// JSON: {"d": 3, "n": 6, "coords": {"123": "0", ...}}.
PlueckerVector parse_pluecker_json(std::string_view text);
std::string pluecker_to_json(const PlueckerVector& w);

}  // namespace tropgrass
