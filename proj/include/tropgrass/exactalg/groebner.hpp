#pragma once

// Term orders, Buchberger's algorithm and normal forms.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropgrass/exactalg/poly.hpp"

namespace tropgrass::alg {

/// A term order given by weight rows followed by total degree and a
/// reverse-lexicographic tiebreak (variable 0 largest).
///
/// Rows use the min convention of the rest of the library: among monomials
/// that agree on earlier rows, the one with the SMALLER weight is the larger
/// monomial. Consequently the leading term of f under weight(w) always lies
/// in the initial form in_w(f).
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder degrevlex() { return TermOrder(); }
  /// Total degree, then w (min convention), then reverse lex.
  static TermOrder weight(const std::vector<Rational>& w);
  /// Total degree, then each row in turn, then reverse lex.
  static TermOrder weights(const std::vector<std::vector<Rational>>& rows);
  /// Monomials with more eliminated variables are larger; ties by degrevlex.
  static TermOrder elimination(const std::vector<bool>& eliminate);
  /// Rows exactly as given (no leading degree row), then degree, then
  /// reverse lex. Rows must make this a well-order on the ideals used.
  static TermOrder from_rows(const std::vector<std::vector<Rational>>& rows);

  /// Positive when a > b, negative when a < b, zero when equal.
  int compare(const Monomial& a, const Monomial& b) const;

  /// Integer-scaled rows, min convention.
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }
  /// Canonical text, used as a cache key.
  std::string key() const;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
};

/// Raised when a Groebner computation exceeds its step budget. Never
/// accompanied by a (possibly wrong) partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t steps, std::size_t basis_size)
      : std::runtime_error("groebner step budget exhausted after " + std::to_string(steps) + " steps"),
        steps_(steps),
        basis_size_(basis_size) {}
  std::uint64_t steps() const { return steps_; }
  std::size_t basis_size() const { return basis_size_; }

 private:
  std::uint64_t steps_;
  std::size_t basis_size_;
};

struct GroebnerProgress {
  std::uint64_t steps = 0;
  std::size_t pairs_done = 0;
  std::size_t pairs_pending = 0;
  std::size_t basis_size = 0;
  unsigned current_degree = 0;
};

struct GroebnerOptions {
  /// 0 means unlimited. One step is one S-polynomial or one reduction step.
  std::uint64_t step_budget = 0;
  /// Positive variable weights used for the sugar degree; empty means all 1.
  std::vector<unsigned> sugar_grading;
  /// Called every `progress_interval` processed pairs.
  std::function<void(const GroebnerProgress&)> progress;
  std::size_t progress_interval = 500;
};

/// The reduced Groebner basis of the ideal generated by `generators`:
/// monic, sorted by increasing leading monomial. Independent of generator
/// order. Throws BudgetExceeded.
std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators, const TermOrder& order,
                                      const GroebnerOptions& options = {});

/// Complete reduction of f by `divisors` (any list; a Groebner basis gives
/// the unique normal form). The result has no term divisible by a leading
/// monomial of a divisor.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors, const TermOrder& order);

Monomial leading_monomial(const MultiPoly& f, const TermOrder& order);
Term leading_term(const MultiPoly& f, const TermOrder& order);

}  // namespace tropgrass::alg
