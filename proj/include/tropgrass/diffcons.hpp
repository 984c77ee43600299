#pragma once

// Systems of difference constraints x_a - x_b <= c or < c over the
// rationals, kept closed under shortest paths. A strict bound is stored as
// c - k*eps with eps an infinitesimal, so feasibility of the strict system
// is the absence of a negative cycle.

#include <optional>
#include <vector>

#include "tropgrass/rational.hpp"

namespace tropgrass {

/// c - k*eps, or +infinity.
struct EpsBound {
  Rational c;
  int k = 0;
  bool infinite = true;

  static EpsBound finite(Rational c, int k) { return EpsBound{std::move(c), k, false}; }
  friend EpsBound operator+(const EpsBound& a, const EpsBound& b);
  friend bool operator<(const EpsBound& a, const EpsBound& b);
  bool negative() const { return !infinite && (c < 0 || (c == 0 && k > 0)); }
};

class DifferenceSystem {
 public:
  explicit DifferenceSystem(std::size_t nodes);

  std::size_t size() const { return n_; }
  bool feasible() const { return feasible_; }

  /// x_a - x_b <= c (or < c when strict). Returns feasible().
  bool add_upper(std::size_t a, std::size_t b, const Rational& c, bool strict = false);
  /// x_a - x_b = c.
  bool add_equal(std::size_t a, std::size_t b, const Rational& c);

  /// Shortest bound on x_a - x_b.
  const EpsBound& bound(std::size_t a, std::size_t b) const { return d_[a * n_ + b]; }
  /// x_a - x_b is forced to a single value.
  bool pinned(std::size_t a, std::size_t b) const;

  /// Classes of nodes whose pairwise differences are pinned.
  std::vector<std::vector<std::size_t>> pinned_classes() const;

  /// A rational solution with x_anchor = 0 satisfying every constraint,
  /// strict ones strictly. Empty when infeasible.
  std::optional<std::vector<Rational>> solution(std::size_t anchor = 0) const;

  /// True when x satisfies all recorded constraints.
  bool satisfied_by(const std::vector<Rational>& x) const;

 private:
  struct Constraint {
    std::size_t a, b;
    Rational c;
    bool strict;
  };
  void relax(std::size_t a, std::size_t b, const EpsBound& w);

  std::size_t n_;
  std::vector<EpsBound> d_;
  std::vector<Constraint> constraints_;
  bool feasible_ = true;
};

}  // namespace tropgrass
