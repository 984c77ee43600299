#pragma once

// Tropical linear spaces L_w: circuits, membership, types, duality,
// reconstruction of w from L_w, and the complete-intersection obstruction
// for duals of tree planes.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "tropgrass/minplus.hpp"
#include "tropgrass/treespace.hpp"

namespace tropgrass::troplin {

/// Unordered partition of [n] into nonempty blocks.
class DPartition {
 public:
  DPartition(std::vector<Subset> blocks, int n);
  const std::vector<Subset>& blocks() const { return blocks_; }
  int n() const { return n_; }
  int d() const { return static_cast<int>(blocks_.size()); }
  /// "1|23|456": blocks by size, then lexicographically.
  std::string name() const;

  friend bool operator==(const DPartition&, const DPartition&) = default;
  friend auto operator<=>(const DPartition&, const DPartition&) = default;

 private:
  std::vector<Subset> blocks_;  // in name order
  int n_;
};

DPartition parse_dpartition(const std::string& text, int n);

/// Every block has at least two elements.
bool is_bounded_face(const DPartition& p);

class DegenerateCircuit : public std::invalid_argument {
 public:
  explicit DegenerateCircuit(Subset j, int n);
  Subset circuit() const { return j_; }

 private:
  Subset j_;
};

/// F_J = sum over j in J of w_{J - j} * x_j, one per (d+1)-subset J in lex
/// order; infinite coefficients are dropped.
std::vector<TropPolynomial> circuits(const PlueckerVector& w);

/// The coordinate of [n] - I is the I coordinate of w.
PlueckerVector dual(const PlueckerVector& w);

/// Answers membership and can find a point of the plane with given
/// coordinates fixed and the others bounded above.
class PlaneOracle {
 public:
  virtual ~PlaneOracle() = default;
  virtual int n() const = 0;
  virtual bool member(const std::vector<Rational>& x) const = 0;
  /// A point with x_i = value for i in `fixed` and x_k <= upper otherwise.
  virtual std::optional<std::vector<Rational>> locate(Subset fixed, const Rational& value,
                                                      const Rational& upper) const = 0;
};

struct PlaneFace {
  DPartition partition;
  std::vector<Rational> point;      // relative interior point
  std::vector<Subset> tight;        // tight set of each circuit at that point
};

class TropicalPlane : public PlaneOracle {
 public:
  explicit TropicalPlane(PlueckerVector w);

  const PlueckerVector& w() const { return w_; }
  int d() const { return w_.d(); }
  int n() const override { return w_.n(); }
  const std::vector<Subset>& circuit_sets() const { return sets_; }
  const std::vector<TropPolynomial>& circuit_forms() const { return forms_; }

  bool member(const std::vector<Rational>& x) const override;
  /// First circuit whose minimum is attained only once at x.
  std::optional<Subset> violated_circuit(const std::vector<Rational>& x) const;

  std::optional<std::vector<Rational>> locate(Subset fixed, const Rational& value,
                                              const Rational& upper) const override;

  /// The maximal (d-dimensional) faces. Requires finite w, d in {2, 3}, n <= 7.
  std::vector<PlaneFace> maximal_faces() const;

 private:
  PlueckerVector w_;
  std::vector<Subset> sets_;
  std::vector<TropPolynomial> forms_;
};

/// The set of d-partitions of the maximal faces.
std::set<DPartition> plane_type(const TropicalPlane& plane);

class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Recovers w modulo image(phi) from an oracle for L_w, given |w_S| <= bound.
/// The result is normalized by reduce_mod_phi.
PlueckerVector reconstruct_plucker(const PlaneOracle& oracle, int d, int n, const Rational& bound);

/// For two leaves a, b: leaves j, k that no edge of the a-b path separates.
struct PathWitness {
  int a, b, j, k;
};

struct NotCompleteIntersection {
  std::vector<PathWitness> certificate;  // one per leaf pair a < b
};
struct CiUnknown {};
using CiStatus = std::variant<NotCompleteIntersection, CiUnknown>;

/// NotCompleteIntersection for non-caterpillar trivalent trees (n >= 5),
/// Unknown for caterpillars.
CiStatus ci_status_d2(const SemiLabeledTree& t);

}  // namespace tropgrass::troplin
