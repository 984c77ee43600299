#pragma once

// The space of phylogenetic trees: splits, trees, the four-point
// condition, Additive Linkage, tree vectors and tree initial ideals.

#include <array>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tropgrass/complex.hpp"
#include "tropgrass/exactalg/groebner.hpp"
#include "tropgrass/exactalg/poly.hpp"
#include "tropgrass/minplus.hpp"
#include "tropgrass/subsets.hpp"

namespace tropgrass {

/// Unordered split {A, B} of [n], both sides of size >= 2. Stored with
/// `side` the block containing leaf 1.
class Split {
 public:
  Split(Subset a, int n);
  Subset side() const { return side_; }
  Subset other() const { return full_set(n_) & ~side_; }
  int n() const { return n_; }
  bool separates(int i, int j) const { return subset_contains(side_, i) != subset_contains(side_, j); }
  /// "12|3456": smaller block first, ties broken by the block holding 1.
  std::string name() const;

  friend bool operator==(const Split&, const Split&) = default;
  friend auto operator<=>(const Split& a, const Split& b) { return a.side_ <=> b.side_; }

 private:
  Subset side_;
  int n_;
};

Split parse_split(const std::string& text, int n);  // "12|3456" or "12,3456"

/// One of the four inclusions A in A', A in B', B in A', B in B'.
bool splits_compatible(const Split& s, const Split& t);

/// All 2^{n-1} - n - 1 splits of [n], ordered by name length then side.
std::vector<Split> all_splits(int n);

/// A tree in T_n with lengths: w = -sum length_s E_s - phi(offsets).
struct SemiLabeledTree {
  int n = 0;
  std::vector<Split> splits;      // sorted
  std::vector<Rational> lengths;  // one positive length per split
  std::vector<Rational> offsets;  // one per leaf

  /// Throws std::invalid_argument on incompatible/duplicate splits,
  /// nonpositive lengths or size mismatches.
  void validate() const;
  bool is_trivalent() const { return static_cast<int>(splits.size()) == n - 3; }
};

/// Builds a tree from split names with unit lengths and zero offsets.
SemiLabeledTree tree_from_splits(int n, const std::vector<std::string>& names);

/// The tree vector: w_ij = -(sum of lengths of splits separating i, j) - a_i - a_j.
PlueckerVector tree_to_plucker(const SemiLabeledTree& t);

struct FourPointResult {
  bool ok = true;
  std::optional<std::array<int, 4>> violation;  // 1-based leaves
};

/// Every quadruple has its minimum pairing sum attained at least twice.
FourPointResult four_point_check(const PlueckerVector& w);

class FourPointViolation : public std::invalid_argument {
 public:
  explicit FourPointViolation(std::array<int, 4> q);
  const std::array<int, 4>& quadruple() const { return q_; }

 private:
  std::array<int, 4> q_;
};

/// Recovers the tree (splits, lengths, offsets) with w in its cone by
/// cherry picking. Throws FourPointViolation.
SemiLabeledTree additive_linkage(const PlueckerVector& w);

/// Trees agree on splits and lengths, and their vectors agree modulo phi.
bool same_tree_mod_phi(const SemiLabeledTree& a, const SemiLabeledTree& b);

/// One binomial per quadruple: the three-term relation with the term of the
/// quartet's own pairing removed. Throws for non-trivalent trees.
std::vector<alg::MultiPoly> j_sigma(const SemiLabeledTree& t, alg::Field field = alg::Field());

/// p_ik * p_jl for i < j < k < l.
std::vector<alg::Monomial> kempe_crossing_generators(int n);

/// Weight order of the circular realization: chord {i, j} gets weight
/// -g(j - i) with g(x) = x(n - x), then degrevlex.
alg::TermOrder circular_order(int n);

/// Trivalent and the splits form a nested chain. Throws for non-trivalent.
bool is_caterpillar(const SemiLabeledTree& t);

/// All trivalent trees on [n] by leaf insertion, as sorted split lists.
std::vector<std::vector<Split>> trivalent_trees(int n);

struct TnStats {
  int n = 0;
  long long vertices = 0;
  long long facets = 0;  // trees from leaf insertion
  std::vector<long long> f_vector;  // cliques of the compatibility graph
  long long maximal_cliques = 0;
  bool pure = false;
  long long reduced_euler = 0;
};

/// The flag complex on compatible splits, 4 <= n <= 9. Labels are split
/// names; facets are the trivalent trees.
SimplicialComplex tn_complex(int n);
TnStats tn_stats(int n);

/// Graph of compatibility among all_splits(n).
Graph compatibility_graph(int n);

/// Random trivalent tree with lengths in {1..max_len}/den_max and offsets
/// in [-max_len, max_len].
SemiLabeledTree random_trivalent_tree(int n, std::mt19937_64& rng, int max_len = 5, int den_max = 3);

/// Newick text rooted at the attachment of leaf n, with branch lengths;
/// pendant lengths are the offsets.
std::string to_newick(const SemiLabeledTree& t);
/// {"n": .., "splits": [{"split": "12|3456", "length": "1"}], "offsets": [...]}
std::string tree_to_json(const SemiLabeledTree& t);

/// Symmetric CSV distance matrix with zero diagonal; returns w = -d.
PlueckerVector parse_distance_csv(const std::string& text);

}  // namespace tropgrass
