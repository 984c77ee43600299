#pragma once

// Finite abstract simplicial complexes, flag complexes, links and integral
// homology.

#include <string>
#include <string_view>
#include <vector>

#include "tropgrass/rational.hpp"

namespace tropgrass {

using Face = std::vector<int>;  // sorted vertex indices

/// Symmetric adjacency matrix of a simple graph.
using Graph = std::vector<std::vector<bool>>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// The downward closure of `faces`; only the maximal ones are stored.
  SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces);

  /// Trusts that `faces` are pairwise incomparable (no subset check).
  static SimplicialComplex from_maximal(std::vector<std::string> labels, std::vector<Face> faces);

  /// Clique complex of a graph (maximal cliques by Bron-Kerbosch).
  static SimplicialComplex flag(std::vector<std::string> labels, const Graph& graph);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Face>& maximal_faces() const { return maximal_; }
  std::size_t vertex_count() const { return labels_.size(); }
  /// -1 for the void complex, otherwise the largest face dimension.
  int dimension() const;
  bool is_pure() const;

  bool contains(const Face& face) const;
  /// All nonempty faces, grouped by dimension, each group sorted.
  std::vector<std::vector<Face>> faces_by_dimension() const;
  std::vector<long long> f_vector() const;
  /// sum_i (-1)^i f_i - 1.
  long long reduced_euler_characteristic() const;

  /// Throws std::invalid_argument if `face` is not a face.
  SimplicialComplex link(const Face& face) const;
  /// Drops every face containing one of `faces`.
  SimplicialComplex remove_faces_containing(const std::vector<Face>& faces) const;

  /// Vertex indices by label; throws on unknown labels.
  Face face_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(const Face& face) const;

  /// {"vertices": [...], "maximal_faces": [[label, ...], ...]}
  std::string to_json() const;
  static SimplicialComplex from_json(std::string_view text);

 private:
  std::vector<std::string> labels_;
  std::vector<Face> maximal_;
};

/// f-vector of the clique complex of a graph, counted without listing the
/// faces. Entry i counts cliques with i+1 vertices.
std::vector<long long> clique_f_vector(const Graph& graph);

/// Graph edges of the 1-skeleton.
Graph one_skeleton(const SimplicialComplex& k);

struct Homology {
  std::vector<long long> betti;               // ranks of H_0 .. H_dim
  std::vector<std::vector<Integer>> torsion;  // torsion coefficients > 1 per degree
  bool torsion_free() const;
};

Homology homology(const SimplicialComplex& k);

/// Rank and the non-unit invariant factors of an integer matrix given as
/// sparse rows (column index, value).
struct SmithSummary {
  std::size_t rank = 0;
  std::vector<Integer> invariant_factors;  // only those > 1
};
SmithSummary smith_summary(std::size_t cols, std::vector<std::vector<std::pair<int, Integer>>> rows);

}  // namespace tropgrass
