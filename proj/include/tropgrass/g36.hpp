#pragma once

// The tropical Grassmannian G(3,6) as an explicit simplicial complex on
// 65 vertices E, F, G.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "tropgrass/complex.hpp"
#include "tropgrass/minplus.hpp"
#include "tropgrass/subsets.hpp"

namespace tropgrass::g36 {

enum class Kind { E, F, G };

/// E: a 3-subset, F: a 4-subset, G: three disjoint pairs in cyclic order,
/// rotated so the pair holding 1 comes first.
struct Vertex {
  Kind kind = Kind::E;
  Subset set = 0;
  std::array<Subset, 3> pairs{};

  static Vertex e(Subset s);
  static Vertex f(Subset s);
  static Vertex g(Subset p1, Subset p2, Subset p3);

  std::string label() const;  // "e_123", "f_1234", "g_123456"
  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Accepts "e_123", "e123", "g_125634", ...
Vertex parse_vertex(const std::string& text);

/// The 65 vertices: E in lex order, then F, then G.
const std::vector<Vertex>& vertices();
int vertex_index(const Vertex& v);

/// Vector in R^20 before reduction modulo image(phi).
PlueckerVector raw_vector(const Vertex& v);
/// Reduced modulo image(phi).
PlueckerVector ambient_vector(const Vertex& v);

bool is_edge(const Vertex& u, const Vertex& v);
/// "EE", "FF", "GG", "EF", "EG", "FG" for edges, empty otherwise.
std::string edge_class(const Vertex& u, const Vertex& v);

Graph graph();

/// The flag complex of the 550-edge graph.
SimplicialComplex build_delta();
/// Delta with the faces containing an FFF triangle removed.
SimplicialComplex build_g36();

/// {f_{P1P2}, f_{P1P3}, f_{P2P3}} for the 15 tripartitions (vertex indices).
std::vector<Face> fff_triangles();

/// The two G vertices of each tripartition, paired up.
std::vector<std::pair<Vertex, Vertex>> tripartition_g_pairs();

/// EEEE, EEFF1, EEFF2, EFFG, EEEG, EEFG, FFGG (or "" for anything else).
std::string facet_class(const std::vector<Vertex>& face);
std::map<std::string, int> facet_census(const SimplicialComplex& k);

/// Indices permuted by perm (perm[i-1] is the image of i).
Vertex permute(const Vertex& v, const std::array<int, 6>& perm);
/// All images of a face under S6, as sorted vertex-index lists.
std::vector<Face> orbit_of(const Face& face);

const std::vector<std::string>& facet_class_names();
/// Representative facet of a class.
std::vector<Vertex> representative_facet(const std::string& cls);
/// Sum of the raw vectors of the representative facet.
PlueckerVector facet_cone_sample(const std::string& cls);

std::vector<Vertex> vertices_of(const Face& f);
Face face_of(const std::vector<Vertex>& vs);

}  // namespace tropgrass::g36
