#include <doctest.h>

#include <set>

#include "tropgrass/exactalg/ideal.hpp"
#include "tropgrass/exactalg/plucker.hpp"
#include "tropgrass/g36.hpp"
#include "tropgrass/g36_algebra.hpp"

using namespace tropgrass;
using namespace tropgrass::g36;

namespace {

// w lies on the tropical hypersurface of every quadratic exchange relation.
// For G(3,6) these cut out the tropical Grassmannian as a set.
bool on_exchange_prevariety(const PlueckerVector& w) {
  static const auto rels = alg::exchange_relations(3, 6);
  static const auto ring = alg::plucker_ring(3, 6);
  for (const auto& f : rels) {
    std::optional<Rational> lo;
    int count = 0;
    for (const auto& t : f.terms()) {
      Rational s = 0;
      for (std::size_t i = 0; i < ring->size(); ++i)
        if (t.mono[i]) s += Rational(t.mono[i]) * w[i].value();
      if (!lo || s < *lo) {
        lo = s;
        count = 1;
      } else if (s == *lo) {
        ++count;
      }
    }
    if (count < 2) return false;
  }
  return true;
}

PlueckerVector sum_of(const std::vector<Vertex>& vs) {
  PlueckerVector w(3, 6);
  for (const auto& v : vs) w = w + raw_vector(v);
  return w;
}

}  // namespace

TEST_CASE("vertices and labels") {
  const auto& vs = vertices();
  CHECK(vs.size() == 65);
  std::map<Kind, int> kinds;
  for (const auto& v : vs) {
    ++kinds[v.kind];
    CHECK(parse_vertex(v.label()) == v);
  }
  CHECK(kinds[Kind::E] == 20);
  CHECK(kinds[Kind::F] == 15);
  CHECK(kinds[Kind::G] == 30);
  CHECK(parse_vertex("g345612").label() == "g_123456");
  CHECK(parse_vertex("e135") == parse_vertex("e_135"));
  CHECK_THROWS(parse_vertex("e_12"));
  CHECK_THROWS(parse_vertex("g_123455"));
  CHECK_THROWS(parse_vertex("h_123"));
  // every vertex is a ray of G(3,6)
  for (const auto& v : vs) CHECK(on_exchange_prevariety(raw_vector(v)));
}

TEST_CASE("edges agree with the tropical prevariety") {
  const auto& vs = vertices();
  int edges = 0, in_fan = 0, mismatched = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      bool e = is_edge(vs[i], vs[j]);
      bool f = on_exchange_prevariety(raw_vector(vs[i]) + raw_vector(vs[j]));
      edges += e;
      in_fan += f;
      mismatched += e != f;
    }
  CHECK(edges == 550);
  CHECK(in_fan == 550);
  CHECK(mismatched == 0);
}

TEST_CASE("Delta and Delta'") {
  auto delta = build_delta();
  CHECK(delta.f_vector() == std::vector<long long>{65, 550, 1410, 1065, 15});
  auto g = build_g36();
  CHECK(g.f_vector() == std::vector<long long>{65, 550, 1395, 1035});
  CHECK(g.is_pure());
  // every facet spans a cone inside G(3,6)
  for (const auto& f : g.maximal_faces()) CHECK(on_exchange_prevariety(sum_of(vertices_of(f))));
  auto graph = g36::graph();
  for (const auto& t : fff_triangles()) {
    CHECK(graph[t[0]][t[1]]);
    CHECK(graph[t[1]][t[2]]);
    CHECK(graph[t[0]][t[2]]);
    CHECK(delta.contains(t));
    CHECK_FALSE(g.contains(t));
  }
}

TEST_CASE("facet classes and orbits") {
  auto g = build_g36();
  auto census = facet_census(g);
  std::map<std::string, int> expect{{"EEEE", 30},  {"EEFF1", 90}, {"EEFF2", 90}, {"EFFG", 180},
                                    {"EEEG", 240}, {"EEFG", 360}, {"FFGG", 45}};
  CHECK(census == expect);
  for (const auto& cls : facet_class_names()) {
    auto rep = representative_facet(cls);
    CHECK(facet_class(rep) == cls);
    Face f = face_of(rep);
    CHECK(g.contains(f));
    auto orbit = orbit_of(f);
    CHECK(static_cast<int>(orbit.size()) == expect[cls]);
    for (const auto& o : orbit) CHECK(facet_class(vertices_of(o)) == cls);
  }
}

TEST_CASE("symmetric group action") {
  std::array<int, 6> cyc{2, 3, 4, 5, 6, 1};
  auto v = parse_vertex("g_123456");
  CHECK(permute(v, cyc).label() == "g_162345");  // (23)(45)(61), rotated
  Vertex x = v;
  for (int i = 0; i < 6; ++i) x = permute(x, cyc);
  CHECK(x == v);
  for (const auto& u : vertices())
    for (const auto& w : vertices())
      CHECK(is_edge(u, w) == is_edge(permute(u, cyc), permute(w, cyc)));
}

TEST_CASE("bipyramid identity") {
  auto pairs = tripartition_g_pairs();
  CHECK(pairs.size() == 15);
  for (const auto& [a, b] : pairs) {
    auto p = a.pairs;
    PlueckerVector fff = raw_vector(Vertex::f(p[0] | p[1])) + raw_vector(Vertex::f(p[0] | p[2])) +
                         raw_vector(Vertex::f(p[1] | p[2]));
    CHECK(raw_vector(a) + raw_vector(b) == fff);
    CHECK(edge_class(a, b) == "GG");
  }
}

TEST_CASE("links of triangles") {
  auto g = build_g36();
  auto link_labels = [&](std::vector<std::string> tri) {
    std::set<std::string> out;
    auto lk = g.link(g.face_of(tri));
    for (const auto& m : lk.maximal_faces()) {
      CHECK(m.size() == 1);
      for (const auto& s : lk.labels_of(m)) out.insert(s);
    }
    return out;
  };
  CHECK(link_labels({"f_1456", "g_142356", "g_145623"}) == std::set<std::string>{"f_1234", "f_2356"});
  CHECK(link_labels({"e_146", "e_256", "e_345"}) == std::set<std::string>{"e_123", "g_142635", "g_163425"});
}

TEST_CASE("homology of Delta'") {
  auto h = homology(build_g36());
  CHECK(h.betti == std::vector<long long>{1, 0, 0, 126});
  CHECK(h.torsion_free());
}

TEST_CASE("sagbi data") {
  auto W = sagbi_weight_matrix();
  CHECK(tropical_minors(W) == raw_vector(parse_vertex("g_123456")) + raw_vector(parse_vertex("g_125634")));
  auto initial = sagbi_initial_minors(W);
  auto printed = sagbi_printed_polys();
  REQUIRE(initial.size() == 20);
  for (std::size_t i = 0; i < 20; ++i) {
    CHECK(printed[i].is_monomial());
    CHECK(initial[i] == printed[i]);
  }
  auto binoms = ffgg_printed_binomials();
  CHECK(binoms.size() == 35);
  for (const auto& b : binoms) CHECK(b.size() == 2);
}
