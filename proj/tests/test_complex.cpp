#include <doctest.h>

#include "tropgrass/complex.hpp"

using namespace tropgrass;

namespace {

std::vector<std::string> names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

Face sorted(Face f) {
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace

TEST_CASE("boundary of a tetrahedron is a 2-sphere") {
  SimplicialComplex k(names(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(k.f_vector() == std::vector<long long>{4, 6, 4});
  CHECK(k.dimension() == 2);
  CHECK(k.is_pure());
  CHECK(k.reduced_euler_characteristic() == 1);
  auto h = homology(k);
  CHECK(h.betti == std::vector<long long>{1, 0, 1});
  CHECK(h.torsion_free());
  CHECK(k.contains({1, 3}));
  CHECK_FALSE(k.contains({0, 1, 2, 3}));
}

TEST_CASE("projective plane has 2-torsion") {
  std::vector<Face> rp2{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                        {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  for (auto& f : rp2) f = sorted(f);
  SimplicialComplex k(names(6), rp2);
  CHECK(k.f_vector() == std::vector<long long>{6, 15, 10});
  auto h = homology(k);
  CHECK(h.betti == std::vector<long long>{1, 0, 0});
  CHECK_FALSE(h.torsion_free());
  REQUIRE(h.torsion.size() >= 2);
  CHECK(h.torsion[1] == std::vector<Integer>{2});
}

TEST_CASE("seven-vertex torus") {
  std::vector<Face> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back(sorted({i, (i + 1) % 7, (i + 3) % 7}));
    faces.push_back(sorted({i, (i + 2) % 7, (i + 3) % 7}));
  }
  SimplicialComplex k(names(7), faces);
  CHECK(k.f_vector() == std::vector<long long>{7, 21, 14});
  CHECK(homology(k).betti == std::vector<long long>{1, 2, 1});
  // every vertex link is a hexagon
  auto lk = k.link({0});
  CHECK(lk.f_vector() == std::vector<long long>{6, 6});
  CHECK(homology(lk).betti == std::vector<long long>{1, 1});
}

TEST_CASE("flag complexes and clique counts") {
  // octahedron graph: K_{2,2,2}
  Graph g(6, std::vector<bool>(6, true));
  for (int i = 0; i < 6; ++i) g[i][i] = false;
  for (int i = 0; i < 6; i += 2) g[i][i + 1] = g[i + 1][i] = false;
  auto k = SimplicialComplex::flag(names(6), g);
  CHECK(k.f_vector() == std::vector<long long>{6, 12, 8});
  CHECK(clique_f_vector(g) == k.f_vector());
  CHECK(homology(k).betti == std::vector<long long>{1, 0, 1});
  CHECK(one_skeleton(k) == g);
  auto lk = k.link({0});
  CHECK(lk.f_vector() == std::vector<long long>{4, 4});

  Graph c5(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) c5[i][(i + 1) % 5] = c5[(i + 1) % 5][i] = true;
  CHECK(homology(SimplicialComplex::flag(names(5), c5)).betti == std::vector<long long>{1, 1});
}

TEST_CASE("face removal, labels and JSON") {
  SimplicialComplex k({"a", "b", "c", "d"}, {{0, 1, 2}, {1, 2, 3}});
  auto r = k.remove_faces_containing({{1, 2}});
  CHECK(r.f_vector() == std::vector<long long>{4, 4});
  CHECK(k.face_of({"c", "a"}) == Face{0, 2});
  CHECK(k.labels_of({1, 3}) == std::vector<std::string>{"b", "d"});
  CHECK_THROWS(k.face_of({"z"}));
  CHECK_THROWS(k.link({0, 3}));
  auto back = SimplicialComplex::from_json(k.to_json());
  CHECK(back.maximal_faces() == k.maximal_faces());
  CHECK(back.labels() == k.labels());
  // non-maximal input faces are absorbed
  SimplicialComplex m({"a", "b", "c"}, {{0, 1}, {0, 1, 2}, {2}});
  CHECK(m.maximal_faces().size() == 1);
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("Smith normal form summary") {
  auto s = smith_summary(2, {{{0, 2}}, {{1, 3}}});
  CHECK(s.rank == 2);
  CHECK(s.invariant_factors == std::vector<Integer>{6});
  auto t = smith_summary(3, {{{0, 1}, {1, 1}}, {{1, 1}, {2, 1}}, {{0, 1}, {2, -1}}});
  CHECK(t.rank == 2);
  CHECK(t.invariant_factors.empty());
}
