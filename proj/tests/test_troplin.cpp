#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tropgrass/g36.hpp"
#include "tropgrass/treespace.hpp"
#include "tropgrass/troplin.hpp"

using namespace tropgrass;
using namespace tropgrass::troplin;

namespace {

PlueckerVector snowflake() { return tree_to_plucker(tree_from_splits(6, {"12|3456", "34|1256", "56|1234"})); }

// min over j in J of x_j + w_{J - j} is attained twice, for every (d+1)-set J
bool member_by_hand(const PlueckerVector& w, const std::vector<Rational>& x) {
  for (Subset J : k_subsets(w.n(), w.d() + 1)) {
    std::optional<Rational> lo;
    int count = 0;
    for (int j : elements(J)) {
      const ExtReal& c = w.at(J & ~singleton(j));
      if (c.is_infinite()) continue;
      Rational v = x[j - 1] + c.value();
      if (!lo || v < *lo) {
        lo = v;
        count = 1;
      } else if (v == *lo) {
        ++count;
      }
    }
    if (count < 2) return false;
  }
  return true;
}

// Answers locate() with junk so the reconstruction must notice.
class LyingOracle : public PlaneOracle {
 public:
  explicit LyingOracle(TropicalPlane p) : p_(std::move(p)) {}
  int n() const override { return p_.n(); }
  bool member(const std::vector<Rational>& x) const override { return p_.member(x); }
  std::optional<std::vector<Rational>> locate(Subset fixed, const Rational& value,
                                              const Rational& upper) const override {
    auto x = p_.locate(fixed, value, upper);
    if (x && fixed == make_subset({2})) (*x)[0] -= 1;  // stays a member only by accident
    return x;
  }

 private:
  TropicalPlane p_;
};

}  // namespace

TEST_CASE("d-partitions") {
  auto p = parse_dpartition("456|1|23", 6);
  CHECK(p.name() == "1|23|456");
  CHECK(p.d() == 3);
  CHECK_FALSE(is_bounded_face(p));
  CHECK(is_bounded_face(parse_dpartition("12|34|56", 6)));
  CHECK_THROWS(parse_dpartition("12|23|456", 6));
  CHECK_THROWS(parse_dpartition("12|34", 6));
}

TEST_CASE("circuits of the snowflake") {
  auto w = snowflake();
  auto forms = circuits(w);
  CHECK(forms.size() == 20);
  TropicalPlane P(w);
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> x(6);
    for (auto& v : x) v = static_cast<long>(rng() % 4);
    CHECK(P.member(x) == member_by_hand(w, x));
  }
  PlueckerVector bad = w;
  bad.set(make_subset({1, 2}), ExtReal::infinity());
  bad.set(make_subset({1, 3}), ExtReal::infinity());
  CHECK_THROWS_AS(circuits(bad), DegenerateCircuit);
}

TEST_CASE("duality") {
  auto w = snowflake();
  auto d = dual(w);
  CHECK(d.d() == 4);
  CHECK(dual(d) == w);
  CHECK(d.at(make_subset({3, 4, 5, 6})) == w.at(make_subset({1, 2})));
}

TEST_CASE("tree planes have the splits and singletons as type") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + trial % 4;
    auto t = oracle::ExplicitTree::random(n, rng);
    PlueckerVector w(2, n);
    for (Subset s : k_subsets(n, 2)) {
      auto e = elements(s);
      w.set(s, ExtReal(Rational(-t.distance(e[0], e[1]))));
    }
    TropicalPlane P(w);
    std::set<std::string> expect, got;
    for (Subset s : t.splits()) expect.insert(DPartition({s, full_set(n) & ~s}, n).name());
    for (int i = 1; i <= n; ++i) expect.insert(DPartition({singleton(i), full_set(n) & ~singleton(i)}, n).name());
    for (const auto& f : P.maximal_faces()) {
      got.insert(f.partition.name());
      CHECK(member_by_hand(w, f.point));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("shifts by the lineality space") {
  std::mt19937_64 rng(12);
  auto w = g36::facet_cone_sample("EEFG");
  TropicalPlane P(w);
  for (const auto& f : P.maximal_faces()) {
    std::vector<Rational> a(6);
    for (auto& v : a) v = static_cast<long>(rng() % 7) - 3;
    PlueckerVector shifted = w + PlueckerVector::phi(3, a);
    std::vector<Rational> y = f.point, ones = f.point;
    for (int i = 0; i < 6; ++i) {
      y[i] += a[i];
      ones[i] += 5;
    }
    CHECK(TropicalPlane(shifted).member(y));
    CHECK(P.member(ones));
  }
}

TEST_CASE("no bounded faces when n <= 2d - 1") {
  // duals of 5-leaf trees are planes with d = 3, n = 5
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 4; ++trial) {
    auto w = dual(tree_to_plucker(random_trivalent_tree(5, rng)));
    TropicalPlane P(w);
    auto faces = P.maximal_faces();
    CHECK_FALSE(faces.empty());
    for (const auto& f : faces) {
      CHECK_FALSE(is_bounded_face(f.partition));
      CHECK(member_by_hand(w, f.point));
    }
  }
}

TEST_CASE("bipyramid tetrahedra share one type") {
  auto type_of = [](std::vector<std::string> labels) {
    PlueckerVector w(3, 6);
    for (const auto& l : labels) w = w + g36::raw_vector(g36::parse_vertex(l));
    return plane_type(TropicalPlane(w));
  };
  // three tetrahedra f f g g' around the edge g_123456 g_125634
  auto a = type_of({"f_1234", "f_1256", "g_123456", "g_125634"});
  auto b = type_of({"f_1234", "f_3456", "g_123456", "g_125634"});
  auto c = type_of({"f_1256", "f_3456", "g_123456", "g_125634"});
  CHECK(a.size() == 28);
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("reconstruction") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    auto t = random_trivalent_tree(5 + trial % 3, rng);
    auto w = tree_to_plucker(t);
    Rational bound = 0;
    for (const auto& v : w.finite_values()) bound = std::max(bound, Rational(abs(v)));
    auto back = reconstruct_plucker(TropicalPlane(w), 2, w.n(), bound);
    CHECK(equal_mod_phi(back, w));
  }
  auto w = g36::facet_cone_sample("FFGG");
  CHECK(equal_mod_phi(reconstruct_plucker(TropicalPlane(w), 3, 6, 4), w));
  CHECK_THROWS_AS(reconstruct_plucker(LyingOracle(TropicalPlane(snowflake())), 2, 6, 4), ReconstructionError);
  CHECK_THROWS_AS(reconstruct_plucker(TropicalPlane(snowflake()), 3, 6, 4), ReconstructionError);
  CHECK_THROWS_AS(reconstruct_plucker(TropicalPlane(snowflake()), 6, 6, 4), std::invalid_argument);
}

TEST_CASE("complete intersection status") {
  auto snow = tree_from_splits(6, {"12|3456", "34|1256", "56|1234"});
  auto st = ci_status_d2(snow);
  REQUIRE(std::holds_alternative<NotCompleteIntersection>(st));
  auto cert = std::get<NotCompleteIntersection>(st).certificate;
  CHECK(cert.size() == 15);
  for (const auto& p : cert) {
    std::set<int> four{p.a, p.b, p.j, p.k};
    CHECK(four.size() == 4);
    for (const auto& s : snow.splits)
      if (s.separates(p.a, p.b)) CHECK_FALSE(s.separates(p.j, p.k));
  }
  auto cat = tree_from_splits(6, {"12|3456", "123|456", "56|1234"});
  CHECK(std::holds_alternative<CiUnknown>(ci_status_d2(cat)));
  for (const auto& splits : trivalent_trees(5)) {
    SemiLabeledTree t{5, splits, std::vector<Rational>(2, Rational(1)), std::vector<Rational>(5)};
    CHECK(std::holds_alternative<CiUnknown>(ci_status_d2(t)));
  }
  CHECK_THROWS(ci_status_d2(tree_from_splits(6, {"123|456"})));
}
