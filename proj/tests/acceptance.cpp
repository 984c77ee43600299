// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all
//   acceptance --criterion N   run one

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "oracles.hpp"
#include "tropgrass/complex.hpp"
#include "tropgrass/exactalg/char7.hpp"
#include "tropgrass/exactalg/groebner.hpp"
#include "tropgrass/exactalg/hilbert.hpp"
#include "tropgrass/exactalg/ideal.hpp"
#include "tropgrass/exactalg/plucker.hpp"
#include "tropgrass/exactalg/valuation.hpp"
#include "tropgrass/g36.hpp"
#include "tropgrass/g36_algebra.hpp"
#include "tropgrass/treespace.hpp"
#include "tropgrass/troplin.hpp"

using namespace tropgrass;

namespace {

// Collects sub-checks for one criterion.
class Checks {
 public:
  template <class A, class B>
  void eq(const std::string& what, const A& expected, const B& actual) {
    bool ok = expected == actual;
    std::ostringstream os;
    os << "  [" << (ok ? "ok" : "MISMATCH") << "] " << what;
    if (!ok) os << ": expected " << show(expected) << ", got " << show(actual);
    std::cout << os.str() << "\n";
    ok_ = ok_ && ok;
  }
  void yes(const std::string& what, bool b) { eq(what, true, b); }
  void note(const std::string& s) { std::cout << "  " << s << "\n"; }
  bool ok() const { return ok_; }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (requires(std::ostream& o) { o << v; }) {
      std::ostringstream os;
      os << v;
      return os.str();
    } else if constexpr (requires { v.begin(); }) {
      std::string s = "(";
      for (const auto& x : v) s += show(x) + ",";
      if (s.size() > 1) s.pop_back();
      return s + ")";
    } else {
      return "?";
    }
  }
  bool ok_ = true;
};

PlueckerVector from_tree(const oracle::ExplicitTree& t) {
  PlueckerVector w(2, t.n);
  for (Subset s : k_subsets(t.n, 2)) {
    auto e = elements(s);
    w.set(s, ExtReal(Rational(-t.distance(e[0], e[1]))));
  }
  return w;
}

PlueckerVector sum_of(const std::vector<g36::Vertex>& vs) {
  PlueckerVector w(3, 6);
  for (const auto& v : vs) w = w + g36::raw_vector(v);
  return w;
}

Rational max_abs(const PlueckerVector& w) {
  Rational b = 0;
  for (const auto& v : w.finite_values()) b = std::max(b, Rational(abs(v)));
  return b;
}

// ------------------------------------------------------------------ 1

bool c1() {
  Checks c;
  c.eq("T_4 (vertices, facets)", std::vector<long long>{3, 3},
       std::vector<long long>{tn_stats(4).vertices, tn_stats(4).facets});
  auto k5 = tn_complex(5);
  c.eq("T_5 f-vector", std::vector<long long>{10, 15}, k5.f_vector());
  Graph g = one_skeleton(k5);
  bool regular = true;
  for (const auto& row : g) regular = regular && std::count(row.begin(), row.end(), true) == 3;
  c.yes("T_5 graph is 3-regular", regular);
  c.eq("T_5 graph has no triangles", std::size_t{2}, clique_f_vector(g).size());
  c.eq("T_6 f-vector", std::vector<long long>{25, 105, 105}, tn_complex(6).f_vector());
  for (int n = 4; n <= 9; ++n) {
    auto st = tn_stats(n);
    c.eq("T_" + std::to_string(n) + " vertices = 2^(n-1)-n-1", (1LL << (n - 1)) - n - 1, st.vertices);
    c.eq("T_" + std::to_string(n) + " facets = (2n-5)!!", oracle::double_factorial(2 * n - 5), st.facets);
    c.eq("T_" + std::to_string(n) + " maximal cliques = facets", st.facets, st.maximal_cliques);
  }
  return c.ok();
}

// ------------------------------------------------------------------ 2

bool c2() {
  Checks c;
  std::mt19937_64 rng(20);
  std::vector<SemiLabeledTree> trees;
  for (int k = 0; k < 20; ++k) trees.push_back(random_trivalent_tree(5 + k % 3, rng));
  for (unsigned p : {0u, 2u}) {
    alg::Field f(p);
    int agree = 0;
    for (const auto& t : trees) {
      alg::Ideal I(alg::plucker_ring(2, t.n, f), alg::plucker_generators(2, t.n, f));
      auto in = alg::initial_ideal(I, tree_to_plucker(t).finite_values());
      agree += alg::ideals_equal(in, alg::Ideal(I.ring(), j_sigma(t, f)));
    }
    c.eq("char " + std::to_string(p) + ": in_w(I_2n) = J_sigma", 20, agree);
  }
  return c.ok();
}

// ------------------------------------------------------------------ 3

bool c3() {
  Checks c;
  for (int n = 4; n <= 7; ++n) {
    alg::Ideal I(alg::plucker_ring(2, n), alg::plucker_generators(2, n));
    auto ring = I.ring();
    std::set<std::string> crossing, got, kempe;
    for (Subset q : k_subsets(n, 4)) {
      auto e = elements(q);
      auto p = [](int a, int b) { return "p_" + std::to_string(a) + std::to_string(b); };
      crossing.insert(p(e[0], e[2]) + "*" + p(e[1], e[3]));
    }
    for (const auto& m : alg::lead_monomials(I, circular_order(n))) got.insert(alg::to_string(m, *ring));
    for (const auto& m : kempe_crossing_generators(n)) kempe.insert(alg::to_string(m, *ring));
    c.yes("n=" + std::to_string(n) + ": initial ideal is the crossing ideal", got == crossing);
    c.yes("n=" + std::to_string(n) + ": Kempe generators are the crossings", kempe == crossing);
  }
  for (int n = 4; n <= 6; ++n) {
    alg::Ideal I(alg::plucker_ring(2, n), alg::plucker_generators(2, n));
    Integer closed = oracle::binom(2 * n - 4, n - 2) / (n - 1);
    c.eq("degree of I_{2," + std::to_string(n) + "}", closed, alg::degree_of(I));
  }
  c.eq("Catalan values for n = 4, 5, 6", std::vector<long>{2, 5, 14},
       std::vector<long>{oracle::catalan(2).get_si(), oracle::catalan(3).get_si(), oracle::catalan(4).get_si()});
  return c.ok();
}

// ------------------------------------------------------------------ 4

const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> kLinks{
    {{"e_146", "e_256", "e_345"}, {"e_123", "g_163425", "g_142635"}},
    {{"e_256", "e_346", "f_1346"}, {"f_1256", "g_132546", "g_142536"}},
    {{"e_156", "e_236", "g_142356"}, {"e_124", "e_134", "f_1456"}},
    {{"e_135", "f_1345", "f_2346"}, {"e_236", "e_246", "g_153426"}},
    {{"e_235", "f_2356", "g_143526"}, {"e_145", "f_1246", "e_134"}},
    {{"f_1236", "f_1345", "g_134526"}, {"e_126", "e_236", "g_132645"}},
    {{"f_1456", "g_142356", "g_145623"}, {"f_2356", "f_1234"}},
};

bool c4() {
  Checks c;
  auto delta = g36::build_delta();
  auto g = g36::build_g36();
  c.eq("f-vector of Delta", std::vector<long long>{65, 550, 1410, 1065, 15}, delta.f_vector());
  c.eq("f-vector of Delta'", std::vector<long long>{65, 550, 1395, 1035}, g.f_vector());
  auto census = g36::facet_census(g);
  std::vector<int> got;
  for (const char* cls : {"EEEE", "EEFF1", "EEFF2", "EFFG", "EEEG", "EEFG", "FFGG"}) got.push_back(census[cls]);
  c.eq("facet census EEEE..FFGG", std::vector<int>{30, 90, 90, 180, 240, 360, 45}, got);
  auto graph = g36::graph();
  int witnesses = 0;
  for (const auto& t : g36::fff_triangles())
    witnesses += graph[t[0]][t[1]] && graph[t[0]][t[2]] && graph[t[1]][t[2]] && !g.contains(t);
  c.eq("FFF triangles: edge-complete non-faces", 15, witnesses);
  auto h = homology(g);
  c.eq("Betti numbers", std::vector<long long>{1, 0, 0, 126}, h.betti);
  c.yes("torsion-free", h.torsion_free());
  int bip = 0;
  for (const auto& [a, b] : g36::tripartition_g_pairs()) {
    auto p = a.pairs;
    auto fff = g36::raw_vector(g36::Vertex::f(p[0] | p[1])) + g36::raw_vector(g36::Vertex::f(p[0] | p[2])) +
               g36::raw_vector(g36::Vertex::f(p[1] | p[2]));
    bip += g36::raw_vector(a) + g36::raw_vector(b) == fff;
  }
  c.eq("g + g' = f + f + f", 15, bip);
  for (const auto& [tri, want] : kLinks) {
    auto lk = g.link(g.face_of(tri));
    std::set<std::string> labels;
    bool points = true;
    for (const auto& m : lk.maximal_faces()) {
      points = points && m.size() == 1;
      for (const auto& s : lk.labels_of(m)) labels.insert(s);
    }
    c.yes("link of " + tri[0] + " " + tri[1] + " " + tri[2],
          points && labels == std::set<std::string>(want.begin(), want.end()));
  }
  return c.ok();
}

// ------------------------------------------------------------------ 5

bool c5() {
  Checks c;
  alg::Ideal I(alg::plucker_ring(3, 6), alg::plucker_generators(3, 6));
  for (const auto& cls : g36::facet_class_names())
    c.yes(cls + " sample is monomial-free",
          alg::is_monomial_free(I, g36::facet_cone_sample(cls).finite_values()).monomial_free);
  auto in = alg::initial_ideal(I, g36::facet_cone_sample("FFGG").finite_values());
  auto P = g36::bipyramid_prime_p(), Q = g36::bipyramid_prime_q();
  c.yes("FFGG: in_w = printed binomials", alg::ideals_equal(in, alg::Ideal(in.ring(), g36::ffgg_printed_binomials())));
  c.yes("FFGG: in_w = P cap Q", alg::ideals_equal(in, alg::intersect_ideals(P, Q)));
  c.eq("degrees of P, Q, I_{3,6}", std::vector<long>{38, 4, 42},
       std::vector<long>{alg::degree_of(P).get_si(), alg::degree_of(Q).get_si(), alg::degree_of(I).get_si()});
  return c.ok();
}

// ------------------------------------------------------------------ 6

bool c6() {
  Checks c;
  auto W = g36::sagbi_weight_matrix();
  c.yes("tropical minors of W = g_123456 + g_125634",
        tropical_minors(W) == g36::raw_vector(g36::parse_vertex("g_123456")) +
                                  g36::raw_vector(g36::parse_vertex("g_125634")));
  auto initial = g36::sagbi_initial_minors(W);
  auto printed = g36::sagbi_printed_polys();
  int match = 0;
  for (std::size_t i = 0; i < std::min(initial.size(), printed.size()); ++i)
    match += initial[i] == printed[i] && printed[i].is_monomial();
  c.eq("initial minors equal the printed signed monomials", 20, match);
  auto toric = g36::sagbi_toric_ideal(initial);
  c.yes("toric kernel = P", alg::ideals_equal(toric, g36::bipyramid_prime_p()));
  alg::Ideal I(alg::plucker_ring(3, 6), alg::plucker_generators(3, 6));
  auto dp = alg::degree_of(toric).get_si(), di = alg::degree_of(I).get_si();
  c.eq("degree of the toric ideal", 38L, dp);
  c.eq("degree of I_{3,6}", 42L, di);
  c.yes("degrees differ, so the minors are not a sagbi basis", dp != di);
  return c.ok();
}

// ------------------------------------------------------------------ 7

using Type = std::set<troplin::DPartition>;

Type printed_type(const std::vector<std::string>& listed) {
  Type t;
  for (const auto& s : listed) t.insert(troplin::parse_dpartition(s, 6));
  for (Subset s : k_subsets(6, 2)) {
    auto e = elements(s);
    t.insert(troplin::DPartition({singleton(e[0]), singleton(e[1]), full_set(6) & ~s}, 6));
  }
  return t;
}

Type type_of(const std::vector<g36::Vertex>& vs) { return troplin::plane_type(troplin::TropicalPlane(sum_of(vs))); }

// Is some facet in the orbit of cls's representative of the given type?
std::optional<Face> orbit_member_of_type(const std::string& cls, const Type& want) {
  for (const auto& f : g36::orbit_of(g36::face_of(g36::representative_facet(cls))))
    if (type_of(g36::vertices_of(f)) == want) return f;
  return std::nullopt;
}

std::string labels(const Face& f) {
  std::string s;
  for (const auto& v : g36::vertices_of(f)) s += (s.empty() ? "" : " ") + v.label();
  return s;
}

bool c7() {
  Checks c;
  auto w = pluecker_from_names(2, 6, {"12", "34", "56"});
  auto forms = troplin::circuits(troplin::dual(w));
  // coefficient of x_1..x_6 in each printed form, -1 for absent
  const std::vector<std::vector<int>> printed{
      {0, 0, 0, 0, 1, -1}, {0, 0, 0, 0, -1, 1}, {0, 0, 1, -1, 0, 0},
      {0, 0, -1, 1, 0, 0}, {1, -1, 0, 0, 0, 0}, {-1, 1, 0, 0, 0, 0},
  };
  bool forms_ok = forms.size() == printed.size();
  for (std::size_t i = 0; forms_ok && i < forms.size(); ++i) {
    std::vector<int> got(6, -1);
    for (const auto& t : forms[i].terms()) {
      int var = static_cast<int>(std::find(t.exp.begin(), t.exp.end(), 1u) - t.exp.begin());
      got[var] = static_cast<int>(t.coeff.value().get_num().get_si());
    }
    forms_ok = got == printed[i];
  }
  c.yes("six circuits of w* match the printed forms", forms_ok);

  const std::vector<std::string> sagbi{"1|23|456", "1|56|234", "2|13|456", "2|56|134", "3|12|456",
                                       "3|56|124", "4|12|356", "4|56|123", "5|12|346", "5|46|123",
                                       "6|12|345", "6|45|123", "12|34|56"};
  const std::vector<std::string> bipyramid{"1|34|256", "1|56|234", "2|34|156", "2|56|134", "3|12|456",
                                           "3|56|124", "4|12|356", "4|56|123", "5|12|346", "5|34|126",
                                           "6|12|345", "6|34|125", "12|34|56"};
  const std::vector<std::string> eeee{"1|23|456", "1|234|56", "2|13|456", "2|135|46", "3|12|456", "3|126|45",
                                      "4|26|135", "4|126|35", "5|16|234", "5|126|34", "6|15|234", "6|135|24"};
  for (const auto& [cls, listed, facets] :
       std::vector<std::tuple<std::string, std::vector<std::string>, std::size_t>>{
           {"EEFF1", sagbi, 28}, {"FFGG", bipyramid, 28}, {"EEEE", eeee, 27}}) {
    Type want = printed_type(listed);
    c.eq(cls + ": printed type has the stated size", facets, want.size());
    auto rep = type_of(g36::representative_facet(cls));
    c.eq(cls + ": representative has that many facets", facets, rep.size());
    auto hit = orbit_member_of_type(cls, want);
    c.yes(cls + ": printed type is realised in the orbit", hit.has_value());
    if (hit) c.note(cls + " realised by {" + labels(*hit) + "}");
  }
  // EEEE planes have no bounded faces
  bool unbounded = true;
  for (const auto& p : type_of(g36::representative_facet("EEEE"))) unbounded = unbounded && !troplin::is_bounded_face(p);
  c.yes("EEEE: all facets unbounded", unbounded);

  auto tet = [](std::vector<std::string> names) {
    std::vector<g36::Vertex> vs;
    for (const auto& s : names) vs.push_back(g36::parse_vertex(s));
    return type_of(vs);
  };
  auto a = tet({"f_1234", "f_1256", "g_123456", "g_125634"});
  auto b = tet({"f_1234", "f_3456", "g_123456", "g_125634"});
  auto d = tet({"f_1256", "f_3456", "g_123456", "g_125634"});
  c.yes("the three tetrahedra of a bipyramid share one type", a == b && b == d);

  auto snow = tree_from_splits(6, {"12|3456", "34|1256", "56|1234"});
  c.yes("Figure-1 tree is not a complete intersection",
        std::holds_alternative<troplin::NotCompleteIntersection>(troplin::ci_status_d2(snow)));
  for (int n = 6; n <= 7; ++n) {
    int non_cat = 0, certified = 0;
    for (const auto& splits : trivalent_trees(n)) {
      SemiLabeledTree t{n, splits, std::vector<Rational>(splits.size(), Rational(1)), std::vector<Rational>(n)};
      if (is_caterpillar(t)) continue;
      ++non_cat;
      certified += std::holds_alternative<troplin::NotCompleteIntersection>(troplin::ci_status_d2(t));
    }
    c.eq("n=" + std::to_string(n) + ": non-caterpillars certified", non_cat, certified);
  }
  return c.ok();
}

// ------------------------------------------------------------------ 8

bool c8() {
  Checks c;
  std::mt19937_64 rng(8);
  int ok = 0;
  for (int k = 0; k < 50; ++k) {
    auto w = from_tree(oracle::ExplicitTree::random(4 + k % 4, rng));
    auto back = troplin::reconstruct_plucker(troplin::TropicalPlane(w), 2, w.n(), max_abs(w) + 1);
    ok += equal_mod_phi(back, w);
  }
  c.eq("tree vectors recovered modulo phi", 50, ok);
  for (const auto& cls : g36::facet_class_names()) {
    auto w = g36::facet_cone_sample(cls);
    c.yes(cls + " sample recovered modulo phi",
          equal_mod_phi(troplin::reconstruct_plucker(troplin::TropicalPlane(w), 3, 6, max_abs(w) + 1), w));
  }
  return c.ok();
}

// ------------------------------------------------------------------ 9

bool c9() {
  Checks c;
  const auto w = alg::fano_weight(), wp = alg::fano_weight_prime();
  for (unsigned p : {0u, 2u}) {
    alg::Field f(p);
    auto cubic = alg::special_cubic(f);
    std::string tag = "char " + std::to_string(p) + ": ";
    c.yes(tag + "f vanishes on the generic matrix", alg::expand_on_generic_matrix(cubic, 3, 7).is_zero());
    auto in = alg::initial_form(cubic, w);
    if (p == 0)
      c.eq(tag + "in_w(f)", std::string("p_123*p_467*p_567"), alg::to_string(in.monic()));
    else
      c.eq(tag + "terms of in_w(f)", std::size_t{7}, in.size());

    alg::Ideal I(alg::plucker_ring(3, 7, f), alg::plucker_generators(3, 7, f));
    const auto order = alg::TermOrder::weight(w);
    auto basis = I.groebner(order);
    c.yes(tag + "f reduces to zero", alg::normal_form(cubic, basis, order).is_zero());
    if (p == 0) {
      auto census = alg::degree_census(basis);
      c.eq(tag + "reduced basis size", std::size_t{196}, basis.size());
      c.eq(tag + "degree census (2,3,4)", std::vector<std::size_t>{140, 52, 4},
           std::vector<std::size_t>{census[2], census[3], census[4]});
    }
    c.eq(tag + "monomial-free at w", p == 2, alg::is_monomial_free(I, w).monomial_free);
    c.eq(tag + "monomial-free at w'", p == 0, alg::is_monomial_free(I, wp).monomial_free);
  }
  return c.ok();
}

// ------------------------------------------------------------------ 10

bool c10() {
  Checks c;
  auto gf2 = alg::find_fano_perturbation(alg::ResidueField(alg::Field(2)), 21);
  c.note("GF(2) search: " + std::to_string(gf2.candidates_tried) + " candidates, exhausted = " +
         (gf2.exhausted ? "yes" : "no"));
  c.yes("GF(2)[t] perturbation of the Fano matrix with valuation w", gf2.matrix.has_value());
  if (gf2.matrix) c.yes("its valuations equal the Fano vector", alg::plucker_valuations(*gf2.matrix) == alg::fano_vector());

  // characteristic-2 certificate over the smallest field that admits one
  auto gf4 = alg::find_fano_perturbation(alg::ResidueField::gf2k(2, 0b111), 4);
  c.note("GF(4) search: " + std::to_string(gf4.candidates_tried) + " candidates, found = " +
         (gf4.matrix ? "yes" : "no"));
  if (gf4.matrix)
    c.note(std::string("GF(4)[t] valuations equal the Fano vector: ") +
           (alg::plucker_valuations(*gf4.matrix) == alg::fano_vector() ? "yes" : "no"));
  return c.ok();
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<bool()>> all{c1, c2, c3, c4, c5, c6, c7, c8, c9, c10};
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      which.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 64;
    }
  }
  if (which.empty())
    for (int k = 1; k <= 10; ++k) which.push_back(k);
  bool ok = true;
  for (int k : which) {
    if (k < 1 || k > 10) {
      std::cerr << "no criterion " << k << "\n";
      return 64;
    }
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
      pass = all[k - 1]();
    } catch (const std::exception& e) {
      std::cout << "  exception: " << e.what() << "\n";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "Criterion " << k << ": " << (pass ? "PASS" : "FAIL") << " (" << secs << " s)\n" << std::flush;
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}
