#include "tropgrass/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "tropgrass/complex.hpp"
#include "tropgrass/exactalg/char7.hpp"
#include "tropgrass/exactalg/hilbert.hpp"
#include "tropgrass/exactalg/ideal.hpp"
#include "tropgrass/exactalg/io.hpp"
#include "tropgrass/exactalg/plucker.hpp"
#include "tropgrass/g36.hpp"
#include "tropgrass/g36_algebra.hpp"
#include "tropgrass/treespace.hpp"
#include "tropgrass/troplin.hpp"

namespace tropgrass::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string output;
  unsigned characteristic = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 1;
  bool progress = false;

  std::string input, ideal, other, weight, point;
  std::string plucker;  // "d,n"
  int n = 6;
  int trees = 5;
  std::string bound = "0";
  bool homology = false, links = false, cones = false, wprime = false;
  std::string export_path;
};

struct Report {
  json body = json::object();
  json claims = json::array();
  bool budget_hit = false;

  void claim(const std::string& name, const json& expected, const json& actual) {
    claims.push_back({{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", expected == actual}});
  }
  bool pass() const {
    for (const auto& c : claims)
      if (!c.at("pass").get<bool>()) return false;
    return true;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

alg::Field field_of(const Config& c) {
  if (c.characteristic != 0 && !is_prime(c.characteristic))
    throw UsageError("characteristic must be 0 or a prime");
  return alg::Field(c.characteristic);
}

alg::GroebnerOptions options_of(const Config& c, std::ostream& err) {
  alg::GroebnerOptions o;
  o.step_budget = c.budget;
  if (c.progress) {
    o.progress = [&err](const alg::GroebnerProgress& p) {
      err << json{{"checkpoint", {{"steps", p.steps},
                                  {"pairs_done", p.pairs_done},
                                  {"pairs_pending", p.pairs_pending},
                                  {"basis_size", p.basis_size},
                                  {"degree", p.current_degree}}}}
                 .dump()
          << "\n";
    };
  }
  return o;
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json polys(const std::vector<alg::MultiPoly>& v) {
  json a = json::array();
  for (const auto& f : v) a.push_back(to_string(f));
  return a;
}

long long double_factorial(int k) {
  long long r = 1;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

long long factorial(int k) {
  long long r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Ideal from --ideal FILE or --plucker d,n.
alg::Ideal load_ideal(const Config& c, const std::string& path) {
  if (!path.empty()) return alg::parse_ideal_json(read_file(path));
  if (c.plucker.empty()) throw UsageError("give --ideal FILE or --plucker d,n");
  auto comma = c.plucker.find(',');
  if (comma == std::string::npos) throw UsageError("--plucker expects d,n");
  int d = std::stoi(c.plucker.substr(0, comma)), n = std::stoi(c.plucker.substr(comma + 1));
  alg::Field f = field_of(c);
  return alg::Ideal(alg::plucker_ring(d, n, f), alg::plucker_generators(d, n, f, true));
}

// ---------------------------------------------------------------- tree

Report tree_reconstruct(const Config& c) {
  if (c.input.empty()) throw UsageError("tree reconstruct needs --input FILE.csv");
  PlueckerVector w = parse_distance_csv(read_file(c.input));
  Report r;
  auto check = four_point_check(w);
  r.body["four_point"] = check.ok;
  if (!check.ok) {
    r.body["violation"] = *check.violation;
    r.claim("four-point condition", true, false);
    return r;
  }
  SemiLabeledTree t = additive_linkage(w);
  r.body["newick"] = to_newick(t);
  r.body["tree"] = json::parse(tree_to_json(t));
  r.claim("tree vector reproduces the input", true, tree_to_plucker(t) == w);
  return r;
}

// ---------------------------------------------------------------- treespace

Report treespace_stats(const Config& c) {
  if (c.n < 4 || c.n > 9) throw UsageError("--n must be between 4 and 9");
  TnStats st = tn_stats(c.n);
  Report r;
  r.body["n"] = c.n;
  r.body["vertices"] = st.vertices;
  r.body["facets"] = st.facets;
  r.body["f_vector"] = st.f_vector;
  r.body["reduced_euler_characteristic"] = st.reduced_euler;
  r.claim("vertices = 2^(n-1) - n - 1", (1LL << (c.n - 1)) - c.n - 1, st.vertices);
  r.claim("facets = (2n-5)!!", double_factorial(2 * c.n - 5), st.facets);
  r.claim("pure of dimension n-4", true, st.pure && static_cast<int>(st.f_vector.size()) == c.n - 3);
  r.claim("flag: maximal cliques are the trees", st.facets, st.maximal_cliques);
  r.claim("reduced Euler characteristic", (c.n % 2 == 0 ? 1 : -1) * factorial(c.n - 2), st.reduced_euler);
  if (c.n == 5) {
    Graph g = compatibility_graph(5);
    bool regular = true;
    for (const auto& row : g) regular = regular && std::count(row.begin(), row.end(), true) == 3;
    r.claim("Petersen graph: 15 edges", 15, st.f_vector.at(1));
    r.claim("Petersen graph: 3-regular", true, regular);
  }
  if (c.n == 6) r.claim("n = 6 counts (vertices, edges, triangles)", json({25, 105, 105}), st.f_vector);
  if (!c.export_path.empty()) write_file(c.export_path, tn_complex(c.n).to_json());
  return r;
}

Report treespace_verify_initial(const Config& c) {
  if (c.n < 4 || c.n > 9) throw UsageError("--n must be between 4 and 9");
  alg::Field f = field_of(c);
  std::mt19937_64 rng(c.seed);
  alg::Ideal I(alg::plucker_ring(2, c.n, f), alg::plucker_generators(2, c.n, f, true));
  Report r;
  r.body["n"] = c.n;
  r.body["field"] = f.name();
  r.body["trees"] = json::array();
  for (int k = 0; k < c.trees; ++k) {
    SemiLabeledTree t = random_trivalent_tree(c.n, rng);
    auto w = tree_to_plucker(t).finite_values();
    alg::Ideal in = alg::initial_ideal(I, w, {});
    alg::Ideal js(I.ring(), j_sigma(t, f));
    bool eq = alg::ideals_equal(in, js);
    bool mf = alg::is_monomial_free(I, w).monomial_free;
    r.body["trees"].push_back({{"newick", to_newick(t)}, {"w", rationals(w)}});
    r.claim("tree " + std::to_string(k) + ": in_w(I) = J_sigma", true, eq);
    r.claim("tree " + std::to_string(k) + ": monomial-free", true, mf);
  }
  return r;
}

// ---------------------------------------------------------------- g36

const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>>& expected_links() {
  static const std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> links{
      {{"e_146", "e_256", "e_345"}, {"e_123", "g_163425", "g_142635"}},
      {{"e_256", "e_346", "f_1346"}, {"f_1256", "g_132546", "g_142536"}},
      {{"e_156", "e_236", "g_142356"}, {"e_124", "e_134", "f_1456"}},
      {{"e_135", "f_1345", "f_2346"}, {"e_236", "e_246", "g_153426"}},
      {{"e_235", "f_2356", "g_143526"}, {"e_145", "f_1246", "e_134"}},
      {{"f_1236", "f_1345", "g_134526"}, {"e_126", "e_236", "g_132645"}},
      {{"f_1456", "g_142356", "g_145623"}, {"f_2356", "f_1234"}},
  };
  return links;
}

Report g36_verify(const Config& c, std::ostream& err) {
  Report r;
  SimplicialComplex delta = g36::build_delta();
  SimplicialComplex g = g36::build_g36();
  r.body["delta_f_vector"] = delta.f_vector();
  r.body["g36_f_vector"] = g.f_vector();
  r.claim("f-vector of Delta", json({65, 550, 1410, 1065, 15}), delta.f_vector());
  r.claim("f-vector of Delta'", json({65, 550, 1395, 1035}), g.f_vector());
  r.claim("Delta' is pure", true, g.is_pure());

  std::map<std::string, int> edges;
  const auto& vs = g36::vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto cls = g36::edge_class(vs[i], vs[j]);
      if (!cls.empty()) ++edges[cls];
    }
  r.claim("edge classes", json({{"EE", 100}, {"EF", 120}, {"EG", 180}, {"FF", 45}, {"FG", 90}, {"GG", 15}}),
          json(edges));

  auto census = g36::facet_census(g);
  r.body["facet_census"] = census;
  r.claim("facet census",
          json({{"EEEE", 30}, {"EEFF1", 90}, {"EEFF2", 90}, {"EFFG", 180}, {"EEEG", 240}, {"EEFG", 360}, {"FFGG", 45}}),
          json(census));

  auto graph = g36::graph();
  int edge_complete = 0, non_faces = 0;
  for (const auto& t : g36::fff_triangles()) {
    if (graph[t[0]][t[1]] && graph[t[0]][t[2]] && graph[t[1]][t[2]]) ++edge_complete;
    if (!g.contains(t)) ++non_faces;
  }
  r.claim("FFF triangles with all edges present", 15, edge_complete);
  r.claim("FFF triangles missing from Delta'", 15, non_faces);

  int identity = 0;
  for (const auto& [a, b] : g36::tripartition_g_pairs()) {
    auto p = a.pairs;
    auto lhs = g36::ambient_vector(a) + g36::ambient_vector(b);
    auto rhs = g36::ambient_vector(g36::Vertex::f(p[0] | p[1])) + g36::ambient_vector(g36::Vertex::f(p[0] | p[2])) +
               g36::ambient_vector(g36::Vertex::f(p[1] | p[2]));
    if (reduce_mod_phi(lhs) == reduce_mod_phi(rhs)) ++identity;
  }
  r.claim("g + g' = f + f + f for all tripartitions", 15, identity);

  if (c.homology) {
    Homology h = homology(g);
    r.body["betti"] = h.betti;
    r.claim("Betti numbers", json({1, 0, 0, 126}), h.betti);
    r.claim("torsion-free", true, h.torsion_free());
    r.claim("reduced Euler characteristic", -126, g.reduced_euler_characteristic());
  }
  if (c.links) {
    json out = json::array();
    for (const auto& [tri, expected] : expected_links()) {
      SimplicialComplex lk = g.link(g.face_of(tri));
      std::set<std::string> got, want(expected.begin(), expected.end());
      bool points = true;
      for (const auto& m : lk.maximal_faces()) {
        if (m.size() != 1) points = false;
        for (const auto& s : lk.labels_of(m)) got.insert(s);
      }
      std::string name = "link of {" + tri[0] + ", " + tri[1] + ", " + tri[2] + "}";
      r.claim(name, json(want), points ? json(got) : json(lk.to_json()));
    }
  }
  if (c.cones) {
    alg::Ideal I(alg::plucker_ring(3, 6), alg::plucker_generators(3, 6, {}, true));
    auto opts = options_of(c, err);
    for (const auto& cls : g36::facet_class_names()) {
      auto w = g36::facet_cone_sample(cls).finite_values();
      r.claim(cls + " sample is monomial-free", true, alg::is_monomial_free(I, w, opts).monomial_free);
    }
    auto w = g36::facet_cone_sample("FFGG").finite_values();
    alg::Ideal in = alg::initial_ideal(I, w, opts);
    alg::Ideal printed(in.ring(), g36::ffgg_printed_binomials());
    alg::Ideal P = g36::bipyramid_prime_p(), Q = g36::bipyramid_prime_q();
    r.claim("FFGG in_w equals the printed binomials", true, alg::ideals_equal(in, printed, opts));
    r.claim("FFGG in_w equals P cap Q", true, alg::ideals_equal(in, alg::intersect_ideals(P, Q, opts), opts));
    r.claim("degrees of P, Q, I_{3,6}", json({38, 4, 42}),
            json({alg::degree_of(P).get_si(), alg::degree_of(Q).get_si(), alg::degree_of(I).get_si()}));
  }
  if (!c.export_path.empty()) write_file(c.export_path, g.to_json());
  return r;
}

// ---------------------------------------------------------------- plane

PlueckerVector load_vector(const Config& c) {
  if (c.input.empty()) throw UsageError("give --input w.json");
  return parse_pluecker_json(read_file(c.input));
}

Report plane_type_cmd(const Config& c) {
  troplin::TropicalPlane P(load_vector(c));
  Report r;
  json faces = json::array();
  for (const auto& f : P.maximal_faces())
    faces.push_back({{"partition", f.partition.name()},
                     {"bounded", troplin::is_bounded_face(f.partition)},
                     {"point", rationals(f.point)}});
  r.body["faces"] = faces;
  r.body["count"] = faces.size();
  bool expect_none_bounded = P.n() <= 2 * P.d() - 1;
  if (expect_none_bounded) {
    bool any = false;
    for (const auto& f : faces) any = any || f.at("bounded").get<bool>();
    r.claim("no bounded faces when n <= 2d - 1", false, any);
  }
  return r;
}

Report plane_member_cmd(const Config& c) {
  troplin::TropicalPlane P(load_vector(c));
  if (c.point.empty()) throw UsageError("plane member needs --point x1,x2,...");
  std::vector<Rational> x;
  std::stringstream ss(c.point);
  std::string tok;
  while (std::getline(ss, tok, ',')) x.push_back(parse_rational(tok));
  Report r;
  auto bad = P.violated_circuit(x);
  r.body["member"] = !bad.has_value();
  if (bad) r.body["violated_circuit"] = subset_name(*bad, P.n());
  return r;
}

Report plane_dual_cmd(const Config& c) {
  PlueckerVector w = load_vector(c);
  Report r;
  PlueckerVector d = troplin::dual(w);
  r.body["dual"] = json::parse(pluecker_to_json(d));
  r.claim("dual is an involution", true, troplin::dual(d) == w);
  return r;
}

Report plane_reconstruct_cmd(const Config& c) {
  PlueckerVector w = load_vector(c);
  Rational bound = parse_rational(c.bound);
  for (const auto& v : w.finite_values())
    if (abs(v) > bound) bound = abs(v);
  troplin::TropicalPlane P(w);
  PlueckerVector back = troplin::reconstruct_plucker(P, w.d(), w.n(), bound);
  Report r;
  r.body["reconstructed"] = json::parse(pluecker_to_json(back));
  r.claim("round trip modulo image(phi)", true, equal_mod_phi(back, w));
  return r;
}

// ---------------------------------------------------------------- groebner

std::vector<Rational> load_weight(const Config& c, const alg::PolyRing& ring) {
  if (c.weight.empty()) throw UsageError("give --weight FILE");
  return alg::parse_weight_json(read_file(c.weight), ring);
}

Report groebner_initial(const Config& c, std::ostream& err) {
  alg::Ideal I = load_ideal(c, c.ideal);
  auto w = load_weight(c, *I.ring());
  alg::Ideal in = alg::initial_ideal(I, w, options_of(c, err));
  Report r;
  r.body["initial_ideal"] = json::parse(alg::ideal_to_json(in));
  return r;
}

Report groebner_monomial_free(const Config& c, std::ostream& err) {
  alg::Ideal I = load_ideal(c, c.ideal);
  auto w = load_weight(c, *I.ring());
  auto res = alg::is_monomial_free(I, w, options_of(c, err));
  Report r;
  r.body["monomial_free"] = res.monomial_free;
  r.body["method"] = res.method;
  if (res.witness) r.body["witness"] = alg::to_string(*res.witness, *I.ring());
  return r;
}

Report groebner_degree(const Config& c, std::ostream& err) {
  alg::Ideal I = load_ideal(c, c.ideal);
  alg::TermOrder order = c.weight.empty() ? alg::TermOrder::degrevlex() : alg::TermOrder::weight(load_weight(c, *I.ring()));
  auto lead = alg::lead_monomials(I, order, options_of(c, err));
  auto h = alg::hilbert_data(lead, I.ring()->size());
  Report r;
  r.body["degree"] = h.degree.get_str();
  r.body["dimension"] = h.dimension;
  json num = json::array();
  for (const auto& x : h.h) num.push_back(x.get_str());
  r.body["h_numerator"] = num;
  return r;
}

Report groebner_intersect(const Config& c, std::ostream& err) {
  alg::Ideal a = load_ideal(c, c.ideal);
  if (c.other.empty()) throw UsageError("groebner intersect needs --other FILE");
  alg::Ideal b = alg::parse_ideal_json(read_file(c.other));
  alg::Ideal cap = alg::intersect_ideals(a, b, options_of(c, err));
  Report r;
  r.body["intersection"] = json::parse(alg::ideal_to_json(cap));
  return r;
}

// ---------------------------------------------------------------- char7, sagbi

Report char7_demo(const Config& c, std::ostream& err) {
  alg::Field f = field_of(c);
  auto opts = options_of(c, err);
  alg::Ideal I(alg::plucker_ring(3, 7, f), alg::plucker_generators(3, 7, f, true));
  auto w = c.wprime ? alg::fano_weight_prime() : alg::fano_weight();
  const auto order = alg::TermOrder::weight(w);
  const unsigned p = f.characteristic();
  Report r;
  r.body["field"] = f.name();
  r.body["weight"] = c.wprime ? "w' = w - e_124" : "w (Fano lines)";

  // These need no Groebner basis and run even when the budget is exhausted.
  alg::MultiPoly cubic = alg::special_cubic(f);
  alg::MultiPoly in_f = alg::initial_form(cubic, w);
  r.body["special_cubic"] = alg::to_string(cubic);
  r.body["initial_form_of_cubic"] = alg::to_string(in_f);
  r.claim("cubic vanishes on the generic matrix", true, alg::expand_on_generic_matrix(cubic, 3, 7).is_zero());
  if (p == 0 && !c.wprime)
    r.claim("in_w(f) is the monomial p_123*p_467*p_567", "p_123*p_467*p_567", alg::to_string(in_f.monic()));
  else if (p == 2 && !c.wprime)
    r.claim("in_w(f) has seven terms", 7, in_f.size());
  else if (p == 0)
    r.claim("in_w'(f) has two terms", 2, in_f.size());
  else if (p == 2)
    r.claim("in_w'(f) is a monomial", true, in_f.is_monomial());

  std::vector<alg::MultiPoly> basis;
  try {
    basis = I.groebner(order, opts);
  } catch (const alg::BudgetExceeded& e) {
    // fall back to the quadric generators as a partial basis
    alg::MultiPoly rem = alg::normal_form(cubic, I.generators(), order);
    r.body["budget_exceeded"] = {{"steps", e.steps()}, {"partial_basis_size", e.basis_size()}};
    r.claim("normal form modulo the quadrics is reduced", true,
            alg::normal_form(rem, I.generators(), order) == rem);
    r.budget_hit = true;
    return r;
  }
  json census = json::object();
  for (auto [deg, count] : alg::degree_census(basis)) census[std::to_string(deg)] = count;
  r.body["basis_size"] = basis.size();
  r.body["basis_degree_census"] = census;
  r.claim("cubic lies in the ideal", true, alg::normal_form(cubic, basis, order).is_zero());
  if (p == 0 && !c.wprime) {
    r.claim("basis size", 196, basis.size());
    r.claim("basis degree census", json({{"2", 140}, {"3", 52}, {"4", 4}}), census);
  }

  auto res = alg::is_monomial_free(I, w, opts);
  r.body["monomial_free"] = res.monomial_free;
  r.body["method"] = res.method;
  if (res.witness) r.body["witness"] = alg::to_string(*res.witness, *I.ring());
  if (p == 0 || p == 2) r.claim("monomial-free", (p == 2) != c.wprime, res.monomial_free);
  return r;
}

Report sagbi_demo(const Config& c, std::ostream& err) {
  auto opts = options_of(c, err);
  Report r;
  TropMatrix W = g36::sagbi_weight_matrix();
  PlueckerVector minors = tropical_minors(W);
  PlueckerVector gg = g36::raw_vector(g36::parse_vertex("g_123456")) + g36::raw_vector(g36::parse_vertex("g_125634"));
  r.body["tropical_minors"] = json::parse(pluecker_to_json(minors));
  r.claim("tropical minors of W = g_123456 + g_125634", true, minors == gg);

  auto initial = g36::sagbi_initial_minors(W);
  auto printed = g36::sagbi_printed_polys();
  int match = 0;
  for (std::size_t i = 0; i < initial.size(); ++i) match += initial[i] == printed[i];
  r.body["initial_minors"] = polys(initial);
  r.claim("initial minors match the printed monomials", 20, match);

  alg::Ideal toric = g36::sagbi_toric_ideal(initial, opts);
  alg::Ideal P = g36::bipyramid_prime_p();
  r.claim("toric ideal of the initial minors = P", true, alg::ideals_equal(toric, P, opts));
  alg::Ideal I(alg::plucker_ring(3, 6), alg::plucker_generators(3, 6, {}, true));
  auto dp = alg::degree_of(toric, alg::TermOrder::degrevlex(), opts).get_si();
  auto di = alg::degree_of(I, alg::TermOrder::degrevlex(), opts).get_si();
  r.claim("degree of the toric ideal", 38, dp);
  r.claim("degree of I_{3,6}", 42, di);
  r.body["sagbi_basis"] = dp == di;
  return r;
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad value in ") + name);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Tropical Grassmannian toolkit", "tropgrass"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.add_option("-o,--output", c.output, "write the JSON report here");
  std::optional<std::uint64_t> seed, budget;
  app.add_option("--seed", seed, "random seed (default: TROPGRASS_SEED or 1)");
  app.add_option("--budget", budget, "Groebner step budget, 0 = none (default: TROPGRASS_BUDGET)");
  app.add_flag("--progress", c.progress, "print Groebner checkpoints to stderr");
  app.add_option("--char", c.characteristic, "field characteristic (0 or prime)");

  std::function<Report()> action;
  auto bind = [&](CLI::App* sub, std::function<Report()> f) { sub->callback([&action, f] { action = f; }); };

  auto* tree = app.add_subcommand("tree", "phylogenetic trees")->require_subcommand(1);
  auto* tree_rec = tree->add_subcommand("reconstruct", "distance matrix CSV to a tree");
  tree_rec->add_option("--input", c.input)->required();
  bind(tree_rec, [&] { return tree_reconstruct(c); });

  auto* ts = app.add_subcommand("treespace", "the space of trees T_n")->require_subcommand(1);
  auto* ts_stats = ts->add_subcommand("stats", "vertex, facet and face counts");
  ts_stats->add_option("--n", c.n);
  ts_stats->add_option("--export", c.export_path, "write the complex as JSON");
  bind(ts_stats, [&] { return treespace_stats(c); });
  auto* ts_init = ts->add_subcommand("verify-initial", "J_sigma = in_w(I_2n) on random trees");
  ts_init->add_option("--n", c.n);
  ts_init->add_option("--trees", c.trees);
  bind(ts_init, [&] { return treespace_verify_initial(c); });

  auto* g36c = app.add_subcommand("g36", "the tropical Grassmannian G(3,6)")->require_subcommand(1);
  auto* g36v = g36c->add_subcommand("verify", "f-vectors, census and the bipyramid identity");
  g36v->add_flag("--homology", c.homology);
  g36v->add_flag("--links", c.links);
  g36v->add_flag("--cones", c.cones);
  g36v->add_option("--export", c.export_path, "write Delta' as JSON");
  bind(g36v, [&] { return g36_verify(c, err); });

  auto* plane = app.add_subcommand("plane", "tropical linear spaces")->require_subcommand(1);
  auto* pt = plane->add_subcommand("type", "maximal faces and their d-partitions");
  pt->add_option("--input", c.input)->required();
  bind(pt, [&] { return plane_type_cmd(c); });
  auto* pm = plane->add_subcommand("member", "membership of a point");
  pm->add_option("--input", c.input)->required();
  pm->add_option("--point", c.point)->required();
  bind(pm, [&] { return plane_member_cmd(c); });
  auto* pd = plane->add_subcommand("dual", "complemented coordinates");
  pd->add_option("--input", c.input)->required();
  bind(pd, [&] { return plane_dual_cmd(c); });
  auto* pr = plane->add_subcommand("reconstruct", "recover w from the plane");
  pr->add_option("--input", c.input)->required();
  pr->add_option("--bound", c.bound, "bound on |w| (raised to the actual maximum)");
  bind(pr, [&] { return plane_reconstruct_cmd(c); });

  auto* gb = app.add_subcommand("groebner", "ideal computations")->require_subcommand(1);
  auto add_ideal = [&](CLI::App* s) {
    s->add_option("--ideal", c.ideal, "ideal JSON");
    s->add_option("--plucker", c.plucker, "use I_{d,n}, given as d,n");
  };
  auto* gi = gb->add_subcommand("initial", "initial ideal in_w(I)");
  add_ideal(gi);
  gi->add_option("--weight", c.weight)->required();
  bind(gi, [&] { return groebner_initial(c, err); });
  auto* gm = gb->add_subcommand("monomial-free", "does in_w(I) contain a monomial");
  add_ideal(gm);
  gm->add_option("--weight", c.weight)->required();
  bind(gm, [&] { return groebner_monomial_free(c, err); });
  auto* gd = gb->add_subcommand("degree", "degree via the Hilbert series");
  add_ideal(gd);
  gd->add_option("--weight", c.weight);
  bind(gd, [&] { return groebner_degree(c, err); });
  auto* gx = gb->add_subcommand("intersect", "intersection of two ideals");
  add_ideal(gx);
  gx->add_option("--other", c.other)->required();
  bind(gx, [&] { return groebner_intersect(c, err); });

  auto* c7 = app.add_subcommand("char7", "characteristic dependence at G(3,7)")->require_subcommand(1);
  auto* c7d = c7->add_subcommand("demo", "the Fano vector computation");
  c7d->add_flag("--wprime", c.wprime, "use w' = w - e_124");
  bind(c7d, [&] { return char7_demo(c, err); });

  auto* sg = app.add_subcommand("sagbi", "maximal minors are not a universal sagbi basis")->require_subcommand(1);
  auto* sgd = sg->add_subcommand("demo", "the 3x6 counterexample");
  bind(sgd, [&] { return sagbi_demo(c, err); });

  std::string command;
  try {
    app.parse(argc, argv);
    c.seed = seed ? *seed : env_u64("TROPGRASS_SEED", 1);
    c.budget = budget ? *budget : env_u64("TROPGRASS_BUDGET", 0);
    for (int i = 1; i < argc; ++i) {
      std::string a = argv[i];
      if (a.rfind("-", 0) == 0) break;
      command += (command.empty() ? "" : " ") + a;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  json report;
  int code = kExitOk;
  try {
    Report r = action();
    report = r.body;
    report["claims"] = r.claims;
    report["pass"] = r.pass();
    if (r.budget_hit) code = kExitBudget;
    else if (!r.pass()) code = kExitMismatch;
  } catch (const alg::BudgetExceeded& e) {
    report = {{"error", "budget"}, {"message", e.what()}, {"steps", e.steps()}, {"partial_basis_size", e.basis_size()}};
    code = kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report["command"] = command;
  report["seed"] = c.seed;
  std::string text = report.dump(2) + "\n";
  if (c.output.empty()) out << text;
  else write_file(c.output, text);
  return code;
}

}  // namespace tropgrass::cli
