#include "tropgrass/troplin.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>

#include "tropgrass/diffcons.hpp"

namespace tropgrass::troplin {

DPartition::DPartition(std::vector<Subset> blocks, int n) : n_(n) {
  Subset seen = 0;
  for (Subset b : blocks) {
    if (b == 0 || (b & seen) != 0 || (b & ~full_set(n)) != 0) throw std::invalid_argument("not a partition of [n]");
    seen |= b;
  }
  if (seen != full_set(n)) throw std::invalid_argument("blocks do not cover [n]");
  std::sort(blocks.begin(), blocks.end(), [n](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return subset_name(a, n) < subset_name(b, n);
  });
  blocks_ = std::move(blocks);
}

std::string DPartition::name() const {
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "|" : "") + subset_name(blocks_[i], n_);
  return s;
}

DPartition parse_dpartition(const std::string& text, int n) {
  std::vector<Subset> blocks;
  std::size_t start = 0;
  while (true) {
    auto bar = text.find('|', start);
    blocks.push_back(parse_subset(text.substr(start, bar - start), n));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return DPartition(std::move(blocks), n);
}

bool is_bounded_face(const DPartition& p) {
  return std::all_of(p.blocks().begin(), p.blocks().end(), [](Subset b) { return subset_size(b) >= 2; });
}

DegenerateCircuit::DegenerateCircuit(Subset j, int n)
    : std::invalid_argument("circuit F_" + subset_name(j, n) + " has fewer than two finite coefficients"), j_(j) {}

std::vector<TropPolynomial> circuits(const PlueckerVector& w) {
  const int n = w.n(), d = w.d();
  if (d >= n) throw std::invalid_argument("circuits need d < n");
  std::vector<TropPolynomial> out;
  for (Subset J : k_subsets(n, d + 1)) {
    std::vector<TropTerm> terms;
    for (int j : elements(J)) {
      const ExtReal& c = w.at(J & ~singleton(j));
      if (c.is_infinite()) continue;
      Exponent e(n, 0);
      e[j - 1] = 1;
      terms.push_back({e, c});
    }
    if (terms.size() < 2) throw DegenerateCircuit(J, n);
    out.emplace_back(static_cast<std::size_t>(n), std::move(terms));
  }
  return out;
}

PlueckerVector dual(const PlueckerVector& w) {
  const int n = w.n(), d = w.d();
  PlueckerVector out(n - d, n);
  for (Subset s : k_subsets(n, d)) out.set(full_set(n) & ~s, w.at(s));
  return out;
}

TropicalPlane::TropicalPlane(PlueckerVector w) : w_(std::move(w)) {
  forms_ = circuits(w_);
  sets_ = k_subsets(w_.n(), w_.d() + 1);
}

std::optional<Subset> TropicalPlane::violated_circuit(const std::vector<Rational>& x) const {
  if (x.size() != static_cast<std::size_t>(n())) throw std::invalid_argument("point has the wrong length");
  for (std::size_t i = 0; i < forms_.size(); ++i)
    if (!on_hypersurface(forms_[i], x)) return sets_[i];
  return std::nullopt;
}

bool TropicalPlane::member(const std::vector<Rational>& x) const { return !violated_circuit(x).has_value(); }

namespace {

// Depth-first search over the tight set of each circuit. `visit` sees each
// feasible complete choice and returns false to stop.
struct TightSearch {
  const PlueckerVector& w;
  const std::vector<Subset>& sets;
  int min_classes = 0;  // prune when fewer pinned classes remain among the x nodes
  std::size_t x_nodes = 0;
  std::function<bool(const DifferenceSystem&, const std::vector<Subset>&)> visit;

  std::vector<Subset> chosen;

  std::size_t x_classes(const DifferenceSystem& sys) const {
    std::size_t count = 0;
    std::vector<bool> used(x_nodes, false);
    for (std::size_t i = 0; i < x_nodes; ++i) {
      if (used[i]) continue;
      ++count;
      for (std::size_t j = i + 1; j < x_nodes; ++j)
        if (!used[j] && sys.pinned(i, j)) used[j] = true;
    }
    return count;
  }

  bool run(const DifferenceSystem& sys, std::size_t level) {
    if (level == sets.size()) return visit(sys, chosen);
    Subset J = sets[level];
    std::vector<int> finite;
    std::map<int, Rational> coeff;
    for (int j : elements(J)) {
      const ExtReal& c = w.at(J & ~singleton(j));
      if (c.is_infinite()) continue;
      finite.push_back(j);
      coeff[j] = c.value();
    }
    const std::size_t m = finite.size();
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      DifferenceSystem next = sys;
      std::vector<int> in, out;
      for (std::size_t b = 0; b < m; ++b) ((mask >> b) & 1 ? in : out).push_back(finite[b]);
      int r = in.front();
      bool ok = true;
      // x_j + a_j equal on the tight set, strictly smaller than the rest
      for (std::size_t t = 1; t < in.size() && ok; ++t)
        ok = next.add_equal(r - 1, in[t] - 1, coeff[in[t]] - coeff[r]);
      for (int k : out) {
        if (!ok) break;
        ok = next.add_upper(r - 1, k - 1, coeff[k] - coeff[r], true);
      }
      if (!ok) continue;
      if (min_classes > 0 && static_cast<int>(x_classes(next)) < min_classes) continue;
      chosen.push_back(J & make_subset(in));
      bool keep_going = run(next, level + 1);
      chosen.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<std::vector<Rational>> TropicalPlane::locate(Subset fixed, const Rational& value,
                                                           const Rational& upper) const {
  const std::size_t nn = static_cast<std::size_t>(n());
  DifferenceSystem sys(nn + 1);  // node nn is the origin
  for (int i = 1; i <= n(); ++i) {
    if (subset_contains(fixed, i)) sys.add_equal(i - 1, nn, value);
    else sys.add_upper(i - 1, nn, upper);
  }
  if (!sys.feasible()) return std::nullopt;
  std::optional<std::vector<Rational>> found;
  TightSearch search{w_, sets_, 0, nn, nullptr, {}};
  search.visit = [&](const DifferenceSystem& s, const std::vector<Subset>&) {
    auto x = s.solution(nn);
    x->pop_back();
    found = std::move(*x);
    return false;
  };
  search.run(sys, 0);
  return found;
}

std::vector<PlaneFace> TropicalPlane::maximal_faces() const {
  if (!w_.all_finite()) throw std::invalid_argument("plane types need finite w");
  if (d() < 2 || d() > 3 || n() > 7) throw std::invalid_argument("plane types are supported for d in {2, 3}, n <= 7");
  const std::size_t nn = static_cast<std::size_t>(n());
  std::vector<PlaneFace> out;
  TightSearch search{w_, sets_, d(), nn, nullptr, {}};
  search.visit = [&](const DifferenceSystem& s, const std::vector<Subset>& tight) {
    auto classes = s.pinned_classes();
    if (static_cast<int>(classes.size()) != d()) return true;
    std::vector<Subset> blocks;
    for (const auto& c : classes) {
      Subset b = 0;
      for (std::size_t v : c) b |= singleton(static_cast<int>(v) + 1);
      blocks.push_back(b);
    }
    DPartition p(blocks, n());
    // a face can be cut into several cells by the tight patterns; keep one
    if (std::none_of(out.begin(), out.end(), [&](const PlaneFace& f) { return f.partition == p; }))
      out.push_back(PlaneFace{p, *s.solution(0), tight});
    return true;
  };
  search.run(DifferenceSystem(nn), 0);
  std::sort(out.begin(), out.end(), [](const PlaneFace& a, const PlaneFace& b) { return a.partition < b.partition; });
  return out;
}

std::set<DPartition> plane_type(const TropicalPlane& plane) {
  std::set<DPartition> out;
  for (const auto& f : plane.maximal_faces()) out.insert(f.partition);
  return out;
}

PlueckerVector reconstruct_plucker(const PlaneOracle& oracle, int d, int n, const Rational& bound) {
  if (d < 1 || d >= n || oracle.n() != n) throw std::invalid_argument("reconstruction needs 1 <= d < n matching the oracle");
  if (bound < 0) throw std::invalid_argument("bound must be nonnegative");
  const Rational big = 4 * bound * n + 1;
  const Rational slack = 2 * bound + 1;

  // x^I for every (d-1)-subset I
  const auto faces = k_subsets(n, d - 1);
  std::map<Subset, std::vector<Rational>> points;
  for (Subset I : faces) {
    auto x = oracle.locate(I, big, big - slack);
    if (!x) throw ReconstructionError("no point of the plane near the coordinates " + subset_name(I, n));
    if (!oracle.member(*x)) throw ReconstructionError("oracle located a point it does not contain");
    points[I] = std::move(*x);
  }

  // w_{I+j} = x^I_j + c_I; fix the c_I by a search over shared coordinates
  std::map<Subset, Rational> c;
  std::queue<Subset> todo;
  c[faces.front()] = 0;
  todo.push(faces.front());
  while (!todo.empty()) {
    Subset I = todo.front();
    todo.pop();
    for (int j = 1; j <= n; ++j) {
      if (subset_contains(I, j)) continue;
      Subset S = I | singleton(j);
      Rational value = points[I][j - 1] + c[I];
      for (int k : elements(S)) {
        Subset K = S & ~singleton(k);
        if (c.count(K)) continue;
        c[K] = value - points[K][k - 1];
        todo.push(K);
      }
    }
  }

  PlueckerVector w(d, n);
  for (Subset S : k_subsets(n, d)) {
    std::optional<Rational> value;
    for (int j : elements(S)) {
      Subset I = S & ~singleton(j);
      Rational v = points[I][j - 1] + c[I];
      if (value && *value != v) throw ReconstructionError("oracle differences are inconsistent at " + subset_name(S, n));
      value = v;
    }
    w.set(S, *value);
  }
  return reduce_mod_phi(w);
}

CiStatus ci_status_d2(const SemiLabeledTree& t) {
  t.validate();
  if (!t.is_trivalent()) throw std::invalid_argument("ci_status_d2 needs a trivalent tree");
  if (t.n < 5) throw std::invalid_argument("ci_status_d2 needs n >= 5");
  if (is_caterpillar(t)) return CiUnknown{};
  NotCompleteIntersection cert;
  for (int a = 1; a <= t.n; ++a)
    for (int b = a + 1; b <= t.n; ++b) {
      std::vector<const Split*> path;
      for (const auto& s : t.splits)
        if (s.separates(a, b)) path.push_back(&s);
      bool found = false;
      for (int j = 1; j <= t.n && !found; ++j)
        for (int k = j + 1; k <= t.n && !found; ++k) {
          if (j == a || j == b || k == a || k == b) continue;
          if (std::none_of(path.begin(), path.end(), [&](const Split* s) { return s->separates(j, k); })) {
            cert.certificate.push_back({a, b, j, k});
            found = true;
          }
        }
      if (!found) throw std::logic_error("a leaf path covers every leaf pair in a non-caterpillar");
    }
  return cert;
}

}  // namespace tropgrass::troplin
