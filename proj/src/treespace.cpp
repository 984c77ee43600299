#include "tropgrass/treespace.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tropgrass/exactalg/plucker.hpp"

namespace tropgrass {

Split::Split(Subset a, int n) : n_(n) {
  if (n < 4 || n > kMaxGroundSet) throw std::invalid_argument("splits need 4 <= n");
  a &= full_set(n);
  if (!subset_contains(a, 1)) a = full_set(n) & ~a;
  if (subset_size(a) < 2 || n - subset_size(a) < 2) throw std::invalid_argument("split blocks need at least two leaves");
  side_ = a;
}

std::string Split::name() const {
  Subset a = side_, b = other();
  if (subset_size(b) < subset_size(a)) std::swap(a, b);
  return subset_name(a, n_) + "|" + subset_name(b, n_);
}

Split parse_split(const std::string& text, int n) {
  auto bar = text.find_first_of("|,");
  if (bar == std::string::npos) {
    // a single block
    return Split(parse_subset(text, n), n);
  }
  Subset a = parse_subset(text.substr(0, bar), n);
  Subset b = parse_subset(text.substr(bar + 1), n);
  if ((a & b) != 0 || (a | b) != full_set(n)) throw std::invalid_argument("not a split of [n]: " + text);
  return Split(a, n);
}

bool splits_compatible(const Split& s, const Split& t) {
  Subset a = s.side(), b = s.other(), c = t.side(), d = t.other();
  return (a & c) == 0 || (a & d) == 0 || (b & c) == 0 || (b & d) == 0;
}

std::vector<Split> all_splits(int n) {
  std::vector<Split> out;
  for (int k = 2; 2 * k <= n; ++k)
    for (Subset s : k_subsets(n, k)) {
      if (2 * k == n && !subset_contains(s, 1)) continue;
      out.emplace_back(s, n);
    }
  return out;
}

void SemiLabeledTree::validate() const {
  if (n < 3) throw std::invalid_argument("trees need n >= 3");
  if (lengths.size() != splits.size() || offsets.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("tree data has mismatched sizes");
  for (std::size_t i = 0; i < splits.size(); ++i) {
    if (splits[i].n() != n) throw std::invalid_argument("split on the wrong ground set");
    if (lengths[i] <= 0) throw std::invalid_argument("split lengths must be positive");
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (splits[i] == splits[j]) throw std::invalid_argument("repeated split " + splits[i].name());
      if (!splits_compatible(splits[i], splits[j]))
        throw std::invalid_argument("incompatible splits " + splits[i].name() + " and " + splits[j].name());
    }
  }
}

SemiLabeledTree tree_from_splits(int n, const std::vector<std::string>& names) {
  SemiLabeledTree t;
  t.n = n;
  for (const auto& s : names) t.splits.push_back(parse_split(s, n));
  std::sort(t.splits.begin(), t.splits.end());
  t.lengths.assign(t.splits.size(), Rational(1));
  t.offsets.assign(n, Rational(0));
  t.validate();
  return t;
}

PlueckerVector tree_to_plucker(const SemiLabeledTree& t) {
  t.validate();
  PlueckerVector w(2, t.n);
  for (int i = 1; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j) {
      Rational v = -t.offsets[i - 1] - t.offsets[j - 1];
      for (std::size_t s = 0; s < t.splits.size(); ++s)
        if (t.splits[s].separates(i, j)) v -= t.lengths[s];
      w.set(singleton(i) | singleton(j), v);
    }
  return w;
}

namespace {

// Pairwise values of a d = 2 vector, 1-based, as a dense matrix.
std::vector<std::vector<Rational>> pair_matrix(const PlueckerVector& w) {
  if (w.d() != 2) throw std::invalid_argument("expected a vector with d = 2");
  if (!w.all_finite()) throw std::invalid_argument("expected finite coordinates");
  int n = w.n();
  std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) m[i][j] = m[j][i] = w.at(singleton(i) | singleton(j)).value();
  return m;
}

}  // namespace

FourPointResult four_point_check(const PlueckerVector& w) {
  auto m = pair_matrix(w);
  int n = w.n();
  FourPointResult r;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          Rational s[3] = {m[i][j] + m[k][l], m[i][k] + m[j][l], m[i][l] + m[j][k]};
          std::sort(s, s + 3);
          if (s[0] != s[1]) {
            r.ok = false;
            r.violation = std::array<int, 4>{i, j, k, l};
            return r;
          }
        }
  return r;
}

FourPointViolation::FourPointViolation(std::array<int, 4> q)
    : std::invalid_argument("four-point condition fails on {" + std::to_string(q[0]) + "," + std::to_string(q[1]) +
                            "," + std::to_string(q[2]) + "," + std::to_string(q[3]) + "}"),
      q_(q) {}

SemiLabeledTree additive_linkage(const PlueckerVector& w) {
  auto check = four_point_check(w);
  if (!check.ok) throw FourPointViolation(*check.violation);
  const int n = w.n();
  if (n < 3) throw std::invalid_argument("additive linkage needs n >= 3");
  auto wm = pair_matrix(w);
  // dissimilarity d = -w
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) d[i][j] = -wm[i + 1][j + 1];

  std::vector<Subset> cluster;
  for (int i = 1; i <= n; ++i) cluster.push_back(singleton(i));
  std::vector<Subset> candidates;

  auto is_cherry = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cluster.size(); ++k) {
      if (k == i || k == j) continue;
      for (std::size_t l = k + 1; l < cluster.size(); ++l) {
        if (l == i || l == j) continue;
        Rational here = d[i][j] + d[k][l];
        if (here > d[i][k] + d[j][l] || here > d[i][l] + d[j][k]) return false;
      }
    }
    return true;
  };

  while (cluster.size() > 3) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = 0; i < cluster.size() && !found; ++i)
      for (std::size_t j = i + 1; j < cluster.size() && !found; ++j)
        if (is_cherry(i, j)) bi = i, bj = j, found = true;
    if (!found) throw std::logic_error("additive linkage found no cherry");
    // the new node sits where the paths from i and j meet
    std::vector<Rational> row(cluster.size());
    for (std::size_t k = 0; k < cluster.size(); ++k)
      if (k != bi && k != bj) row[k] = (d[bi][k] + d[bj][k] - d[bi][bj]) / 2;
    Subset merged = cluster[bi] | cluster[bj];
    candidates.push_back(merged);
    for (std::size_t k = 0; k < cluster.size(); ++k) d[bi][k] = d[k][bi] = row[k];
    d[bi][bi] = 0;
    cluster[bi] = merged;
    cluster.erase(cluster.begin() + static_cast<std::ptrdiff_t>(bj));
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(bj));
    for (auto& r : d) r.erase(r.begin() + static_cast<std::ptrdiff_t>(bj));
  }

  // min over a, a' in A and b, b' in B of (d_ab + d_a'b' - d_aa' - d_bb') / 2
  auto split_length = [&](const Split& s) {
    auto a = elements(s.side()), b = elements(s.other());
    std::optional<Rational> len;
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = x + 1; y < a.size(); ++y)
        for (std::size_t u = 0; u < b.size(); ++u)
          for (std::size_t v = u + 1; v < b.size(); ++v) {
            int a1 = a[x], a2 = a[y], b1 = b[u], b2 = b[v];
            Rational q = (-wm[a1][b1] - wm[a2][b2] + wm[a1][a2] + wm[b1][b2]) / 2;
            if (!len || q < *len) len = q;
          }
    return *len;
  };

  SemiLabeledTree t;
  t.n = n;
  std::set<Split> seen;
  for (Subset c : candidates) {
    int sz = subset_size(c);
    if (sz < 2 || n - sz < 2) continue;
    Split s(c, n);
    if (!seen.insert(s).second) continue;
    if (split_length(s) > 0) t.splits.push_back(s);
  }
  std::sort(t.splits.begin(), t.splits.end());
  for (const auto& s : t.splits) {
    t.lengths.push_back(split_length(s));
  }

  // r = -w - sum l E = phi(a), so a_i = (r_ij + r_ik - r_jk) / 2
  auto r = [&](int i, int j) {
    Rational v = -wm[i][j];
    for (std::size_t s = 0; s < t.splits.size(); ++s)
      if (t.splits[s].separates(i, j)) v -= t.lengths[s];
    return v;
  };
  t.offsets.resize(n);
  for (int i = 1; i <= n; ++i) {
    int j = 0, k = 0;
    for (int x = 1; x <= n && k == 0; ++x) {
      if (x == i) continue;
      if (j == 0) j = x;
      else k = x;
    }
    t.offsets[i - 1] = (r(i, j) + r(i, k) - r(j, k)) / 2;
  }
  if (tree_to_plucker(t) != w) throw std::logic_error("additive linkage did not reproduce its input");
  return t;
}

bool same_tree_mod_phi(const SemiLabeledTree& a, const SemiLabeledTree& b) {
  if (a.n != b.n || a.splits != b.splits || a.lengths != b.lengths) return false;
  return reduce_mod_phi(tree_to_plucker(a)) == reduce_mod_phi(tree_to_plucker(b));
}

std::vector<alg::MultiPoly> j_sigma(const SemiLabeledTree& t, alg::Field field) {
  t.validate();
  if (!t.is_trivalent()) throw std::invalid_argument("J_sigma is defined here for trivalent trees");
  const int n = t.n;
  auto ring = alg::plucker_ring(2, n, field);
  auto var = [&](int a, int b) {
    return alg::MultiPoly::variable(ring, alg::plucker_index(singleton(a) | singleton(b), n));
  };
  auto split_apart = [&](int a, int b, int c, int e) {
    for (const auto& s : t.splits)
      if (!s.separates(a, b) && !s.separates(c, e) && s.separates(a, c)) return true;
    return false;
  };
  std::vector<alg::MultiPoly> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          alg::MultiPoly a = var(i, j) * var(k, l), b = var(i, k) * var(j, l), c = var(i, l) * var(j, k);
          if (split_apart(i, j, k, l)) out.push_back(c - b);
          else if (split_apart(i, k, j, l)) out.push_back(a + c);
          else if (split_apart(i, l, j, k)) out.push_back(a - b);
          else throw std::logic_error("trivalent tree leaves a quartet unresolved");
        }
  return out;
}

std::vector<alg::Monomial> kempe_crossing_generators(int n) {
  std::vector<alg::Monomial> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          alg::Monomial m;
          std::size_t a = alg::plucker_index(singleton(i) | singleton(k), n);
          std::size_t b = alg::plucker_index(singleton(j) | singleton(l), n);
          m.set(a, 1);
          m.set(b, 1);
          out.push_back(m);
        }
  return out;
}

alg::TermOrder circular_order(int n) {
  std::vector<Rational> w;
  for (Subset s : k_subsets(n, 2)) {
    auto e = elements(s);
    int x = e[1] - e[0];
    w.emplace_back(-x * (n - x));
  }
  return alg::TermOrder::weight(w);
}

bool is_caterpillar(const SemiLabeledTree& t) {
  if (!t.is_trivalent()) throw std::invalid_argument("caterpillar test needs a trivalent tree");
  if (t.splits.empty()) return true;
  // a leaf in some cherry; the blocks holding it must be nested
  int anchor = 0;
  for (const auto& s : t.splits) {
    for (Subset blk : {s.side(), s.other()})
      if (subset_size(blk) == 2) {
        int e = elements(blk)[0];
        if (anchor == 0 || e < anchor) anchor = e;
      }
  }
  std::vector<Subset> blocks;
  for (const auto& s : t.splits) blocks.push_back(subset_contains(s.side(), anchor) ? s.side() : s.other());
  std::sort(blocks.begin(), blocks.end(), [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
    if ((blocks[i] & ~blocks[i + 1]) != 0) return false;
  return true;
}

std::vector<std::vector<Split>> trivalent_trees(int n) {
  if (n < 3 || n > 12) throw std::invalid_argument("trivalent_trees needs 3 <= n <= 12");
  // leaves are nodes 0..n-1, internal nodes follow
  std::vector<std::vector<Split>> out;
  std::vector<std::pair<int, int>> edges{{0, n}, {1, n}, {2, n}};
  std::function<void(int, int)> grow = [&](int leaf, int next_internal) {
    if (leaf == n) {
      std::vector<std::vector<int>> adj(next_internal);
      for (auto [u, v] : edges) adj[u].push_back(v), adj[v].push_back(u);
      std::vector<Split> splits;
      for (auto [u, v] : edges) {
        if (u < n || v < n) continue;
        Subset side = 0;
        std::vector<std::pair<int, int>> stack{{v, u}};
        while (!stack.empty()) {
          auto [x, from] = stack.back();
          stack.pop_back();
          if (x < n) side |= singleton(x + 1);
          for (int y : adj[x])
            if (y != from) stack.push_back({y, x});
        }
        splits.emplace_back(side, n);
      }
      std::sort(splits.begin(), splits.end());
      out.push_back(std::move(splits));
      return;
    }
    std::size_t count = edges.size();
    for (std::size_t e = 0; e < count; ++e) {
      auto [u, v] = edges[e];
      int m = next_internal;
      edges[e] = {u, m};
      edges.push_back({m, v});
      edges.push_back({m, leaf});
      grow(leaf + 1, next_internal + 1);
      edges.pop_back();
      edges.pop_back();
      edges[e] = {u, v};
    }
  };
  grow(3, n + 1);
  return out;
}

Graph compatibility_graph(int n) {
  auto splits = all_splits(n);
  Graph g(splits.size(), std::vector<bool>(splits.size(), false));
  for (std::size_t i = 0; i < splits.size(); ++i)
    for (std::size_t j = i + 1; j < splits.size(); ++j)
      if (splits_compatible(splits[i], splits[j])) g[i][j] = g[j][i] = true;
  return g;
}

namespace {

void check_tn(int n) {
  if (n < 4 || n > 9) throw std::invalid_argument("T_n is supported for 4 <= n <= 9");
}

}  // namespace

SimplicialComplex tn_complex(int n) {
  check_tn(n);
  auto splits = all_splits(n);
  std::map<Split, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < splits.size(); ++i) {
    index[splits[i]] = static_cast<int>(i);
    labels.push_back(splits[i].name());
  }
  std::vector<Face> faces;
  for (const auto& tree : trivalent_trees(n)) {
    Face f;
    for (const auto& s : tree) f.push_back(index.at(s));
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_maximal(std::move(labels), std::move(faces));
}

TnStats tn_stats(int n) {
  check_tn(n);
  TnStats st;
  st.n = n;
  auto trees = trivalent_trees(n);
  st.facets = static_cast<long long>(trees.size());
  st.pure = std::all_of(trees.begin(), trees.end(), [&](const auto& t) { return static_cast<int>(t.size()) == n - 3; });
  Graph g = compatibility_graph(n);
  st.vertices = static_cast<long long>(g.size());
  st.f_vector = clique_f_vector(g);
  std::vector<std::string> labels(g.size());
  st.maximal_cliques = static_cast<long long>(SimplicialComplex::flag(labels, g).maximal_faces().size());
  st.reduced_euler = -1;
  for (std::size_t i = 0; i < st.f_vector.size(); ++i) st.reduced_euler += (i % 2 == 0 ? 1 : -1) * st.f_vector[i];
  return st;
}

SemiLabeledTree random_trivalent_tree(int n, std::mt19937_64& rng, int max_len, int den_max) {
  if (n < 3) throw std::invalid_argument("random trees need n >= 3");
  std::vector<std::pair<int, int>> edges{{0, n}, {1, n}, {2, n}};
  int next = n + 1;
  for (int leaf = 3; leaf < n; ++leaf) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::size_t e = pick(rng);
    auto [u, v] = edges[e];
    edges[e] = {u, next};
    edges.push_back({next, v});
    edges.push_back({next, leaf});
    ++next;
  }
  std::vector<std::vector<int>> adj(next);
  for (auto [u, v] : edges) adj[u].push_back(v), adj[v].push_back(u);
  SemiLabeledTree t;
  t.n = n;
  for (auto [u, v] : edges) {
    if (u < n || v < n) continue;
    Subset side = 0;
    std::vector<std::pair<int, int>> stack{{v, u}};
    while (!stack.empty()) {
      auto [x, from] = stack.back();
      stack.pop_back();
      if (x < n) side |= singleton(x + 1);
      for (int y : adj[x])
        if (y != from) stack.push_back({y, x});
    }
    t.splits.emplace_back(side, n);
  }
  std::sort(t.splits.begin(), t.splits.end());
  std::uniform_int_distribution<int> den(1, den_max);
  for (std::size_t i = 0; i < t.splits.size(); ++i) {
    int q = den(rng);
    std::uniform_int_distribution<int> num(1, max_len * q);
    Rational l(num(rng), q);
    l.canonicalize();
    t.lengths.push_back(l);
  }
  std::uniform_int_distribution<int> off(-max_len, max_len);
  for (int i = 0; i < n; ++i) t.offsets.emplace_back(off(rng));
  return t;
}

std::string to_newick(const SemiLabeledTree& t) {
  t.validate();
  const int n = t.n;
  // clusters away from leaf n
  std::vector<std::pair<Subset, Rational>> clusters;
  for (std::size_t i = 0; i < t.splits.size(); ++i) {
    Subset c = subset_contains(t.splits[i].side(), n) ? t.splits[i].other() : t.splits[i].side();
    clusters.push_back({c, t.lengths[i]});
  }
  std::function<std::string(Subset)> render = [&](Subset c) {
    // children: maximal clusters strictly inside c, then uncovered leaves
    std::vector<std::string> parts;
    Subset covered = 0;
    for (const auto& [d, len] : clusters) {
      if (d == c || (d & ~c) != 0) continue;
      bool maximal = true;
      for (const auto& [e, l2] : clusters)
        if (e != d && e != c && (e & ~c) == 0 && (d & ~e) == 0) maximal = false;
      if (!maximal) continue;
      covered |= d;
      parts.push_back(render(d) + ":" + to_string(len));
    }
    for (int i : elements(c & ~covered)) parts.push_back(std::to_string(i) + ":" + to_string(t.offsets[i - 1]));
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
    return s + ")";
  };
  std::string inner = render(full_set(n) & ~singleton(n));
  inner.pop_back();
  return inner + "," + std::to_string(n) + ":" + to_string(t.offsets[n - 1]) + ");";
}

std::string tree_to_json(const SemiLabeledTree& t) {
  nlohmann::json j;
  j["n"] = t.n;
  j["splits"] = nlohmann::json::array();
  for (std::size_t i = 0; i < t.splits.size(); ++i)
    j["splits"].push_back({{"split", t.splits[i].name()}, {"length", to_string(t.lengths[i])}});
  j["offsets"] = nlohmann::json::array();
  for (const auto& a : t.offsets) j["offsets"].push_back(to_string(a));
  j["trivalent"] = t.is_trivalent();
  j["newick"] = to_newick(t);
  return j.dump(2);
}

PlueckerVector parse_distance_csv(const std::string& text) {
  TropMatrix m = parse_trop_matrix_csv(text);
  if (m.rows() != m.cols() || m.rows() < 3) throw std::invalid_argument("distance matrix must be square, n >= 3");
  int n = static_cast<int>(m.rows());
  PlueckerVector w(2, n);
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != ExtReal(0L)) throw std::invalid_argument("distance matrix needs a zero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
      if (m(i, j).is_infinite()) throw std::invalid_argument("distances must be finite");
      w.set(singleton(i + 1) | singleton(j + 1), ExtReal(-m(i, j).value()));
    }
  }
  return w;
}

}  // namespace tropgrass
