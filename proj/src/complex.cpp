#include "tropgrass/complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace tropgrass {

namespace {

bool is_subset(const Face& a, const Face& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::vector<Face> maximal_only(std::vector<Face> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> out;
  for (auto& f : faces) {
    bool covered = std::any_of(out.begin(), out.end(), [&](const Face& m) { return is_subset(f, m); });
    if (!covered) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Face> faces)
    : labels_(std::move(labels)) {
  for (const auto& f : faces)
    for (int v : f)
      if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) throw std::out_of_range("face references an unknown vertex");
  maximal_ = maximal_only(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<std::string> labels, std::vector<Face> faces) {
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (auto& f : faces) std::sort(f.begin(), f.end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  k.maximal_ = std::move(faces);
  return k;
}

SimplicialComplex SimplicialComplex::flag(std::vector<std::string> labels, const Graph& graph) {
  const int n = static_cast<int>(graph.size());
  std::vector<Face> cliques;
  // Bron-Kerbosch with pivoting.
  std::function<void(Face&, std::vector<int>, std::vector<int>)> bk = [&](Face& r, std::vector<int> p,
                                                                            std::vector<int> x) {
    if (p.empty() && x.empty()) {
      cliques.push_back(r);
      return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x})
      for (int u : *set) {
        std::size_t c = 0;
        for (int v : p) c += graph[u][v];
        if (pivot < 0 || c > best) {
          pivot = u;
          best = c;
        }
      }
    std::vector<int> candidates;
    for (int v : p)
      if (!graph[pivot][v]) candidates.push_back(v);
    for (int v : candidates) {
      std::vector<int> np, nx;
      for (int u : p)
        if (graph[v][u]) np.push_back(u);
      for (int u : x)
        if (graph[v][u]) nx.push_back(u);
      r.push_back(v);
      bk(r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  Face r;
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  bk(r, all, {});
  SimplicialComplex k;
  k.labels_ = std::move(labels);
  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end());
  if (n == 0) cliques.clear();
  k.maximal_ = std::move(cliques);
  return k;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : maximal_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(maximal_.begin(), maximal_.end(),
                     [&](const Face& f) { return static_cast<int>(f.size()) - 1 == dimension(); });
}

bool SimplicialComplex::contains(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  return std::any_of(maximal_.begin(), maximal_.end(), [&](const Face& m) { return is_subset(f, m); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_dimension() const {
  const int dim = dimension();
  std::vector<std::set<Face>> sets(static_cast<std::size_t>(std::max(dim + 1, 0)));
  for (const auto& m : maximal_) {
    const std::size_t k = m.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Face f;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) f.push_back(m[i]);
      sets[f.size() - 1].insert(std::move(f));
    }
  }
  std::vector<std::vector<Face>> out;
  for (auto& s : sets) out.emplace_back(s.begin(), s.end());
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f;
  for (const auto& level : faces_by_dimension()) f.push_back(static_cast<long long>(level.size()));
  return f;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  long long chi = -1;
  auto f = f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

SimplicialComplex SimplicialComplex::link(const Face& face) const {
  Face f = face;
  std::sort(f.begin(), f.end());
  if (!contains(f)) throw std::invalid_argument("link of a face that is not in the complex");
  std::vector<Face> parts;
  for (const auto& m : maximal_) {
    if (!is_subset(f, m)) continue;
    Face rest;
    std::set_difference(m.begin(), m.end(), f.begin(), f.end(), std::back_inserter(rest));
    parts.push_back(std::move(rest));
  }
  return SimplicialComplex(labels_, std::move(parts));
}

SimplicialComplex SimplicialComplex::remove_faces_containing(const std::vector<Face>& faces) const {
  std::vector<Face> bad = faces;
  for (auto& b : bad) std::sort(b.begin(), b.end());
  std::vector<Face> out;
  std::function<void(const Face&)> split = [&](const Face& m) {
    for (const auto& b : bad) {
      if (!is_subset(b, m)) continue;
      for (int v : b) {
        Face smaller;
        for (int u : m)
          if (u != v) smaller.push_back(u);
        split(smaller);
      }
      return;
    }
    out.push_back(m);
  };
  for (const auto& m : maximal_) split(m);
  return SimplicialComplex(labels_, std::move(out));
}

Face SimplicialComplex::face_of(const std::vector<std::string>& labels) const {
  Face f;
  for (const auto& l : labels) {
    auto it = std::find(labels_.begin(), labels_.end(), l);
    if (it == labels_.end()) throw std::invalid_argument("unknown vertex label " + l);
    f.push_back(static_cast<int>(it - labels_.begin()));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<std::string> SimplicialComplex::labels_of(const Face& face) const {
  std::vector<std::string> out;
  for (int v : face) out.push_back(labels_.at(static_cast<std::size_t>(v)));
  return out;
}

std::string SimplicialComplex::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  j["maximal_faces"] = nlohmann::json::array();
  for (const auto& m : maximal_) j["maximal_faces"].push_back(labels_of(m));
  return j.dump();
}

SimplicialComplex SimplicialComplex::from_json(std::string_view text) {
  auto j = nlohmann::json::parse(text);
  SimplicialComplex tmp;
  tmp.labels_ = j.at("vertices").get<std::vector<std::string>>();
  std::vector<Face> faces;
  for (const auto& f : j.at("maximal_faces")) faces.push_back(tmp.face_of(f.get<std::vector<std::string>>()));
  return SimplicialComplex(tmp.labels_, std::move(faces));
}

std::vector<long long> clique_f_vector(const Graph& graph) {
  const std::size_t n = graph.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> nbr(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (graph[i][j]) nbr[i][j / 64] |= std::uint64_t{1} << (j % 64);  // only later neighbours
  std::vector<long long> f;
  std::function<void(std::size_t, const std::vector<std::uint64_t>&)> rec = [&](std::size_t depth,
                                                                                 const std::vector<std::uint64_t>& cand) {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = cand[w];
      while (bits) {
        std::size_t v = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (f.size() <= depth) f.push_back(0);
        ++f[depth];
        std::vector<std::uint64_t> next(words);
        bool any = false;
        for (std::size_t k = 0; k < words; ++k) {
          next[k] = cand[k] & nbr[v][k];
          any = any || next[k];
        }
        if (any) rec(depth + 1, next);
      }
    }
  };
  std::vector<std::uint64_t> all(words, 0);
  for (std::size_t i = 0; i < n; ++i) all[i / 64] |= std::uint64_t{1} << (i % 64);
  rec(0, all);
  return f;
}

Graph one_skeleton(const SimplicialComplex& k) {
  Graph g(k.vertex_count(), std::vector<bool>(k.vertex_count(), false));
  for (const auto& m : k.maximal_faces())
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j) g[m[i]][m[j]] = g[m[j]][m[i]] = true;
  return g;
}

bool Homology::torsion_free() const {
  return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

namespace {

void dense_smith(std::vector<std::vector<Integer>> a, SmithSummary& out) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // pivot: smallest nonzero absolute value in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& row : a) std::swap(row[t], row[j]);
          clean = false;
        }
      }
      if (clean) {
        // divisibility condition for the remaining block
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
              clean = false;
              break;
            }
      }
    }
    ++out.rank;
    Integer d = abs(a[t][t]);
    if (d != 1) out.invariant_factors.push_back(d);
    ++t;
  }
}

}  // namespace

SmithSummary smith_summary(std::size_t cols, std::vector<std::vector<std::pair<int, Integer>>> rows_in) {
  SmithSummary out;
  std::vector<std::map<int, Integer>> rows(rows_in.size());
  std::vector<std::set<int>> col_rows(cols);
  for (std::size_t r = 0; r < rows_in.size(); ++r)
    for (auto& [c, v] : rows_in[r])
      if (v != 0) {
        rows[r][c] += v;
        col_rows[static_cast<std::size_t>(c)].insert(static_cast<int>(r));
      }
  std::vector<bool> alive(rows.size(), true);
  // Unit pivots first, preferring short rows and short columns.
  while (true) {
    int best_r = -1, best_c = -1;
    std::size_t best_cost = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r] || rows[r].empty()) continue;
      for (const auto& [c, v] : rows[r]) {
        if (v != 1 && v != -1) continue;
        std::size_t cost = (rows[r].size() - 1) * (col_rows[static_cast<std::size_t>(c)].size() - 1);
        if (best_r < 0 || cost < best_cost) {
          best_r = static_cast<int>(r);
          best_c = c;
          best_cost = cost;
        }
        if (cost == 0) break;
      }
      if (best_r >= 0 && best_cost == 0) break;
    }
    if (best_r < 0) break;
    const auto pivot_row = rows[static_cast<std::size_t>(best_r)];
    const Integer pv = pivot_row.at(best_c);
    std::vector<int> targets(col_rows[static_cast<std::size_t>(best_c)].begin(), col_rows[static_cast<std::size_t>(best_c)].end());
    for (int r2 : targets) {
      if (r2 == best_r) continue;
      auto& row = rows[static_cast<std::size_t>(r2)];
      Integer factor = row.at(best_c) * pv;  // pv is its own inverse
      for (const auto& [c, v] : pivot_row) {
        Integer nv = row[c] - factor * v;
        if (nv == 0) {
          row.erase(c);
          col_rows[static_cast<std::size_t>(c)].erase(r2);
        } else {
          row[c] = nv;
          col_rows[static_cast<std::size_t>(c)].insert(r2);
        }
      }
    }
    for (const auto& [c, v] : pivot_row) col_rows[static_cast<std::size_t>(c)].erase(best_r);
    rows[static_cast<std::size_t>(best_r)].clear();
    alive[static_cast<std::size_t>(best_r)] = false;
    ++out.rank;
  }
  // Dense remainder.
  std::vector<int> used_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!col_rows[c].empty()) used_cols.push_back(static_cast<int>(c));
  std::vector<std::vector<Integer>> dense;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!alive[r] || rows[r].empty()) continue;
    std::vector<Integer> row(used_cols.size(), 0);
    for (const auto& [c, v] : rows[r])
      row[static_cast<std::size_t>(std::lower_bound(used_cols.begin(), used_cols.end(), c) - used_cols.begin())] = v;
    dense.push_back(std::move(row));
  }
  dense_smith(std::move(dense), out);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

Homology homology(const SimplicialComplex& k) {
  auto faces = k.faces_by_dimension();
  const std::size_t top = faces.size();
  Homology h;
  if (top == 0) return h;
  // ranks[i] = rank of boundary C_i -> C_{i-1}
  std::vector<SmithSummary> bd(top + 1);
  for (std::size_t i = 1; i < top; ++i) {
    std::map<Face, int> index;
    for (std::size_t j = 0; j < faces[i - 1].size(); ++j) index[faces[i - 1][j]] = static_cast<int>(j);
    std::vector<std::vector<std::pair<int, Integer>>> rows;
    for (const auto& f : faces[i]) {
      std::vector<std::pair<int, Integer>> row;
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face g;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != drop) g.push_back(f[t]);
        row.emplace_back(index.at(g), Integer(drop % 2 == 0 ? 1 : -1));
      }
      rows.push_back(std::move(row));
    }
    bd[i] = smith_summary(faces[i - 1].size(), std::move(rows));
  }
  for (std::size_t i = 0; i < top; ++i) {
    long long b = static_cast<long long>(faces[i].size()) - static_cast<long long>(bd[i].rank) -
                  static_cast<long long>(bd[i + 1].rank);
    h.betti.push_back(b);
    h.torsion.push_back(bd[i + 1].invariant_factors);
  }
  return h;
}

}  // namespace tropgrass
