#include "tropgrass/g36.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tropgrass::g36 {

namespace {

constexpr int kN = 6;

// Rotate so the pair containing 1 leads.
std::array<Subset, 3> normalize_pairs(std::array<Subset, 3> p) {
  while (!subset_contains(p[0], 1)) std::rotate(p.begin(), p.begin() + 1, p.end());
  return p;
}

// |T ∩ P_i| read cyclically is one of (2,1,0), (0,2,1), (1,0,2).
bool eg_rule(Subset t, const std::array<Subset, 3>& p) {
  int s[3];
  for (int i = 0; i < 3; ++i) s[i] = subset_size(t & p[i]);
  for (int r = 0; r < 3; ++r)
    if (s[r] == 2 && s[(r + 1) % 3] == 1 && s[(r + 2) % 3] == 0) return true;
  return false;
}

std::vector<std::array<Subset, 3>> tripartitions() {
  std::vector<std::array<Subset, 3>> out;
  for (int b = 2; b <= 6; ++b) {
    Subset p1 = singleton(1) | singleton(b);
    auto rest = elements(full_set(kN) & ~p1);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      Subset p2 = singleton(rest[0]) | singleton(rest[j]);
      Subset p3 = full_set(kN) & ~p1 & ~p2;
      out.push_back({p1, p2, p3});
    }
  }
  return out;
}

}  // namespace

Vertex Vertex::e(Subset s) {
  if (subset_size(s) != 3 || (s & ~full_set(kN))) throw std::invalid_argument("e needs a 3-subset of [6]");
  Vertex v;
  v.kind = Kind::E;
  v.set = s;
  return v;
}

Vertex Vertex::f(Subset s) {
  if (subset_size(s) != 4 || (s & ~full_set(kN))) throw std::invalid_argument("f needs a 4-subset of [6]");
  Vertex v;
  v.kind = Kind::F;
  v.set = s;
  return v;
}

Vertex Vertex::g(Subset p1, Subset p2, Subset p3) {
  if (subset_size(p1) != 2 || subset_size(p2) != 2 || subset_size(p3) != 2 || (p1 | p2 | p3) != full_set(kN))
    throw std::invalid_argument("g needs three disjoint pairs covering [6]");
  Vertex v;
  v.kind = Kind::G;
  v.pairs = normalize_pairs({p1, p2, p3});
  v.set = full_set(kN);
  return v;
}

std::string Vertex::label() const {
  switch (kind) {
    case Kind::E: return "e_" + subset_name(set, kN);
    case Kind::F: return "f_" + subset_name(set, kN);
    case Kind::G:
      return "g_" + subset_name(pairs[0], kN) + subset_name(pairs[1], kN) + subset_name(pairs[2], kN);
  }
  return {};
}

Vertex parse_vertex(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty vertex label");
  std::string digits = text.substr(1);
  if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
  std::vector<int> idx;
  for (char c : digits) {
    if (c < '1' || c > '6') throw std::invalid_argument("bad vertex label: " + text);
    idx.push_back(c - '0');
  }
  switch (text[0]) {
    case 'e':
      if (idx.size() != 3) break;
      return Vertex::e(make_subset(idx));
    case 'f':
      if (idx.size() != 4) break;
      return Vertex::f(make_subset(idx));
    case 'g':
      if (idx.size() != 6) break;
      return Vertex::g(make_subset({idx[0], idx[1]}), make_subset({idx[2], idx[3]}), make_subset({idx[4], idx[5]}));
    default: break;
  }
  throw std::invalid_argument("bad vertex label: " + text);
}

const std::vector<Vertex>& vertices() {
  static const std::vector<Vertex> all = [] {
    std::vector<Vertex> v;
    for (Subset s : k_subsets(kN, 3)) v.push_back(Vertex::e(s));
    for (Subset s : k_subsets(kN, 4)) v.push_back(Vertex::f(s));
    std::vector<Vertex> gs;
    for (const auto& p : tripartitions()) {
      gs.push_back(Vertex::g(p[0], p[1], p[2]));
      gs.push_back(Vertex::g(p[0], p[2], p[1]));
    }
    std::sort(gs.begin(), gs.end(), [](const Vertex& a, const Vertex& b) { return a.label() < b.label(); });
    v.insert(v.end(), gs.begin(), gs.end());
    return v;
  }();
  return all;
}

int vertex_index(const Vertex& v) {
  const auto& all = vertices();
  auto it = std::find(all.begin(), all.end(), v);
  if (it == all.end()) throw std::invalid_argument("not a G(3,6) vertex");
  return static_cast<int>(it - all.begin());
}

PlueckerVector raw_vector(const Vertex& v) {
  PlueckerVector w(3, kN);
  auto bump = [&](Subset s) { w.set(s, w.at(s) + ExtReal(1L)); };
  auto add_f = [&](Subset four) {
    for (int i : elements(four)) bump(four & ~singleton(i));
  };
  switch (v.kind) {
    case Kind::E: bump(v.set); break;
    case Kind::F: add_f(v.set); break;
    case Kind::G:
      // f on the first two pairs, plus e on the second pair with each point of the third
      add_f(v.pairs[0] | v.pairs[1]);
      for (int p : elements(v.pairs[2])) bump(v.pairs[1] | singleton(p));
      break;
  }
  return w;
}

PlueckerVector ambient_vector(const Vertex& v) { return reduce_mod_phi(raw_vector(v)); }

std::string edge_class(const Vertex& u, const Vertex& v) {
  if (u == v) return "";
  const Vertex* a = &u;
  const Vertex* b = &v;
  if (a->kind > b->kind) std::swap(a, b);
  int meet = subset_size(a->set & b->set);
  switch (a->kind) {
    case Kind::E:
      if (b->kind == Kind::E) return meet <= 1 ? "EE" : "";
      if (b->kind == Kind::F) return (meet == 3 || meet == 1) ? "EF" : "";
      return eg_rule(a->set, b->pairs) ? "EG" : "";
    case Kind::F:
      if (b->kind == Kind::F) return meet == 2 ? "FF" : "";
      for (int i = 0; i < 3; ++i)
        if ((b->pairs[i] | b->pairs[(i + 1) % 3]) == a->set) return "FG";
      return "";
    case Kind::G: {
      std::set<Subset> pa(a->pairs.begin(), a->pairs.end()), pb(b->pairs.begin(), b->pairs.end());
      return pa == pb ? "GG" : "";
    }
  }
  return "";
}

bool is_edge(const Vertex& u, const Vertex& v) { return !edge_class(u, v).empty(); }

Graph graph() {
  const auto& vs = vertices();
  Graph g(vs.size(), std::vector<bool>(vs.size(), false));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (is_edge(vs[i], vs[j])) g[i][j] = g[j][i] = true;
  return g;
}

namespace {

std::vector<std::string> all_labels() {
  std::vector<std::string> out;
  for (const auto& v : vertices()) out.push_back(v.label());
  return out;
}

}  // namespace

SimplicialComplex build_delta() { return SimplicialComplex::flag(all_labels(), graph()); }

std::vector<Face> fff_triangles() {
  std::vector<Face> out;
  for (const auto& p : tripartitions()) {
    Face f{vertex_index(Vertex::f(p[0] | p[1])), vertex_index(Vertex::f(p[0] | p[2])),
           vertex_index(Vertex::f(p[1] | p[2]))};
    std::sort(f.begin(), f.end());
    out.push_back(f);
  }
  return out;
}

SimplicialComplex build_g36() { return build_delta().remove_faces_containing(fff_triangles()); }

std::vector<std::pair<Vertex, Vertex>> tripartition_g_pairs() {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& p : tripartitions()) out.emplace_back(Vertex::g(p[0], p[1], p[2]), Vertex::g(p[0], p[2], p[1]));
  return out;
}

std::string facet_class(const std::vector<Vertex>& face) {
  if (face.size() != 4) return "";
  std::vector<Vertex> es, fs, gs;
  for (const auto& v : face) (v.kind == Kind::E ? es : v.kind == Kind::F ? fs : gs).push_back(v);
  std::string key = std::string(es.size(), 'E') + std::string(fs.size(), 'F') + std::string(gs.size(), 'G');
  if (key == "EEFF") return (es[0].set & es[1].set) == 0 ? "EEFF1" : "EEFF2";
  static const std::set<std::string> plain{"EEEE", "EFFG", "EEEG", "EEFG", "FFGG"};
  return plain.count(key) ? key : "";
}

std::map<std::string, int> facet_census(const SimplicialComplex& k) {
  std::map<std::string, int> out;
  for (const auto& f : k.maximal_faces()) {
    std::string c = facet_class(vertices_of(f));
    ++out[c.empty() ? "other" : c];
  }
  return out;
}

Vertex permute(const Vertex& v, const std::array<int, 6>& perm) {
  auto image = [&](Subset s) {
    Subset out = 0;
    for (int i : elements(s)) out |= singleton(perm[i - 1]);
    return out;
  };
  switch (v.kind) {
    case Kind::E: return Vertex::e(image(v.set));
    case Kind::F: return Vertex::f(image(v.set));
    case Kind::G: return Vertex::g(image(v.pairs[0]), image(v.pairs[1]), image(v.pairs[2]));
  }
  return v;
}

std::vector<Face> orbit_of(const Face& face) {
  auto vs = vertices_of(face);
  std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
  std::set<Face> seen;
  do {
    std::vector<Vertex> img;
    for (const auto& v : vs) img.push_back(permute(v, perm));
    seen.insert(face_of(img));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {seen.begin(), seen.end()};
}

const std::vector<std::string>& facet_class_names() {
  static const std::vector<std::string> names{"EEEE", "EEFF1", "EEFF2", "EFFG", "EEEG", "EEFG", "FFGG"};
  return names;
}

std::vector<Vertex> representative_facet(const std::string& cls) {
  static const std::map<std::string, std::vector<std::string>> reps{
      {"EEEE", {"e_123", "e_145", "e_246", "e_356"}},
      {"EEFF1", {"e_123", "e_456", "f_1234", "f_3456"}},
      {"EEFF2", {"e_125", "e_345", "f_3456", "f_1256"}},
      {"EFFG", {"e_345", "f_1256", "f_3456", "g_123456"}},
      {"EEEG", {"e_126", "e_134", "e_356", "g_125634"}},
      {"EEFG", {"e_234", "e_125", "f_1256", "g_125634"}},
      {"FFGG", {"f_1256", "f_3456", "g_123456", "g_125634"}},
  };
  auto it = reps.find(cls);
  if (it == reps.end()) throw std::invalid_argument("unknown facet class: " + cls);
  std::vector<Vertex> out;
  for (const auto& s : it->second) out.push_back(parse_vertex(s));
  return out;
}

PlueckerVector facet_cone_sample(const std::string& cls) {
  PlueckerVector w(3, kN);
  for (const auto& v : representative_facet(cls)) w = w + raw_vector(v);
  return w;
}

std::vector<Vertex> vertices_of(const Face& f) {
  std::vector<Vertex> out;
  for (int i : f) out.push_back(vertices().at(static_cast<std::size_t>(i)));
  return out;
}

Face face_of(const std::vector<Vertex>& vs) {
  Face f;
  for (const auto& v : vs) f.push_back(vertex_index(v));
  std::sort(f.begin(), f.end());
  return f;
}

}  // namespace tropgrass::g36
