#include "tropgrass/minplus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tropgrass {

using nlohmann::json;

TropPolynomial::TropPolynomial(std::size_t variables, std::vector<TropTerm> terms)
    : n_(variables), terms_(std::move(terms)) {
  std::set<Exponent> seen;
  bool finite = false;
  for (const auto& t : terms_) {
    if (t.exp.size() != n_) throw std::invalid_argument("exponent length does not match the variable count");
    if (!seen.insert(t.exp).second) throw std::invalid_argument("repeated exponent in tropical polynomial");
    finite = finite || t.coeff.is_finite();
  }
  if (!finite) throw std::invalid_argument("tropical polynomial needs a finite coefficient");
}

TropPolynomial TropPolynomial::linear(const std::vector<ExtReal>& coeffs) {
  std::vector<TropTerm> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    terms.push_back({e, coeffs[i]});
  }
  return TropPolynomial(coeffs.size(), std::move(terms));
}

namespace {

ExtReal term_value(const TropTerm& t, const std::vector<Rational>& x) {
  if (t.coeff.is_infinite()) return ExtReal::infinity();
  Rational v = t.coeff.value();
  for (std::size_t i = 0; i < x.size(); ++i)
    if (t.exp[i]) v += x[i] * t.exp[i];
  return v;
}

void check_dim(const TropPolynomial& f, const std::vector<Rational>& x) {
  if (x.size() != f.variables()) throw std::invalid_argument("point dimension does not match the polynomial");
}

}  // namespace

ExtReal evaluate(const TropPolynomial& f, const std::vector<Rational>& x) {
  check_dim(f, x);
  ExtReal best = ExtReal::infinity();
  for (const auto& t : f.terms()) best = trop_min(best, term_value(t, x));
  return best;
}

std::vector<Exponent> tight_terms(const TropPolynomial& f, const std::vector<Rational>& x) {
  ExtReal best = evaluate(f, x);
  std::vector<Exponent> out;
  if (best.is_infinite()) return out;
  for (const auto& t : f.terms())
    if (term_value(t, x) == best) out.push_back(t.exp);
  return out;
}

bool on_hypersurface(const TropPolynomial& f, const std::vector<Rational>& x) {
  return tight_terms(f, x).size() >= 2;
}

TropMatrix::TropMatrix(std::size_t rows, std::size_t cols, ExtReal fill) : r_(rows), c_(cols), a_(rows * cols, fill) {}

TropMatrix::TropMatrix(const std::vector<std::vector<ExtReal>>& rows) {
  r_ = rows.size();
  c_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != c_) throw std::invalid_argument("ragged tropical matrix");
    a_.insert(a_.end(), row.begin(), row.end());
  }
}

TropMatrix TropMatrix::columns(const std::vector<int>& cols) const {
  TropMatrix out(r_, cols.size());
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || static_cast<std::size_t>(cols[j]) >= c_) throw std::out_of_range("column index out of range");
      out(i, j) = (*this)(i, static_cast<std::size_t>(cols[j]));
    }
  return out;
}

TropDeterminant tropical_determinant_full(const TropMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("tropical determinant needs a square matrix");
  if (m.rows() > 8) throw std::invalid_argument("tropical determinant is limited to 8x8");
  TropDeterminant out;
  out.value = ExtReal::infinity();
  std::vector<int> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ExtReal s(0L);
    for (std::size_t r = 0; r < perm.size(); ++r) s = s + m(r, static_cast<std::size_t>(perm[r]));
    if (s < out.value) {
      out.value = s;
      out.optimal.clear();
    }
    if (s == out.value && s.is_finite()) out.optimal.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ExtReal tropical_determinant(const TropMatrix& m) { return tropical_determinant_full(m).value; }

PlueckerVector::PlueckerVector(int d, int n, ExtReal fill) : d_(d), n_(n) {
  if (d < 0 || n < d || n > kMaxGroundSet) throw std::invalid_argument("bad Pluecker vector shape");
  coords_.assign(static_cast<std::size_t>(binomial(n, d)), fill);
}

PlueckerVector::PlueckerVector(int d, int n, std::vector<ExtReal> coords) : d_(d), n_(n), coords_(std::move(coords)) {
  if (d < 0 || n < d || n > kMaxGroundSet) throw std::invalid_argument("bad Pluecker vector shape");
  if (coords_.size() != static_cast<std::size_t>(binomial(n, d)))
    throw std::invalid_argument("Pluecker vector has the wrong number of coordinates");
}

const ExtReal& PlueckerVector::at(Subset s) const {
  if (subset_size(s) != d_) throw std::invalid_argument("subset has the wrong size");
  return coords_[subset_rank(s, n_)];
}

void PlueckerVector::set(Subset s, const ExtReal& v) {
  if (subset_size(s) != d_) throw std::invalid_argument("subset has the wrong size");
  coords_[subset_rank(s, n_)] = v;
}

bool PlueckerVector::all_finite() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const ExtReal& x) { return x.is_finite(); });
}

std::vector<Rational> PlueckerVector::finite_values() const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.value());
  return out;
}

PlueckerVector PlueckerVector::unit(int d, int n, Subset s) {
  PlueckerVector w(d, n);
  w.set(s, ExtReal(1L));
  return w;
}

PlueckerVector PlueckerVector::phi(int d, const std::vector<Rational>& a) {
  int n = static_cast<int>(a.size());
  PlueckerVector w(d, n);
  auto subs = k_subsets(n, d);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    Rational s = 0;
    for (int i : elements(subs[k])) s += a[static_cast<std::size_t>(i - 1)];
    w.coords_[k] = s;
  }
  return w;
}

PlueckerVector PlueckerVector::operator+(const PlueckerVector& o) const {
  if (d_ != o.d_ || n_ != o.n_) throw std::invalid_argument("Pluecker vectors of different shape");
  PlueckerVector r = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = coords_[i] + o.coords_[i];
  return r;
}

PlueckerVector PlueckerVector::operator-(const PlueckerVector& o) const {
  if (!o.all_finite()) throw std::invalid_argument("cannot subtract an infinite coordinate");
  return *this + o.scaled(-1);
}

PlueckerVector PlueckerVector::scaled(const Rational& c) const {
  PlueckerVector r = *this;
  for (auto& x : r.coords_)
    if (x.is_finite()) x = ExtReal(x.value() * c);
  return r;
}

PlueckerVector pluecker_from_names(int d, int n, const std::vector<std::string>& names) {
  PlueckerVector w(d, n);
  for (const auto& s : names) {
    Subset sub = parse_subset(s, n);
    w.set(sub, w.at(sub) + ExtReal(1L));
  }
  return w;
}

PlueckerVector reduce_mod_phi(const PlueckerVector& w) {
  const int n = w.n(), d = w.d();
  const auto subs = k_subsets(n, d);
  // Greedy independent rows of phi among finite coordinates, reduced to
  // echelon form alongside their right-hand sides.
  struct Row {
    std::vector<Rational> a;
    Rational rhs;
    std::size_t pivot;
  };
  std::vector<Row> basis;
  for (std::size_t k = 0; k < subs.size() && basis.size() < static_cast<std::size_t>(n); ++k) {
    if (w[k].is_infinite()) continue;
    Row r{std::vector<Rational>(static_cast<std::size_t>(n), 0), w[k].value(), 0};
    for (int i : elements(subs[k])) r.a[static_cast<std::size_t>(i - 1)] = 1;
    for (const auto& b : basis) {
      if (r.a[b.pivot] == 0) continue;
      Rational f = r.a[b.pivot];
      for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * b.a[j];
      r.rhs -= f * b.rhs;
    }
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& q) { return q != 0; });
    if (it == r.a.end()) continue;
    r.pivot = static_cast<std::size_t>(it - r.a.begin());
    Rational inv = 1 / r.a[r.pivot];
    for (auto& q : r.a) q *= inv;
    r.rhs *= inv;
    for (auto& b : basis) {
      if (b.a[r.pivot] == 0) continue;
      Rational f = b.a[r.pivot];
      for (std::size_t j = 0; j < b.a.size(); ++j) b.a[j] -= f * r.a[j];
      b.rhs -= f * r.rhs;
    }
    basis.push_back(std::move(r));
  }
  std::vector<Rational> a(static_cast<std::size_t>(n), 0);
  for (const auto& b : basis) a[b.pivot] = b.rhs;  // free variables set to 0
  PlueckerVector out = w;
  PlueckerVector p = PlueckerVector::phi(d, a);
  for (std::size_t k = 0; k < out.size(); ++k)
    if (out[k].is_finite()) out[k] = ExtReal(out[k].value() - p[k].value());
  return out;
}

bool equal_mod_phi(const PlueckerVector& a, const PlueckerVector& b) {
  if (a.d() != b.d() || a.n() != b.n()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k].is_infinite() != b[k].is_infinite()) return false;
  return reduce_mod_phi(a) == reduce_mod_phi(b);
}

PlueckerVector tropical_minors(const TropMatrix& m) {
  const int d = static_cast<int>(m.rows()), n = static_cast<int>(m.cols());
  if (d > n) throw std::invalid_argument("tropical_minors needs rows <= columns");
  PlueckerVector w(d, n);
  auto subs = k_subsets(n, d);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    std::vector<int> cols;
    for (int i : elements(subs[k])) cols.push_back(i - 1);
    w[k] = tropical_determinant(m.columns(cols));
  }
  return w;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

ExtReal ext_from_json(const json& j) {
  if (j.is_string()) return parse_ext_real(j.get<std::string>());
  if (j.is_number_integer()) return ExtReal(Rational(j.get<long>()));
  throw std::invalid_argument("coefficient must be a string or an integer");
}

}  // namespace

TropMatrix parse_trop_matrix_csv(std::string_view text) {
  std::vector<std::vector<ExtReal>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<ExtReal> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_ext_real(trim(cell)));
    rows.push_back(std::move(row));
  }
  return TropMatrix(rows);
}

std::string trop_matrix_to_csv(const TropMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += to_string(m(i, j));
    }
    out += "\n";
  }
  return out;
}

TropPolynomial parse_trop_polynomial_json(std::string_view text) {
  json j = json::parse(text);
  std::size_t n = j.at("vars").get<std::size_t>();
  std::vector<TropTerm> terms;
  for (const auto& t : j.at("terms")) terms.push_back({t.at("exp").get<Exponent>(), ext_from_json(t.at("coeff"))});
  return TropPolynomial(n, std::move(terms));
}

std::string trop_polynomial_to_json(const TropPolynomial& f) {
  json j;
  j["vars"] = f.variables();
  j["terms"] = json::array();
  for (const auto& t : f.terms()) j["terms"].push_back({{"exp", t.exp}, {"coeff", to_string(t.coeff)}});
  return j.dump();
}

PlueckerVector parse_pluecker_json(std::string_view text) {
  json j = json::parse(text);
  int d = j.at("d").get<int>(), n = j.at("n").get<int>();
  PlueckerVector w(d, n);
  std::vector<bool> seen(w.size(), false);
  for (const auto& [key, value] : j.at("coords").items()) {
    Subset s = parse_subset(key, n);
    if (subset_size(s) != d) throw std::invalid_argument("coordinate key " + key + " has the wrong size");
    w.set(s, ext_from_json(value));
    seen[subset_rank(s, n)] = true;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("Pluecker vector JSON is missing coordinates");
  return w;
}

std::string pluecker_to_json(const PlueckerVector& w) {
  json coords = json::object();
  auto subs = k_subsets(w.n(), w.d());
  for (std::size_t k = 0; k < subs.size(); ++k) coords[subset_name(subs[k], w.n())] = to_string(w[k]);
  json j;
  j["d"] = w.d();
  j["n"] = w.n();
  j["coords"] = coords;
  return j.dump();
}

}  // namespace tropgrass
