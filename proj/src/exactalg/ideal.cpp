#include "tropgrass/exactalg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace tropgrass::alg {

namespace {

// Same variables, different ring object.
MultiPoly rebind(const MultiPoly& f, const RingPtr& ring) {
  std::vector<std::size_t> id(ring->size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return f.mapped(ring, id);
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.ring() && g.ring()->names != ring_->names)
      throw std::invalid_argument("generator lives in a different ring");
    if (g.ring() && !(g.ring()->field == ring_->field)) throw std::invalid_argument("generator over a different field");
    if (g.is_zero()) continue;
    gens_.push_back(g.ring() == ring_ ? std::move(g) : rebind(g, ring_));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MultiPoly& g) { return g.is_homogeneous(); });
}

std::vector<MultiPoly> Ideal::groebner(const TermOrder& order, const GroebnerOptions& options) const {
  const std::string key = order.key();
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, b] : cache_->bases)
      if (o.key() == key) return b;
  }
  std::vector<MultiPoly> basis = gens_.empty() ? std::vector<MultiPoly>{} : groebner_basis(gens_, order, options);
  seed_groebner(order, basis);
  return basis;
}

std::pair<TermOrder, std::vector<MultiPoly>> Ideal::any_groebner(const GroebnerOptions& options) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (!cache_->bases.empty()) return cache_->bases.front();
  }
  TermOrder ord = TermOrder::degrevlex();
  return {ord, groebner(ord, options)};
}

void Ideal::seed_groebner(const TermOrder& order, std::vector<MultiPoly> basis) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  const std::string key = order.key();
  for (const auto& [o, b] : cache_->bases)
    if (o.key() == key) return;
  cache_->bases.emplace_back(order, std::move(basis));
}

bool Ideal::contains(const MultiPoly& f, const GroebnerOptions& options) const {
  if (f.is_zero()) return true;
  auto [ord, basis] = any_groebner(options);
  return normal_form(f.ring() == ring_ ? f : rebind(f, ring_), basis, ord).is_zero();
}

bool Ideal::contains(const Ideal& other, const GroebnerOptions& options) const {
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const MultiPoly& g) { return contains(g, options); });
}

bool Ideal::is_unit(const GroebnerOptions& options) const {
  auto [ord, basis] = any_groebner(options);
  return basis.size() == 1 && basis.front().is_constant();
}

bool ideals_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (a.ring()->names != b.ring()->names || !(a.ring()->field == b.ring()->field)) return false;
  return a.contains(b, options) && b.contains(a, options);
}

MultiPoly initial_form(const MultiPoly& f, const std::vector<Rational>& w) {
  if (f.is_zero()) return f;
  if (w.size() != f.ring()->size()) throw std::invalid_argument("weight vector length does not match the ring");
  std::vector<Rational> weights;
  weights.reserve(f.size());
  for (const auto& t : f.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (t.mono[i]) s += w[i] * t.mono[i];
    weights.push_back(s);
  }
  const Rational best = *std::min_element(weights.begin(), weights.end());
  std::vector<Term> kept;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (weights[k] == best) kept.push_back(f.terms()[k]);
  return MultiPoly(f.ring(), std::move(kept));
}

Ideal initial_ideal(const Ideal& ideal, const std::vector<Rational>& w, const GroebnerOptions& options) {
  if (w.size() != ideal.ring()->size()) throw std::invalid_argument("weight vector length does not match the ring");
  if (!ideal.is_homogeneous()) throw std::invalid_argument("initial_ideal needs a homogeneous ideal");
  TermOrder ord = TermOrder::weight(w);
  std::vector<MultiPoly> forms;
  for (const auto& g : ideal.groebner(ord, options)) forms.push_back(initial_form(g, w));
  Ideal out(ideal.ring(), forms);
  out.seed_groebner(ord, forms);
  return out;
}

namespace {

// Degrevlex with x_var regarded as the last variable.
TermOrder var_last_order(std::size_t nvars, std::size_t var) {
  std::vector<Rational> deg(nvars, Rational(-1)), last(nvars, Rational(0));
  last[var] = 1;
  return TermOrder::from_rows({deg, last});
}

MultiPoly divide_out_variable(const MultiPoly& f, std::size_t var) {
  unsigned k = 255;
  for (const auto& t : f.terms()) k = std::min(k, t.mono[var]);
  if (k == 0) return f;
  Monomial m;
  m.set(var, k);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) terms.push_back(Term{t.mono / m, t.coeff});
  return MultiPoly(f.ring(), std::move(terms));
}

bool has_constant(const std::vector<MultiPoly>& basis) {
  return std::any_of(basis.begin(), basis.end(), [](const MultiPoly& g) { return g.is_constant(); });
}

}  // namespace

Ideal saturate(const Ideal& ideal, std::size_t var, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw std::invalid_argument("saturate needs a homogeneous ideal");
  if (var >= ideal.ring()->size()) throw std::out_of_range("saturation variable out of range");
  TermOrder ord = var_last_order(ideal.ring()->size(), var);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.groebner(ord, options)) gens.push_back(divide_out_variable(g, var));
  return Ideal(ideal.ring(), std::move(gens));
}

Ideal saturate_by_product(const Ideal& ideal, const GroebnerOptions& options) {
  Ideal cur = ideal;
  for (std::size_t v = 0; v < ideal.ring()->size(); ++v) {
    cur = saturate(cur, v, options);
    if (has_constant(cur.generators())) return Ideal(ideal.ring(), {MultiPoly::constant(ideal.ring(), 1)});
  }
  return cur;
}

std::optional<Monomial> find_monomial(const Ideal& ideal, const GroebnerOptions& options) {
  const std::size_t n = ideal.ring()->size();
  if (ideal.generators().empty()) return std::nullopt;
  if (!ideal.is_homogeneous()) throw std::invalid_argument("find_monomial needs a homogeneous ideal");
  if (!saturate_by_product(ideal, options).is_unit(options)) return std::nullopt;

  auto [ord, basis] = ideal.any_groebner(options);
  auto member = [&](const Monomial& m) {
    return normal_form(MultiPoly::monomial(ideal.ring(), m), basis, ord).is_zero();
  };
  // Some power of the product of all variables lies in the ideal.
  unsigned k = 1;
  auto power = [&](unsigned e) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, e);
    return m;
  };
  while (!member(power(k))) {
    if (k >= 128) throw std::runtime_error("monomial witness exceeds the exponent range");
    k *= 2;
  }
  Monomial m = power(k);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned lo = 0, hi = m[i];
    while (lo < hi) {
      unsigned mid = (lo + hi) / 2;
      Monomial trial = m;
      trial.set(i, mid);
      if (member(trial)) hi = mid;
      else lo = mid + 1;
    }
    m.set(i, lo);
  }
  return m;
}

MonomialFreeResult is_monomial_free(const Ideal& ideal, const std::vector<Rational>& w,
                                    const GroebnerOptions& options) {
  Ideal in = initial_ideal(ideal, w, options);
  MonomialFreeResult r;
  // The basis is sorted by increasing leading monomial, so the first
  // monomial initial form is the smallest one.
  for (const auto& g : in.generators()) {
    if (g.is_monomial()) {
      r.monomial_free = false;
      r.witness = g.terms().front().mono;
      r.method = "initial-form";
      return r;
    }
  }
  r.method = "saturation";
  r.witness = find_monomial(in, options);
  r.monomial_free = !r.witness.has_value();
  return r;
}

bool is_monomial_free_rabinowitsch(const Ideal& ideal, const std::vector<Rational>& w,
                                   const GroebnerOptions& options) {
  Ideal in = initial_ideal(ideal, w, options);
  const std::size_t n = ideal.ring()->size();
  if (n + 1 > kMaxVars) throw std::invalid_argument("too many variables for the auxiliary-variable test");
  std::vector<std::string> names = ideal.ring()->names;
  names.push_back("y_aux");
  RingPtr ext = make_ring(names, ideal.ring()->field);
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  std::vector<MultiPoly> gens;
  for (const auto& g : in.generators()) gens.push_back(g.mapped(ext, id));
  Monomial all;
  for (std::size_t i = 0; i <= n; ++i) all.set(i, 1);
  gens.push_back(MultiPoly::monomial(ext, all) - MultiPoly::constant(ext, 1));
  return !has_constant(groebner_basis(gens, TermOrder::degrevlex(), options));
}

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& variables, const GroebnerOptions& options) {
  if (variables.size() != ideal.ring()->size()) throw std::invalid_argument("elimination mask has wrong length");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i]) mask |= std::uint64_t{1} << i;
  std::vector<MultiPoly> kept;
  for (const auto& g : ideal.groebner(TermOrder::elimination(variables), options)) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(),
                            [&](const Term& t) { return (t.mono.support_mask() & mask) == 0; });
    if (free) kept.push_back(g);
  }
  return Ideal(ideal.ring(), std::move(kept));
}

Ideal drop_variables(const Ideal& ideal, const std::vector<bool>& variables) {
  const auto& names = ideal.ring()->names;
  std::vector<std::string> keep;
  std::vector<std::size_t> map(names.size(), 0);
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (variables[i]) continue;
    map[i] = keep.size();
    keep.push_back(names[i]);
  }
  RingPtr target = make_ring(keep, ideal.ring()->field);
  std::vector<MultiPoly> gens;
  for (const auto& g : ideal.generators()) {
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < names.size(); ++i)
        if (variables[i] && t.mono[i]) throw std::invalid_argument("generator involves a dropped variable");
    gens.push_back(g.mapped(target, map));
  }
  return Ideal(target, std::move(gens));
}

Ideal intersect_ideals(const Ideal& a, const Ideal& b, const GroebnerOptions& options) {
  if (a.ring()->names != b.ring()->names || !(a.ring()->field == b.ring()->field))
    throw std::invalid_argument("intersect_ideals needs ideals in the same ring");
  const std::size_t n = a.ring()->size();
  if (n + 1 > kMaxVars) throw std::invalid_argument("too many variables for intersection");
  std::vector<std::string> names = a.ring()->names;
  names.insert(names.begin(), "t_aux");
  RingPtr ext = make_ring(names, a.ring()->field);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = i + 1;
  MultiPoly t = MultiPoly::variable(ext, 0);
  MultiPoly one_minus_t = MultiPoly::constant(ext, 1) - t;
  std::vector<MultiPoly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.mapped(ext, shift));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g.mapped(ext, shift));
  std::vector<bool> mask(n + 1, false);
  mask[0] = true;
  Ideal elim = eliminate(Ideal(ext, gens), mask, options);
  return drop_variables(elim, mask);
}

Ideal toric_kernel(const RingPtr& source, const RingPtr& target, const std::vector<MultiPoly>& images,
                   const GroebnerOptions& options) {
  const std::size_t ns = source->size(), nt = target->size();
  if (images.size() != ns) throw std::invalid_argument("toric_kernel needs one image per source variable");
  if (ns + nt > kMaxVars) throw std::invalid_argument("too many variables for toric_kernel");
  std::vector<std::string> names = target->names;
  names.insert(names.end(), source->names.begin(), source->names.end());
  RingPtr ext = make_ring(names, source->field);
  std::vector<std::size_t> tmap(nt);
  for (std::size_t i = 0; i < nt; ++i) tmap[i] = i;
  GroebnerOptions opts = options;
  opts.sugar_grading.assign(ns + nt, 1);
  std::vector<MultiPoly> gens;
  for (std::size_t i = 0; i < ns; ++i) {
    const MultiPoly& m = images[i];
    if (!m.is_monomial() || m.is_constant()) throw std::invalid_argument("toric_kernel images must be nonconstant monomials");
    opts.sugar_grading[nt + i] = m.total_degree();
    gens.push_back(MultiPoly::variable(ext, nt + i) - MultiPoly::monomial(ext, m.mapped(ext, tmap).terms().front().mono));
  }
  std::vector<bool> mask(ns + nt, false);
  for (std::size_t i = 0; i < nt; ++i) mask[i] = true;
  Ideal elim = eliminate(Ideal(ext, gens), mask, opts);
  return Ideal(source, drop_variables(elim, mask).generators());
}

}  // namespace tropgrass::alg
