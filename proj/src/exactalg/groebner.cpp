#include "tropgrass/exactalg/groebner.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <sstream>

namespace tropgrass::alg {

// ---------------------------------------------------------------- TermOrder

namespace {

std::vector<std::int64_t> scale_row(const std::vector<Rational>& row) {
  Integer l = row.empty() ? Integer(1) : lcm_of_denominators(row.data(), row.data() + row.size());
  std::vector<std::int64_t> out;
  out.reserve(row.size());
  for (const auto& q : row) {
    Integer v = q.get_num() * (l / q.get_den());
    if (!v.fits_slong_p() || abs(v) > (Integer(1) << 40))
      throw std::overflow_error("term order weight too large after scaling");
    out.push_back(v.get_si());
  }
  return out;
}

std::vector<std::int64_t> degree_row_neg(std::size_t n) { return std::vector<std::int64_t>(n, -1); }

}  // namespace

TermOrder TermOrder::weight(const std::vector<Rational>& w) { return weights({w}); }

TermOrder TermOrder::weights(const std::vector<std::vector<Rational>>& rows) {
  TermOrder o;
  for (const auto& r : rows) {
    if (o.rows_.empty()) o.rows_.push_back(degree_row_neg(r.size()));
    o.rows_.push_back(scale_row(r));
  }
  return o;
}

TermOrder TermOrder::elimination(const std::vector<bool>& eliminate) {
  TermOrder o;
  std::vector<std::int64_t> row(eliminate.size(), 0);
  for (std::size_t i = 0; i < eliminate.size(); ++i) row[i] = eliminate[i] ? -1 : 0;
  o.rows_.push_back(std::move(row));
  return o;
}

TermOrder TermOrder::from_rows(const std::vector<std::vector<Rational>>& rows) {
  TermOrder o;
  for (const auto& r : rows) o.rows_.push_back(scale_row(r));
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& row : rows_) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      wa += row[i] * a[i];
      wb += row[i] * b[i];
    }
    if (wa != wb) return wa < wb ? 1 : -1;
  }
  return degrevlex_compare(a, b, kMaxVars);
}

std::string TermOrder::key() const {
  std::ostringstream os;
  for (const auto& row : rows_) {
    os << '[';
    for (auto v : row) os << v << ',';
    os << ']';
  }
  return os.str();
}

Monomial leading_monomial(const MultiPoly& f, const TermOrder& order) { return leading_term(f, order).mono; }

Term leading_term(const MultiPoly& f, const TermOrder& order) {
  if (f.is_zero()) throw std::invalid_argument("leading term of zero polynomial");
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (order.compare(t.mono, best->mono) > 0) best = &t;
  return *best;
}

// ---------------------------------------------------------------- engine

namespace {

constexpr int kMaxKeys = 6;

struct Key {
  std::array<std::int64_t, kMaxKeys> v{};
  Key operator+(const Key& o) const {
    Key r;
    for (int i = 0; i < kMaxKeys; ++i) r.v[i] = v[i] + o.v[i];
    return r;
  }
  Key operator-(const Key& o) const {
    Key r;
    for (int i = 0; i < kMaxKeys; ++i) r.v[i] = v[i] - o.v[i];
    return r;
  }
};

class OrderContext {
 public:
  OrderContext(const TermOrder& order, std::size_t nvars) : nvars_(nvars) {
    if (order.rows().size() + 1 > kMaxKeys) throw std::invalid_argument("term order has too many weight rows");
    for (const auto& r : order.rows()) {
      if (r.size() != nvars) throw std::invalid_argument("term order row length does not match the ring");
      rows_.push_back(r);
    }
    nkeys_ = static_cast<int>(rows_.size()) + 1;
  }

  Key key_of(const Monomial& m) const {
    Key k;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < nvars_; ++i) s -= rows_[r][i] * m[i];
      k.v[r] = s;
    }
    k.v[rows_.size()] = m.degree();
    return k;
  }

  int compare(const Key& ka, const Monomial& a, const Key& kb, const Monomial& b) const {
    for (int i = 0; i < nkeys_; ++i)
      if (ka.v[i] != kb.v[i]) return ka.v[i] > kb.v[i] ? 1 : -1;
    for (std::size_t i = nvars_; i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  std::size_t nvars() const { return nvars_; }

 private:
  std::size_t nvars_;
  int nkeys_ = 1;
  std::vector<std::vector<std::int64_t>> rows_;
};

// Coefficient domains. reduction_factors(lf, lg) returns (a, b) with
// a*lf - b*lg == 0; a reduction step is f <- a*f - b*m*g.

struct ModP {
  using C = std::uint32_t;
  std::uint32_t p;

  C from_rational(const Rational& q) const {
    Integer r = q.get_num() % Integer(p);
    if (r < 0) r += p;
    Integer d = q.get_den() % Integer(p);
    return mul(static_cast<C>(r.get_ui()), inv(static_cast<C>(d.get_ui())));
  }
  Rational to_rational(C c) const { return Rational(static_cast<unsigned long>(c)); }
  static bool is_zero(C c) { return c == 0; }
  C mul(C a, C b) const { return static_cast<C>((std::uint64_t(a) * b) % p); }
  C sub(C a, C b) const { return a >= b ? a - b : a + p - b; }
  C inv(C a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<C>(r);
  }
  static constexpr bool kUnitA = true;
  void factors(const C& lf, const C& lg, C& a, C& b) const {
    a = 1;
    b = mul(lf, inv(lg));
  }
};

struct ZZ {
  using C = Integer;
  static bool is_zero(const C& c) { return c == 0; }
  static constexpr bool kUnitA = false;
  static void factors(const C& lf, const C& lg, C& a, C& b) {
    C g;
    mpz_gcd(g.get_mpz_t(), lf.get_mpz_t(), lg.get_mpz_t());
    a = lg / g;
    b = lf / g;
    if (a < 0) {
      a = -a;
      b = -b;
    }
  }
};

struct QQ {
  using C = Rational;
  static bool is_zero(const C& c) { return c == 0; }
  static constexpr bool kUnitA = true;
  static void factors(const C& lf, const C& lg, C& a, C& b) {
    a = 1;
    b = lf / lg;
  }
};

template <class Dom>
struct ITerm {
  Monomial m;
  Key k;
  typename Dom::C c;
};

template <class Dom>
using IPoly = std::vector<ITerm<Dom>>;

template <class Dom>
class Engine {
 public:
  using C = typename Dom::C;

  Engine(Dom dom, const OrderContext& ord) : dom_(std::move(dom)), ord_(ord) {}

  Dom& dom() { return dom_; }

  IPoly<Dom> convert(const MultiPoly& f) const {
    IPoly<Dom> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      C c = to_coeff(t.coeff);
      if (Dom::is_zero(c)) continue;
      out.push_back(ITerm<Dom>{t.mono, ord_.key_of(t.mono), c});
    }
    std::sort(out.begin(), out.end(), [this](const ITerm<Dom>& a, const ITerm<Dom>& b) {
      return ord_.compare(a.k, a.m, b.k, b.m) > 0;
    });
    return out;
  }

  C to_coeff(const Rational& q) const {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return dom_.from_rational(q);
    } else if constexpr (std::is_same_v<Dom, ZZ>) {
      if (q.get_den() != 1) throw std::logic_error("integer domain received a fraction");
      return q.get_num();
    } else {
      return q;
    }
  }

  Rational to_rational(const C& c) const {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return dom_.to_rational(c);
    } else {
      return Rational(c);
    }
  }

  MultiPoly to_poly(const IPoly<Dom>& f, const RingPtr& ring) const {
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f) terms.push_back(Term{t.m, to_rational(t.c)});
    return MultiPoly(ring, std::move(terms));
  }

  C mul(const C& a, const C& b) const {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return dom_.mul(a, b);
    } else {
      return C(a * b);
    }
  }
  C sub(const C& a, const C& b) const {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return dom_.sub(a, b);
    } else {
      return C(a - b);
    }
  }
  C neg(const C& a) const {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return dom_.sub(0, a);
    } else {
      return C(-a);
    }
  }

  void factors(const C& lf, const C& lg, C& a, C& b) const { dom_.factors(lf, lg, a, b); }

  /// f <- a*f - b*(m*g); terms of f before `from` are only scaled.
  void sub_mul(IPoly<Dom>& f, std::size_t from, const C& a, const C& b, const Monomial& m, const Key& mk,
               const IPoly<Dom>& g) const {
    const bool scale = !is_one(a);
    IPoly<Dom> out;
    out.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) {
      out.push_back(f[i]);
      if (scale) out.back().c = mul(out.back().c, a);
    }
    std::size_t i = from, j = 0;
    ITerm<Dom> gt;
    while (i < f.size() || j < g.size()) {
      int c;
      if (j < g.size()) {
        gt.m = g[j].m * m;
        gt.k = g[j].k + mk;
      }
      if (i >= f.size()) {
        c = -1;
      } else if (j >= g.size()) {
        c = 1;
      } else {
        c = ord_.compare(f[i].k, f[i].m, gt.k, gt.m);
      }
      if (c > 0) {
        out.push_back(f[i]);
        if (scale) out.back().c = mul(out.back().c, a);
        ++i;
      } else if (c < 0) {
        gt.c = neg(mul(b, g[j].c));
        out.push_back(gt);
        ++j;
      } else {
        C v = scale ? mul(f[i].c, a) : f[i].c;
        v = sub(v, mul(b, g[j].c));
        if (!Dom::is_zero(v)) {
          gt.c = v;
          out.push_back(gt);
        }
        ++i;
        ++j;
      }
    }
    f.swap(out);
  }

  static bool is_one(const C& a) {
    if constexpr (std::is_same_v<Dom, ModP>) {
      return a == 1;
    } else {
      return a == 1;
    }
  }

  /// Monic (fields) or primitive with positive leading coefficient (Z).
  void normalize(IPoly<Dom>& f) const {
    if (f.empty()) return;
    if constexpr (std::is_same_v<Dom, ZZ>) {
      Integer g = 0;
      for (const auto& t : f) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) break;
      }
      if (f.front().c < 0) g = -g;
      if (g != 1)
        for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    } else if constexpr (std::is_same_v<Dom, ModP>) {
      if (f.front().c == 1) return;
      C inv = dom_.inv(f.front().c);
      for (auto& t : f) t.c = dom_.mul(t.c, inv);
    } else {
      if (f.front().c == 1) return;
      Rational inv = 1 / f.front().c;
      for (auto& t : f) t.c *= inv;
    }
  }

  const OrderContext& order() const { return ord_; }

 private:
  Dom dom_;
  const OrderContext& ord_;
};

struct Reducer {
  Monomial lead;
  std::uint64_t mask;
  unsigned degree;
};

template <class Dom>
class Buchberger {
 public:
  struct Elem {
    IPoly<Dom> poly;
    Monomial lead;
    Key lead_key;
    std::uint64_t mask = 0;
    unsigned sugar = 0;
    bool active = true;
  };

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    Key lcm_key;
    unsigned sugar;
  };

  Buchberger(Engine<Dom>& eng, const GroebnerOptions& opts, std::vector<unsigned> grading)
      : eng_(eng), opts_(opts), grading_(std::move(grading)) {}

  std::vector<IPoly<Dom>> run(std::vector<IPoly<Dom>> inputs) {
    // Process inputs by increasing leading monomial so the result does not
    // depend on the caller's generator order.
    std::sort(inputs.begin(), inputs.end(), [this](const IPoly<Dom>& a, const IPoly<Dom>& b) {
      if (a.empty() || b.empty()) return !a.empty() < !b.empty();
      int c = eng_.order().compare(a.front().k, a.front().m, b.front().k, b.front().m);
      if (c != 0) return c < 0;
      return a.size() < b.size();
    });
    for (auto& f : inputs) {
      if (f.empty()) continue;
      unsigned s = sugar_of(f);
      reduce(f, s, true);
      if (!f.empty()) insert(std::move(f), s);
      if (unit_found_) break;
    }
    std::size_t done = 0;
    while (!pairs_.empty() && !unit_found_) {
      auto it = pairs_.begin();
      Pair p = *it;
      pairs_.erase(it);
      ++done;
      if (opts_.progress && opts_.progress_interval && done % opts_.progress_interval == 0) {
        GroebnerProgress pr{steps_, done, pairs_.size(), active_count(), p.sugar};
        opts_.progress(pr);
      }
      IPoly<Dom> s = spoly(p);
      unsigned sug = p.sugar;
      reduce(s, sug, true);
      if (!s.empty()) insert(std::move(s), sug);
    }
    return finish();
  }

  std::uint64_t steps() const { return steps_; }

 private:
  struct PairLess {
    const Engine<Dom>* eng;
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.sugar != b.sugar) return a.sugar < b.sugar;
      int c = eng->order().compare(a.lcm_key, a.lcm, b.lcm_key, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  unsigned mono_sugar(const Monomial& m) const {
    if (grading_.empty()) return m.degree();
    unsigned s = 0;
    for (std::size_t i = 0; i < grading_.size(); ++i) s += grading_[i] * m[i];
    return s;
  }

  unsigned sugar_of(const IPoly<Dom>& f) const {
    unsigned s = 0;
    for (const auto& t : f) s = std::max(s, mono_sugar(t.m));
    return s;
  }

  std::size_t active_count() const {
    std::size_t c = 0;
    for (const auto& e : basis_) c += e.active;
    return c;
  }

  void step() {
    ++steps_;
    if (opts_.step_budget && steps_ > opts_.step_budget) throw BudgetExceeded(steps_, active_count());
  }

  const Elem* find_reducer(const Monomial& m, std::uint64_t mmask, unsigned mdeg) const {
    for (const auto& e : basis_) {
      if (!e.active) continue;
      if ((e.mask & ~mmask) != 0) continue;
      if (e.lead.degree() > mdeg) continue;
      if (e.lead.divides(m)) return &e;
    }
    return nullptr;
  }

  void reduce(IPoly<Dom>& f, unsigned& sugar, bool full) {
    std::size_t k = 0;
    int since_normalize = 0;
    while (k < f.size()) {
      const auto& t = f[k];
      const Elem* r = find_reducer(t.m, t.m.support_mask(), t.m.degree());
      if (!r) {
        if (!full) break;
        ++k;
        continue;
      }
      Monomial q = t.m / r->lead;
      Key qk = t.k - r->lead_key;
      typename Dom::C a, b;
      eng_.factors(t.c, r->poly.front().c, a, b);
      sugar = std::max(sugar, mono_sugar(q) + r->sugar);
      eng_.sub_mul(f, k, a, b, q, qk, r->poly);
      step();
      if constexpr (std::is_same_v<Dom, ZZ>) {
        if (++since_normalize >= 8) {
          eng_.normalize(f);
          since_normalize = 0;
        }
      }
    }
    eng_.normalize(f);
  }

  IPoly<Dom> spoly(const Pair& p) {
    step();
    const Elem& f = basis_[p.i];
    const Elem& g = basis_[p.j];
    Monomial mf = p.lcm / f.lead;
    Monomial mg = p.lcm / g.lead;
    Key kf = p.lcm_key - f.lead_key;
    Key kg = p.lcm_key - g.lead_key;
    IPoly<Dom> s;
    s.reserve(f.poly.size());
    for (const auto& t : f.poly) s.push_back(ITerm<Dom>{t.m * mf, t.k + kf, t.c});
    typename Dom::C a, b;
    eng_.factors(f.poly.front().c, g.poly.front().c, a, b);
    eng_.sub_mul(s, 0, a, b, mg, kg, g.poly);
    return s;
  }

  void insert(IPoly<Dom> h, unsigned sugar) {
    Elem e;
    e.lead = h.front().m;
    e.lead_key = h.front().k;
    e.mask = e.lead.support_mask();
    e.sugar = sugar;
    e.poly = std::move(h);
    if (e.lead.is_one()) unit_found_ = true;
    const std::size_t t = basis_.size();

    // Gebauer-Moeller update.
    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!basis_[i].active) continue;
      cands.push_back(Cand{i, basis_[i].lead.lcm(e.lead), basis_[i].lead.coprime(e.lead)});
    }
    std::vector<bool> keep(cands.size(), true);
    // Chain criterion among new pairs: drop (i,t) if some other new pair's
    // lcm properly divides it, or an equal lcm appears earlier.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      for (std::size_t b = 0; b < cands.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (cands[b].lcm.divides(cands[a].lcm)) {
          if (!(cands[b].lcm == cands[a].lcm)) {
            keep[a] = false;
          } else if (cands[b].coprime && !cands[a].coprime) {
            keep[a] = false;
          } else if (cands[b].coprime == cands[a].coprime && b < a) {
            keep[a] = false;
          }
        }
      }
    }
    // Old pairs (i,j) become redundant when lead(h) divides their lcm strictly.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      if (e.lead.divides(p.lcm) && !(basis_[p.i].lead.lcm(e.lead) == p.lcm) &&
          !(basis_[p.j].lead.lcm(e.lead) == p.lcm)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    // Deactivate elements whose leads are multiples of the new lead.
    for (auto& old : basis_)
      if (old.active && e.lead.divides(old.lead)) old.active = false;

    basis_.push_back(std::move(e));
    const Elem& ne = basis_.back();
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!keep[a] || cands[a].coprime) continue;
      const Elem& old = basis_[cands[a].i];
      Pair p;
      p.i = cands[a].i;
      p.j = t;
      p.lcm = cands[a].lcm;
      p.lcm_key = key_of(p.lcm);
      unsigned si = mono_sugar(p.lcm / old.lead) + old.sugar;
      unsigned sj = mono_sugar(p.lcm / ne.lead) + ne.sugar;
      p.sugar = std::max(si, sj);
      pairs_.insert(p);
    }
  }

  Key key_of(const Monomial& m) const { return order_ctx().key_of(m); }
  const OrderContext& order_ctx() const { return eng_.order(); }

  std::vector<IPoly<Dom>> finish() {
    if (unit_found_) {
      IPoly<Dom> one;
      for (const auto& e : basis_)
        if (e.active && e.lead.is_one()) one = e.poly;
      return {one};
    }
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i].active) idx.push_back(i);
    // Tail-reduce each element by the others.
    std::vector<IPoly<Dom>> out;
    for (std::size_t i : idx) {
      IPoly<Dom> f = basis_[i].poly;
      basis_[i].active = false;
      unsigned sug = basis_[i].sugar;
      reduce_tail(f, sug);
      basis_[i].active = true;
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [this](const IPoly<Dom>& a, const IPoly<Dom>& b) {
      return eng_.order().compare(a.front().k, a.front().m, b.front().k, b.front().m) < 0;
    });
    return out;
  }

  void reduce_tail(IPoly<Dom>& f, unsigned& sugar) {
    // Same as reduce() but the leading term is kept.
    std::size_t k = 1;
    int since_normalize = 0;
    while (k < f.size()) {
      const auto& t = f[k];
      const Elem* r = find_reducer(t.m, t.m.support_mask(), t.m.degree());
      if (!r) {
        ++k;
        continue;
      }
      Monomial q = t.m / r->lead;
      Key qk = t.k - r->lead_key;
      typename Dom::C a, b;
      eng_.factors(t.c, r->poly.front().c, a, b);
      sugar = std::max(sugar, mono_sugar(q) + r->sugar);
      eng_.sub_mul(f, k, a, b, q, qk, r->poly);
      step();
      if constexpr (std::is_same_v<Dom, ZZ>) {
        if (++since_normalize >= 8) {
          eng_.normalize(f);
          since_normalize = 0;
        }
      }
    }
    eng_.normalize(f);
  }

  Engine<Dom>& eng_;
  const GroebnerOptions& opts_;
  std::vector<unsigned> grading_;
  std::vector<Elem> basis_;
  std::set<Pair, PairLess> pairs_{PairLess{&eng_}};
  std::uint64_t steps_ = 0;
  bool unit_found_ = false;
};

void check_ring(const std::vector<MultiPoly>& polys, const RingPtr& ring) {
  for (const auto& f : polys)
    if (f.ring() != ring && (f.ring()->names != ring->names || !(f.ring()->field == ring->field)))
      throw std::invalid_argument("generators live in different rings");
}

template <class Dom>
std::vector<MultiPoly> run_groebner(Dom dom, const std::vector<MultiPoly>& gens, const RingPtr& ring,
                                    const OrderContext& ctx, const GroebnerOptions& opts) {
  Engine<Dom> eng(std::move(dom), ctx);
  std::vector<IPoly<Dom>> inputs;
  for (const auto& g : gens) {
    if constexpr (std::is_same_v<Dom, ZZ>) {
      // Clear denominators.
      std::vector<Rational> cs;
      for (const auto& t : g.terms()) cs.push_back(t.coeff);
      Integer l = cs.empty() ? Integer(1) : lcm_of_denominators(cs.data(), cs.data() + cs.size());
      inputs.push_back(eng.convert(g.scaled(Rational(l))));
    } else {
      inputs.push_back(eng.convert(g));
    }
  }
  std::vector<unsigned> grading = opts.sugar_grading;
  if (!grading.empty() && grading.size() != ring->size())
    throw std::invalid_argument("sugar grading has wrong length");
  Buchberger<Dom> bb(eng, opts, grading);
  auto basis = bb.run(std::move(inputs));
  std::vector<MultiPoly> out;
  out.reserve(basis.size());
  for (auto& b : basis)
    out.push_back(eng.to_poly(b, ring).scaled(ring->field.inverse(eng.to_rational(b.front().c))));
  return out;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators, const TermOrder& order,
                                      const GroebnerOptions& options) {
  std::vector<MultiPoly> gens;
  for (const auto& g : generators)
    if (!g.is_zero()) gens.push_back(g);
  if (gens.empty()) return {};
  const RingPtr& ring = gens.front().ring();
  check_ring(gens, ring);
  OrderContext ctx(order, ring->size());
  if (ring->field.is_rational()) return run_groebner(ZZ{}, gens, ring, ctx, options);
  return run_groebner(ModP{ring->field.characteristic()}, gens, ring, ctx, options);
}

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& divisors, const TermOrder& order) {
  if (f.is_zero()) return f;
  const RingPtr& ring = f.ring();
  check_ring(divisors, ring);
  OrderContext ctx(order, ring->size());
  auto run = [&](auto dom) {
    using Dom = decltype(dom);
    Engine<Dom> eng(dom, ctx);
    std::vector<IPoly<Dom>> ds;
    for (const auto& d : divisors)
      if (!d.is_zero()) ds.push_back(eng.convert(d));
    IPoly<Dom> r = eng.convert(f);
    std::size_t k = 0;
    while (k < r.size()) {
      const IPoly<Dom>* red = nullptr;
      for (const auto& d : ds)
        if (d.front().m.divides(r[k].m)) {
          red = &d;
          break;
        }
      if (!red) {
        ++k;
        continue;
      }
      typename Dom::C a, b;
      eng.factors(r[k].c, red->front().c, a, b);
      eng.sub_mul(r, k, a, b, r[k].m / red->front().m, r[k].k - red->front().k, *red);
    }
    return eng.to_poly(r, ring);
  };
  if (ring->field.is_rational()) return run(QQ{});
  return run(ModP{ring->field.characteristic()});
}

}  // namespace tropgrass::alg
