#include "tropgrass/exactalg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tropgrass::alg {

using tropgrass::to_string;

// ---------------------------------------------------------------- Field

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; static_cast<unsigned long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(unsigned characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (1u << 31)))
    throw std::invalid_argument("field characteristic must be 0 or a prime below 2^31");
}

Rational Field::normalize(const Rational& q) const {
  if (p_ == 0) return q;
  Integer p(p_);
  Integer num = q.get_num() % p;
  Integer den = q.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes in GF(" + std::to_string(p_) + ")");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * inv) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::inverse(const Rational& q) const {
  if (q == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return 1 / q;
  return normalize(Rational(1) / q);
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

// ---------------------------------------------------------------- Monomial

void Monomial::set(std::size_t i, unsigned value) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  if (value > 255) throw std::overflow_error("monomial exponent exceeds 255");
  e_[i] = static_cast<std::uint8_t>(value);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : e_) d += x;
  return d;
}

std::uint64_t Monomial::support_mask() const {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < 64 && i < kMaxVars; ++i)
    if (e_[i]) m |= std::uint64_t{1} << i;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e_[i]) + other.e_[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (divisor.e_[i] > e_[i]) throw std::invalid_argument("monomial division is not exact");
    r.e_[i] = static_cast<std::uint8_t>(e_[i] - divisor.e_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] && other.e_[i]) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = 1469598103934665603ull;
  const auto* p = m.data();
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

int degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t nvars) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------- rings

std::size_t PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return i;
  throw std::out_of_range("unknown variable '" + std::string(name) + "'");
}

RingPtr make_ring(std::vector<std::string> names, Field field) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many variables (max 64)");
  auto r = std::make_shared<PolyRing>();
  r->names = std::move(names);
  r->field = field;
  return r;
}

RingPtr with_field(const RingPtr& ring, Field field) { return make_ring(ring->names, field); }

// ---------------------------------------------------------------- MultiPoly

namespace {

void sort_terms(std::vector<Term>& terms, std::size_t nvars) {
  std::sort(terms.begin(), terms.end(), [nvars](const Term& a, const Term& b) {
    return degrevlex_compare(a.mono, b.mono, nvars) > 0;
  });
}

}  // namespace

MultiPoly::MultiPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without ring");
  const std::size_t n = ring_->size();
  for (auto& t : terms) {
    for (std::size_t i = n; i < kMaxVars; ++i)
      if (t.mono[i] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    t.coeff = ring_->field.normalize(t.coeff);
  }
  sort_terms(terms, n);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff = ring_->field.normalize(terms_.back().coeff + t.coeff);
    } else {
      if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && terms_.back().coeff == 0) terms_.pop_back();
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  return MultiPoly(ring, {Term{Monomial(), c}});
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw std::out_of_range("variable index out of range");
  Monomial m;
  m.set(index, 1);
  return MultiPoly(ring, {Term{m, 1}});
}

MultiPoly MultiPoly::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  return MultiPoly(ring, {Term{m, c}});
}

bool MultiPoly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
  if (a.ring() == b.ring()) return;
  if (!a.ring() || !b.ring() || a.ring()->names != b.ring()->names || !(a.ring()->field == b.ring()->field))
    throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(*this, o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return MultiPoly(ring_, std::move(all));
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(*this, o);
  std::map<Monomial, Rational> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc) out.push_back(Term{m, c});
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::times_monomial(const Monomial& m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.mono = t.mono * m;
  return MultiPoly(ring_, std::move(out));
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  return scaled(ring_->field.inverse(terms_.front().coeff));
}

MultiPoly MultiPoly::mapped(const RingPtr& target, const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != ring_->size()) throw std::invalid_argument("variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < index_map.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (index_map[i] >= target->size()) throw std::out_of_range("variable map target out of range");
      m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    }
    out.push_back(Term{m, t.coeff});
  }
  return MultiPoly(target, std::move(out));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ---------------------------------------------------------------- text I/O

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  const PolyRing& ring = *f.ring();
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += to_string(c);
    } else if (c == 1) {
      out += to_string(t.mono, ring);
    } else {
      out += to_string(c) + "*" + to_string(t.mono, ring);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), s_(text) {}

  MultiPoly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) throw error("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw error("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
    }
    return MultiPoly(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{Monomial(), 1};
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
          ++pos_;
        t.coeff *= parse_rational(s_.substr(start, pos_ - start));
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_' ||
                                    s_[pos_] == '[' || s_[pos_] == ']' || s_[pos_] == ','))
          ++pos_;
        std::size_t var;
        try {
          var = ring_->index_of(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
          throw error("unknown variable '" + std::string(s_.substr(start, pos_ - start)) + "'");
        }
        unsigned power = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          std::size_t ps = pos_;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
          if (ps == pos_) throw error("expected exponent");
          power = static_cast<unsigned>(std::stoul(std::string(s_.substr(ps, pos_ - ps))));
        }
        t.mono.set(var, t.mono[var] + power);
      } else {
        throw error(std::string("unexpected character '") + c + "'");
      }
      have_factor = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw error("empty term");
    return t;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace tropgrass::alg
