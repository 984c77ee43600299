#include "tropgrass/exactalg/valuation.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace tropgrass::alg {

namespace {

unsigned gf2k_mul(unsigned a, unsigned b, unsigned k, unsigned modulus) {
  unsigned r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> k) a ^= modulus;
  }
  return r;
}

unsigned as_bits(const Rational& x) { return static_cast<unsigned>(x.get_num().get_ui()); }

}  // namespace

ResidueField ResidueField::gf2k(unsigned k, unsigned modulus) {
  if (k == 0 || k > 8 || (modulus >> k) != 1u) throw std::invalid_argument("bad GF(2^k) modulus");
  // Irreducibility: no nonzero element is a zero divisor.
  for (unsigned a = 1; a < (1u << k); ++a)
    for (unsigned b = 1; b < (1u << k); ++b)
      if (gf2k_mul(a, b, k, modulus) == 0) throw std::invalid_argument("GF(2^k) modulus is reducible");
  ResidueField f;
  f.base_ = Field(2);
  f.k_ = k;
  f.modulus_ = modulus;
  return f;
}

Rational ResidueField::normalize(const Rational& x) const {
  if (!k_) return base_.normalize(x);
  if (x.get_den() != 1 || x < 0 || x >= (1u << k_)) throw std::domain_error("not an element of " + name());
  return x;
}

Rational ResidueField::add(const Rational& a, const Rational& b) const {
  if (!k_) return base_.normalize(a + b);
  return Rational(as_bits(a) ^ as_bits(b));
}

Rational ResidueField::neg(const Rational& a) const { return k_ ? a : base_.normalize(-a); }

Rational ResidueField::mul(const Rational& a, const Rational& b) const {
  if (!k_) return base_.normalize(a * b);
  return Rational(gf2k_mul(as_bits(a), as_bits(b), k_, modulus_));
}

std::string ResidueField::name() const {
  return k_ ? "GF(" + std::to_string(1u << k_) + ")" : base_.name();
}

unsigned ResidueField::size() const { return k_ ? (1u << k_) : base_.characteristic(); }

UPoly::UPoly(std::vector<Rational> coeffs, ResidueField field) : c_(std::move(coeffs)), field_(field) {
  for (auto& c : c_) c = field_.normalize(c);
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<unsigned> UPoly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<unsigned>(i);
  return std::nullopt;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = field_.add(i < c_.size() ? c_[i] : Rational(0), i < o.c_.size() ? o.c_[i] : Rational(0));
  return UPoly(std::move(r), field_);
}

UPoly UPoly::operator-(const UPoly& o) const {
  std::vector<Rational> neg;
  for (const auto& c : o.c_) neg.push_back(field_.neg(c));
  return *this + UPoly(std::move(neg), field_);
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly({}, field_);
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  return UPoly(std::move(r), field_);
}

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string c = tropgrass::to_string(p.coeffs()[i]);
    if (i == 0) out += c;
    else out += (c == "1" ? "" : c + "*") + (i == 1 ? std::string("t") : "t^" + std::to_string(i));
  }
  return out;
}

TPolyMatrix::TPolyMatrix(std::size_t rows, std::size_t cols, ResidueField field)
    : r_(rows), c_(cols), field_(field), a_(rows * cols, UPoly({}, field)) {}

void TPolyMatrix::set(std::size_t i, std::size_t j, UPoly p) {
  if (!(p.field() == field_)) throw std::invalid_argument("entry over a different field");
  a_[i * c_ + j] = std::move(p);
}

UPoly TPolyMatrix::minor(const std::vector<int>& cols) const {
  if (cols.size() != r_) throw std::invalid_argument("minor needs as many columns as rows");
  std::vector<int> perm(r_);
  std::iota(perm.begin(), perm.end(), 0);
  UPoly det({}, field_);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) sign = -sign;
    UPoly prod = UPoly::constant(sign > 0 ? Rational(1) : field_.neg(1), field_);
    for (std::size_t r = 0; r < r_ && !prod.is_zero(); ++r)
      prod = prod * (*this)(r, static_cast<std::size_t>(cols[static_cast<std::size_t>(perm[r])]));
    det = det + prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

PlueckerVector plucker_valuations(const TPolyMatrix& m) {
  const int d = static_cast<int>(m.rows()), n = static_cast<int>(m.cols());
  PlueckerVector w(d, n);
  auto subs = k_subsets(n, d);
  for (std::size_t k = 0; k < subs.size(); ++k) {
    std::vector<int> cols;
    for (int i : elements(subs[k])) cols.push_back(i - 1);
    auto v = m.minor(cols).valuation();
    w[k] = v ? ExtReal(static_cast<long>(*v)) : ExtReal::infinity();
  }
  return w;
}

PlueckerVector fano_vector() {
  return pluecker_from_names(3, 7, {"124", "235", "346", "457", "156", "267", "137"});
}

TPolyMatrix fano_matrix(ResidueField field) {
  if (field.characteristic() != 2) throw std::invalid_argument("the Fano matrix needs characteristic 2");
  TPolyMatrix a(3, 7, field);
  unsigned v = 1;  // alpha^0 in the basis 1, alpha, alpha^2
  for (std::size_t c = 0; c < 7; ++c) {
    for (std::size_t r = 0; r < 3; ++r) a.set(r, c, UPoly::constant((v >> r) & 1u, field));
    v <<= 1;
    if (v & 8u) v ^= 0b1011;  // alpha^3 = alpha + 1
  }
  return a;
}

FanoSearchResult find_fano_perturbation(const ResidueField& field, unsigned max_support, std::uint64_t max_candidates) {
  if (field.characteristic() != 2 || field.size() == 0 || field.size() > 256)
    throw std::invalid_argument("Fano perturbation search needs a finite field of characteristic 2");
  const TPolyMatrix a = fano_matrix(field);
  const PlueckerVector target = fano_vector();
  const auto subs = k_subsets(7, 3);
  std::vector<std::array<int, 3>> lines;
  for (std::size_t k = 0; k < subs.size(); ++k)
    if (target[k] == ExtReal(1L)) {
      auto e = elements(subs[k]);
      lines.push_back({e[0] - 1, e[1] - 1, e[2] - 1});
    }
  const unsigned q = field.size();
  // Small-integer arithmetic for the search; the result is re-checked
  // through plucker_valuations by callers.
  std::vector<unsigned> mul(q * q);
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) mul[x * q + y] = as_bits(field.mul(x, y));
  unsigned av[3][7];
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 7; ++c) av[r][c] = a(r, c).is_zero() ? 0 : as_bits(a(r, c).coeffs()[0]);

  // The t-coefficient of a line minor of A + tB is the sum of the three
  // determinants with one column of A replaced by that column of B
  // (characteristic 2, so no signs).
  unsigned b[3][7];
  auto det3 = [&](const unsigned col[3][3]) {
    static const int p[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    unsigned s = 0;
    for (const auto& pr : p) s ^= mul[mul[col[pr[0]][0] * q + col[pr[1]][1]] * q + col[pr[2]][2]];
    return s;
  };
  auto first_order_ok = [&]() {
    for (const auto& l : lines) {
      unsigned s = 0;
      for (int swap = 0; swap < 3; ++swap) {
        unsigned col[3][3];
        for (int j = 0; j < 3; ++j)
          for (int r = 0; r < 3; ++r) col[j][r] = j == swap ? b[r][l[j]] : av[r][l[j]];
        s ^= det3(col);
      }
      if (s == 0) return false;
    }
    return true;
  };

  FanoSearchResult res;
  for (unsigned k = 0; k <= max_support && k <= 21; ++k) {
    std::vector<int> pos(k);
    std::iota(pos.begin(), pos.end(), 0);
    while (true) {
      std::vector<unsigned> vals(k, 1);
      while (true) {
        if (res.candidates_tried >= max_candidates) return res;
        ++res.candidates_tried;
        for (auto& row : b) std::fill(std::begin(row), std::end(row), 0u);
        for (unsigned i = 0; i < k; ++i) b[pos[i] / 7][pos[i] % 7] = vals[i];
        if (first_order_ok()) {
          TPolyMatrix m(3, 7, field);
          res.perturbation.assign(21, 0);
          for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 7; ++c) {
              res.perturbation[r * 7 + c] = b[r][c];
              m.set(r, c, UPoly({Rational(av[r][c]), Rational(b[r][c])}, field));
            }
          res.matrix = std::move(m);
          return res;
        }
        unsigned i = 0;
        while (i < k && vals[i] == q - 1) vals[i++] = 1;
        if (i == k) break;
        ++vals[i];
      }
      // next combination of positions
      int i = static_cast<int>(k) - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == 21 - static_cast<int>(k) + i) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  res.exhausted = true;
  return res;
}

}  // namespace tropgrass::alg
