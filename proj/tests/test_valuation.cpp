#include <doctest.h>

#include <set>

#include "tropgrass/exactalg/valuation.hpp"

using namespace tropgrass;
using namespace tropgrass::alg;

namespace {

const std::set<std::string> kLines{"124", "235", "346", "457", "156", "267", "137"};

}  // namespace

TEST_CASE("GF(4) is a field") {
  auto F = ResidueField::gf2k(2, 0b111);
  CHECK(F.size() == 4);
  CHECK(F.characteristic() == 2);
  for (long a = 0; a < 4; ++a) {
    CHECK(F.add(a, a) == 0);
    bool has_inverse = a == 0;
    for (long b = 0; b < 4; ++b) {
      if (F.mul(a, b) == 1) has_inverse = true;
      for (long c = 0; c < 4; ++c)
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    }
    CHECK(has_inverse);
  }
  // a^2 = a + 1 for the generator a = 0b10
  CHECK(F.mul(2, 2) == 3);
}

TEST_CASE("t-adic valuations") {
  ResidueField Q;
  UPoly p({0, 0, 3, 1}, Q);
  CHECK(p.valuation() == 2u);
  CHECK_FALSE(UPoly({}, Q).valuation().has_value());
  UPoly one = UPoly::constant(1, Q);
  CHECK((p * one).coeffs() == p.coeffs());
  CHECK((p - p).is_zero());
  ResidueField F2{Field(2)};
  UPoly a({1, 1}, F2);
  CHECK((a * a).coeffs() == std::vector<Rational>{1, 0, 1});  // (1+t)^2 = 1+t^2
}

TEST_CASE("valuations of minors of a monomial matrix") {
  // rows (1, t, t^2) and (t, 1, t^3)
  ResidueField Q;
  TPolyMatrix m(2, 3, Q);
  m.set(0, 0, UPoly({1}, Q));
  m.set(0, 1, UPoly({0, 1}, Q));
  m.set(0, 2, UPoly({0, 0, 1}, Q));
  m.set(1, 0, UPoly({0, 1}, Q));
  m.set(1, 1, UPoly({1}, Q));
  m.set(1, 2, UPoly({0, 0, 0, 1}, Q));
  auto v = plucker_valuations(m);
  CHECK(v.at(make_subset({1, 2})) == ExtReal(0L));  // 1 - t^2
  CHECK(v.at(make_subset({1, 3})).is_infinite());   // t^3 - t^2 * t
  CHECK(v.at(make_subset({2, 3})) == ExtReal(2L));  // t^4 - t^2
}

TEST_CASE("Fano vector and matrix") {
  auto w = fano_vector();
  for (Subset s : k_subsets(7, 3))
    CHECK(w.at(s) == ExtReal(kLines.count(subset_name(s, 7)) ? 1L : 0L));

  // alpha^i in GF(8) with alpha^3 = alpha + 1, as bit vectors
  std::vector<unsigned> col(7);
  unsigned x = 1;
  for (int i = 0; i < 7; ++i) {
    col[i] = x;
    x <<= 1;
    if (x & 8) x ^= 0b1011;
  }
  auto A = fano_matrix();
  for (int i = 0; i < 7; ++i) {
    unsigned bits = 0;
    for (int r = 0; r < 3; ++r)
      if (!A(r, i).is_zero()) bits |= 1u << r;
    CHECK(bits == col[i]);
  }
  auto v = plucker_valuations(A);
  for (Subset s : k_subsets(7, 3)) {
    auto e = elements(s);
    bool dependent = (col[e[0] - 1] ^ col[e[1] - 1] ^ col[e[2] - 1]) == 0;
    CHECK(dependent == (kLines.count(subset_name(s, 7)) == 1));
    CHECK(v.at(s).is_infinite() == dependent);
  }
}

TEST_CASE("small perturbations over GF(2) do not work") {
  auto r = find_fano_perturbation(ResidueField(Field(2)), 2);
  CHECK_FALSE(r.matrix.has_value());
  CHECK(r.exhausted);
}
