#include <doctest.h>

#include "oracles.hpp"
#include "tropgrass/rational.hpp"
#include "tropgrass/subsets.hpp"

using namespace tropgrass;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2.5") == Rational(5, 2));
  CHECK(parse_rational("-0.125") == Rational(-1, 8));
  CHECK(to_string(oracle::q(6, 4)) == "3/2");
  CHECK(to_string(oracle::q(-4, 2)) == "-2");
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("extended reals") {
  ExtReal inf = ExtReal::infinity();
  CHECK(inf > ExtReal(1000000L));
  CHECK((inf + ExtReal(3L)).is_infinite());
  CHECK(trop_min(inf, ExtReal(-2L)) == ExtReal(-2L));
  CHECK(trop_min(ExtReal(1L), ExtReal(4L)) == ExtReal(1L));
  CHECK(parse_ext_real("inf").is_infinite());
  CHECK(to_string(parse_ext_real("-5/3")) == "-5/3");
  CHECK_THROWS_AS(inf.value(), std::domain_error);
}

TEST_CASE("k-subsets are lexicographic and ranked") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      auto subs = k_subsets(n, k);
      CHECK(Integer(static_cast<long>(subs.size())) == oracle::binom(n, k));
      CHECK(binomial(n, k) == static_cast<long long>(subs.size()));
      for (std::size_t i = 0; i < subs.size(); ++i) {
        CHECK(subset_size(subs[i]) == k);
        CHECK(subset_rank(subs[i], n) == i);
        if (i) CHECK(elements(subs[i - 1]) < elements(subs[i]));
      }
    }
  auto s = k_subsets(5, 2);
  CHECK(subset_name(s.front(), 5) == "12");
  CHECK(subset_name(s.back(), 5) == "45");
}

TEST_CASE("subset names") {
  CHECK(parse_subset("135", 6) == make_subset({1, 3, 5}));
  CHECK(subset_name(make_subset({1, 10, 12}), 12) == "1,10,12");
  CHECK(parse_subset("1,10,12", 12) == make_subset({1, 10, 12}));
  CHECK_THROWS(parse_subset("17", 6));
  CHECK(elements(full_set(4)) == std::vector<int>{1, 2, 3, 4});
}
