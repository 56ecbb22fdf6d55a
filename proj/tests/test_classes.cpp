#include <random>

#include "barbell/classes.hpp"
#include "barbell/serialize.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace barbell;

namespace {

GClass G(std::int64_t p, std::int64_t q, long c = 1) { return GClass::generator(p, q, c); }

GClass from_poly(const LaurentPoly2& x) {
  GClass out;
  for (const auto& [e, c] : x.terms()) out.add_term(e[0], e[1], c);
  return out;
}

}  // namespace

TEST_CASE("primitive shorthands") {
  CHECK(gstar(3, 1) == G(3, 2, -1));
  CHECK(gstar(4, 0) == G(4, 4, -1));
  CHECK(e(2, 3) == G(-3, 2, -1) + G(2, -3));
  CHECK(d(2, 3) == G(3, -2, -1) + G(-3, 2) - G(2, -3) + G(-2, 3));
  CHECK(d(2, 3) == -d(-2, -3));
  CHECK((G(1, 2) - G(1, 2)).is_zero());
}

TEST_CASE("roman forms") {
  CHECK(roman(RomanForm::I, 3, 2) == d(3, -2));
  CHECK(roman(RomanForm::IIb, 1, 3) == d(-3, 1) - d(-2, -1));
  CHECK(roman(RomanForm::IIr, 2, 5) == d(2, -5) - d(-3, 5));
  CHECK(parse_roman("IIbe") == RomanForm::IIbe);
  CHECK(roman_name(RomanForm::IIre) == "IIre");
  CHECK_THROWS_AS(parse_roman("III"), ValidationError);
}

TEST_CASE("closed form small values") {
  // p + q >= k: (k-p-1) IIb + (k-q-1) IIr + (p+q+1-k) I
  CHECK(f_closed(5, 4, 3) == roman(RomanForm::IIr, 4, 3) + roman(RomanForm::I, 4, 3).scaled(3));
  // p + q < k: p IIre + q IIbe
  CHECK(f_closed(5, 1, 2) == roman(RomanForm::IIre, 1, 2) + roman(RomanForm::IIbe, 1, 2).scaled(2));
  CHECK_THROWS_AS(f_closed(1, 1, 1), ValidationError);
  CHECK_THROWS_AS(f_closed(5, 0, 1), ValidationError);
  CHECK_THROWS_AS(f_closed(5, 1, 5), ValidationError);
  CHECK_THROWS_AS(f_level(5, 5, 1, 1), ValidationError);
}

TEST_CASE("levels sum to the closed form") {
  for (std::int64_t k = 2; k <= 12; ++k)
    for (std::int64_t p = 1; p < k; ++p)
      for (std::int64_t q = 1; q < k; ++q) {
        GClass sum;
        for (std::int64_t L = 1; L < k; ++L) sum += f_level(k, L, p, q);
        CHECK(sum == f_closed(k, p, q));
      }
}

TEST_CASE("matrix skew symmetry and vanishing sum") {
  for (std::int64_t k = 2; k <= 12; ++k) {
    const auto m = f_matrix(k);
    const std::size_t side = static_cast<std::size_t>(k - 1);
    GClass total;
    for (std::size_t p = 0; p < side; ++p)
      for (std::size_t q = 0; q < side; ++q) {
        CHECK((m[p * side + q] + m[q * side + p]).is_zero());
        total += m[p * side + q];
      }
    CHECK(total.is_zero());
  }
}

TEST_CASE("twist combinations") {
  const std::int64_t k = 6;
  const std::vector<Int> ones(5, 1);
  CHECK(twist_class(k, ones, ones).is_zero());
  std::vector<Int> ek1(5), ek2(5);
  ek1[4] = 1;
  ek2[3] = 1;
  CHECK(twist_class(k, ek1, ek2) == delta(k));
  GClass row;
  for (std::int64_t q = 1; q < k; ++q) row += f_closed(k, k - 1, q);
  CHECK(twist_class(k, ek1, ones) == row);
  CHECK_THROWS_AS(twist_class(k, ones, std::vector<Int>(4, 1)), ValidationError);
}

TEST_CASE("delta written out") {
  const GClass d4 = G(2, 3, 3) - G(3, 2, 3) + G(-3, -2, 3) - G(-2, -3, 3) + G(2, -1) - G(-2, 1) + G(1, -2) - G(-1, 2);
  CHECK(delta(4) == d4);
  CHECK(delta_expansion(4) == d4);
  CHECK(delta(4).size() == 8);
  for (std::int64_t k = 3; k <= 16; ++k) CHECK(delta(k) == delta_expansion(k));
  CHECK_THROWS_AS(delta(2), ValidationError);
  CHECK(to_string(G(2, 3, 3) - G(1, 0)) == "-G(1,0) + 3*G(2,3)");
}

TEST_CASE("delta_3 dies in the hexagon quotient, delta_4 does not") {
  CHECK_FALSE(delta(3).is_zero());
  CHECK(hex_normal_form(w3(delta(3), 3)).is_zero());
  CHECK_FALSE(hex_normal_form(w3(delta(4), 3)).is_zero());
}

TEST_CASE("hexagon combination and symmetric-G relation after w3") {
  for (std::int64_t p = -6; p <= 6; ++p)
    for (std::int64_t q = -6; q <= 6; ++q) {
      const GClass comb = G(p, q) + G(p, p - q) - G(q, p) - G(q, q - p);
      CHECK(hex_normal_form(w3(comb, 3)).is_zero());
      for (int n : {3, 4}) CHECK(hex_normal_form(w3(from_poly(oracle::k_relator(p, q, n)), n)).is_zero());
      const GClass sym = -gstar(-q, p) + gstar(p, -q);
      CHECK(hex_normal_form(w3(e(p, q) - sym, 3)).is_zero());
    }
}

TEST_CASE("independence rank matches the global quotient rank") {
  std::vector<GClass> ds;
  for (std::int64_t k = 4; k <= 12; ++k) ds.push_back(delta(k));
  const auto report = independence_rank(ds, 3);
  CHECK(report.rank == 9);
  CHECK(report.rank == oracle::quotient_rank(ds, 3));
  CHECK(report.certificate.rows() == ds.size());
  const std::vector<GClass> first5(ds.begin(), ds.begin() + 5);
  CHECK(independence_rank(first5, 3).rank == 5);
  CHECK(oracle::quotient_rank(first5, 3) == 5);
}

TEST_CASE("independence rank on dependent and random inputs") {
  CHECK(independence_rank({delta(4), delta(4).scaled(2), delta(5)}, 3).rank == 2);
  CHECK(independence_rank({delta(3)}, 3).rank == 0);
  CHECK_THROWS_AS(independence_rank({}, 3), ValidationError);
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> e(-4, 4), c(-2, 2), len(1, 4), cnt(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<GClass> xs;
    for (int i = cnt(rng); i > 0; --i) {
      GClass x;
      for (int j = len(rng); j > 0; --j) x.add_term(e(rng), e(rng), c(rng));
      xs.push_back(x);
    }
    for (int n : {3, 4}) CHECK(independence_rank(xs, n).rank == oracle::quotient_rank(xs, n));
  }
}

TEST_CASE("first-index projection") {
  for (std::int64_t n = 4; n <= 9; ++n) {
    for (std::int64_t m = 3; m < n; ++m) CHECK(project_first_index(delta(m), n - 1).is_zero());
    CHECK_FALSE(project_first_index(delta(n), n - 1).is_zero());
  }
}

TEST_CASE("class json round trip") {
  std::mt19937_64 rng(62);
  for (std::int64_t k = 3; k <= 20; ++k) CHECK(decode<GClass>(encode(delta(k))) == delta(k));
  const GClass big = G(1, 2, 1).scaled(parse_decimal("-98765432109876543210"));
  CHECK(decode_text<GClass>(encode(big).dump()) == big);
  CHECK_THROWS_AS(decode_text<GClass>(R"({"terms":[{"p":1,"c":"2"}]})"), ValidationError);
}
