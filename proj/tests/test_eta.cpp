#include <doctest.h>

#include <algorithm>

#include "convsum/errors.hpp"
#include "convsum/eta.hpp"
#include "convsum/modforms.hpp"
#include "oracles.hpp"

using namespace convsum;

namespace {

std::vector<std::pair<int, int>> pairs(const EtaQuotient& f) {
  return {f.exponents().begin(), f.exponents().end()};
}

bool contains(const std::vector<EtaQuotient>& v, const EtaQuotient& f) {
  return std::find(v.begin(), v.end(), f) != v.end();
}

}  // namespace

TEST_CASE("pentagonal expansion of the Euler product") {
  const QSeries f = euler_F(12);
  const std::vector<std::int64_t> head{1, -1, -1, 0, 0, 1, 0, 1};
  for (std::size_t n = 0; n < head.size(); ++n) CHECK(f[n] == BigRational(head[n]));
  CHECK(f[12] == BigRational(-1));
  CHECK(euler_F(400) == QSeries(oracle::euler_product(400)));
}

TEST_CASE("parse and print") {
  const EtaQuotient a1 = EtaQuotient::parse(14, "1:5,2:-1,7:5,14:-1");
  CHECK(a1.to_string() == "1:5,2:-1,7:5,14:-1");
  CHECK(a1.exponent(7) == 5);
  CHECK(a1.exponent(3) == 0);
  CHECK(a1.weighted_sum() == 24);
  CHECK(a1.exponent_sum() == 8);
  CHECK(EtaQuotient::parse(14, "2:0,1:4,7:4").exponent_vector() == std::vector<int>{4, 0, 4, 0});
  CHECK_THROWS_AS(EtaQuotient::parse(14, "3:4"), InvalidArgument);
  CHECK_THROWS_AS(EtaQuotient::parse(14, "1:0"), InvalidArgument);
  CHECK_THROWS_AS(EtaQuotient::parse(14, "1:x"), InvalidArgument);
}

TEST_CASE("Newman-Ligozat conditions") {
  // Delta = eta^24 at level 1.
  const LigozatReport delta = check_ligozat(EtaQuotient(1, {{1, 24}}));
  CHECK(delta.is_cusp_form());
  CHECK(delta.weight == BigRational(12));

  const LigozatReport eta1 = check_ligozat(EtaQuotient(1, {{1, 1}}));
  CHECK_FALSE(eta1.cond_i);
  CHECK_FALSE(eta1.is_modular_form());

  const LigozatReport a1 = check_ligozat(find_registered_quotient("A1")->eta);
  CHECK(a1.is_cusp_form());
  CHECK(a1.weight == BigRational(4));
  CHECK(a1.orders.at(1) == BigRational(5) - BigRational::parse("1/2") + BigRational::parse("5/7") -
                               BigRational::parse("1/14"));

  // (iii): 2^8 is a square, 2^9 is not.
  CHECK(check_ligozat(EtaQuotient(2, {{1, 8}, {2, 8}})).cond_iii);
  CHECK_FALSE(check_ligozat(EtaQuotient(2, {{1, 7}, {2, 9}})).cond_iii);
}

TEST_CASE("registered quotients: A and C are cusp forms, B6 and B7 only modular") {
  for (int level : {14, 22, 26}) {
    for (const auto& q : registered_cusp_quotients(level)) {
      CAPTURE(q.label);
      const LigozatReport r = check_ligozat(q.eta);
      CHECK(r.is_modular_form());
      CHECK(r.weight == BigRational(4));
      const bool edge = q.label == "B6" || q.label == "B7";
      CHECK(r.is_cusp_form() == !edge);
      if (edge) CHECK(r.orders.at(1).is_zero());
    }
  }
  CHECK(registered_cusp_quotients(14).size() == 4);
  CHECK(registered_cusp_quotients(22).size() == 7);
  CHECK(registered_cusp_quotients(26).size() == 9);
  CHECK(registered_cusp_quotients(15).empty());
  CHECK_FALSE(find_registered_quotient("Z9").has_value());
}

TEST_CASE("expansion: leading terms and the raw-product oracle") {
  const QSeries a2 = expand_eta_quotient(find_registered_quotient("A2")->eta, 10);
  CHECK(a2.order() == 2);
  CHECK(a2[2] == BigRational(1));
  CHECK(expand_eta_quotient(find_registered_quotient("A1")->eta, 5).order() == 1);
  CHECK(expand_eta_quotient(find_registered_quotient("A3")->eta, 5).order() == 3);
  CHECK(expand_eta_quotient(find_registered_quotient("B2")->eta, 5).order() == 2);

  for (const char* label : {"A1", "A4", "B7", "C5", "C9"}) {
    CAPTURE(label);
    const EtaQuotient f = find_registered_quotient(label)->eta;
    CHECK(expand_eta_quotient(f, 120) == QSeries(oracle::eta_quotient(pairs(f), 120)));
  }
  // Delta: tau(2) = -24, tau(3) = 252.
  const QSeries d = expand_eta_quotient(EtaQuotient(1, {{1, 24}}), 3);
  CHECK(d[2] == BigRational(-24));
  CHECK(d[3] == BigRational(252));
}

TEST_CASE("expansion errors") {
  CHECK_THROWS_AS(expand_eta_quotient(EtaQuotient(1, {{1, 1}}), 10), FractionalLeadingExponent);
  CHECK_THROWS_AS(leading_exponent(EtaQuotient(2, {{1, 4}, {2, 2}})), FractionalLeadingExponent);
  CHECK_THROWS_AS(expand_eta_quotient(EtaQuotient(1, {{1, -24}}), 10), NegativeLeadingExponent);
}

TEST_CASE("expansion is multiplicative in the exponents") {
  const EtaQuotient a = find_registered_quotient("A1")->eta;
  const EtaQuotient b = find_registered_quotient("A4")->eta;
  const EtaQuotient ab = combine(a, b);
  CHECK(ab.exponent(1) == 11);
  CHECK(expand_eta_quotient(ab, 150) == expand_eta_quotient(a, 150) * expand_eta_quotient(b, 150));
  const EtaQuotient c = EtaQuotient(26, {{1, 2}, {13, -1}, {26, 1}});
  const EtaQuotient cc = find_registered_quotient("C2")->eta;
  CHECK(expand_eta_quotient(combine(cc, EtaQuotient(26, {{1, 24}})), 80) ==
        expand_eta_quotient(cc, 80) * expand_eta_quotient(EtaQuotient(1, {{1, 24}}), 80));
  CHECK(c.level() == 26);
}

TEST_CASE("search") {
  CHECK(search_eta_quotients(1, 4, 9).empty());
  CHECK(search_eta_quotients(14, 3, 9).empty());

  const auto s14 = search_eta_quotients(14, 4, 9);
  for (const auto& q : registered_cusp_quotients(14)) CHECK(contains(s14, q.eta));

  const auto s26 = search_eta_quotients(26, 4, 9);
  for (const auto& q : registered_cusp_quotients(26)) {
    CAPTURE(q.label);
    CHECK(contains(s26, q.eta));
  }

  const auto s22 = search_eta_quotients(22, 4, 9);
  CHECK_FALSE(contains(s22, find_registered_quotient("B6")->eta));
  for (const char* l : {"B1", "B2", "B3", "B4", "B5"}) CHECK(contains(s22, find_registered_quotient(l)->eta));

  for (const auto* s : {&s14, &s22, &s26}) {
    for (std::size_t i = 0; i < s->size(); ++i) {
      const EtaQuotient& q = (*s)[i];
      CHECK(check_ligozat(q).is_cusp_form());
      const QSeries e = expand_eta_quotient(q, 30);
      CHECK(e[0].is_zero());
      CHECK(e[e.order()] == BigRational(1));
      if (i > 0) CHECK((*s)[i - 1].exponent_vector() < q.exponent_vector());
      for (int r : q.exponent_vector()) CHECK(std::abs(r) <= 9);
    }
  }
}

TEST_CASE("search with a small bound is a subset") {
  const auto wide = search_eta_quotients(14, 4, 9);
  for (const auto& q : search_eta_quotients(14, 4, 4)) CHECK(contains(wide, q));
}
