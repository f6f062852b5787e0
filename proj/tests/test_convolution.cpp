#include <doctest.h>

#include "convsum/convolution.hpp"
#include "convsum/errors.hpp"
#include "convsum/serialize.hpp"
#include "oracles.hpp"

using namespace convsum;

namespace {

BigRational q(const char* s) { return BigRational::parse(s); }

// Direct double loop over l, straight from the definition.
std::int64_t naive_W(std::int64_t a, std::int64_t b, std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t l = 1; a * l < n; ++l)
    if ((n - a * l) % b == 0) s += oracle::sigma(1, l) * oracle::sigma(1, (n - a * l) / b);
  return s;
}

}  // namespace

TEST_CASE("brute-force W") {
  CHECK(brute_force_W(1, 1, 2) == 1);
  CHECK(brute_force_W(1, 1, 3) == 6);
  CHECK(brute_force_W(2, 7, 9) == 1);
  CHECK(brute_force_W(2, 7, 8) == 0);
  CHECK(brute_force_W(2, 7, 0) == 0);
  SigmaTable t(1, 500);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {2, 7}, {1, 22}, {3, 8}, {2, 13}})
    for (std::int64_t n = 1; n <= 300; n += 7) {
      CHECK(brute_force_W(a, b, n) == naive_W(a, b, n));
      CHECK(brute_force_W(a, b, n, t) == naive_W(a, b, n));
      CHECK(brute_force_W(a, b, n) == brute_force_W(b, a, n));
    }
  CHECK(brute_force_W_at(2, 7, 18, 2, t) == brute_force_W(2, 7, 9));
  CHECK(brute_force_W_at(2, 7, 19, 2, t) == 0);
}

TEST_CASE("extraction identity holds coefficientwise") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {2, 7}, {1, 22}, {2, 11}, {1, 26}, {2, 13}, {3, 5}}) {
    CAPTURE(a);
    CAPTURE(b);
    const QSeries s = target_series(a, b, 300);
    CHECK(s[0] == BigRational((a - b) * (a - b)));
    for (std::int64_t n = 1; n <= 300; ++n)
      REQUIRE(s[n] == BigRational(extraction_identity_rhs(a, b, n, naive_W(a, b, n))));
  }
  CHECK_THROWS_AS(target_series(2, 4, 10), InvalidArgument);
}

TEST_CASE("derived formula for (2,7)") {
  const Basis basis = build_basis(14, registered_cusp_quotients(14), 200);
  const ConvolutionFormula f = derive_convolution_formula(2, 7, basis);
  CHECK(f.level == 14);
  CHECK(f.sigma3_terms.at(1) == q("1/600"));
  CHECK(f.sigma3_terms.at(14) == q("49/150"));
  CHECK(f.sigma_terms.at(2) == std::pair{q("1/24"), q("-1/28")});
  CHECK(f.sigma_terms.at(7) == std::pair{q("1/24"), q("-1/8")});
  CHECK_FALSE(f.sigma_terms.contains(1));
  REQUIRE(f.cusp_terms.size() == 4);
  CHECK(f.cusp_terms[1] == std::pair{std::string("A2"), q("-1/4200")});

  const auto cusps = basis.cusp_series();
  CHECK(evaluate_formula(f, 9, cusps) == BigRational(1));
  CHECK(evaluate_formula(f, 8, cusps) == BigRational(0));
  CHECK(evaluate_formula(f, 1, cusps) == BigRational(0));
  CHECK_THROWS_AS(evaluate_formula(f, 201, cusps), TruncationExceeded);

  const VerificationReport r = verify_formula(f, 200, cusps);
  CHECK(r.ok());
  CHECK(r.checked == 200);

  ConvolutionFormula bad = f;
  bad.sigma3_terms[1] = q("1/601");
  CHECK_FALSE(verify_formula(bad, 50, cusps).ok());

  CHECK(formula_from_json(formula_to_json(f)).sigma3_terms == f.sigma3_terms);
  CHECK(formula_to_json(formula_from_json(formula_to_json(f))) == formula_to_json(f));
}

TEST_CASE("derivation rejects invalid pairs") {
  const Basis basis = build_basis(14, registered_cusp_quotients(14), 100);
  CHECK_THROWS_AS(derive_convolution_formula(7, 2, basis), InvalidArgument);
  const Basis b8 = build_basis(8, select_cusp_quotients(8, 9, 100), 100);
  CHECK_THROWS_AS(derive_convolution_formula(2, 4, b8), InvalidArgument);
  // (1,14) shares the level-14 basis.
  CHECK(verify_formula(derive_convolution_formula(1, 14, basis), 100, basis.cusp_series()).ok());
  CHECK_THROWS_AS(derive_convolution_formula(2, 11, basis), InvalidArgument);
}

TEST_CASE("derivation generalizes to levels outside the registry") {
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}}) {
    CAPTURE(a);
    CAPTURE(b);
    const int level = a * b;
    const Basis basis = build_basis(level, select_cusp_quotients(level, 9, 200), 200);
    const ConvolutionFormula f = derive_convolution_formula(a, b, basis);
    CHECK(verify_formula(f, 200, basis.cusp_series()).ok());
  }
  // Known closed form: W_(1,2)(n) = sigma3(n)/12 + sigma3(n/2)/3 + (1/24 - n/8) sigma(n) + (1/24 - n/4) sigma(n/2).
  const Basis b2 = build_basis(2, select_cusp_quotients(2, 9, 100), 100);
  const ConvolutionFormula f = derive_convolution_formula(1, 2, b2);
  CHECK(f.sigma3_terms.at(1) == q("1/12"));
  CHECK(f.sigma3_terms.at(2) == q("1/3"));
  CHECK(f.sigma_terms.at(1) == std::pair{q("1/24"), q("-1/8")});
  CHECK(f.sigma_terms.at(2) == std::pair{q("1/24"), q("-1/4")});
  CHECK(f.cusp_terms.empty());
}
