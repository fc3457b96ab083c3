#include "bassinv/errors.hpp"
#include "bassinv/singularity.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bassinv;

namespace {

std::vector<RationalPolynomial> tjurina_generators(const RationalPolynomial& f) {
  std::vector<RationalPolynomial> gens = jacobian_ideal(f);
  gens.push_back(f);
  return gens;
}

// Lattice points (i,j,k) >= 1 with i/a + j/b + k/c <= 1.
std::size_t brieskorn_genus(int a, int b, int c) {
  std::size_t count = 0;
  for (int i = 1; i < a; ++i) {
    for (int j = 1; j < b; ++j) {
      for (int k = 1; k < c; ++k) {
        if (i * b * c + j * a * c + k * a * b <= a * b * c) ++count;
      }
    }
  }
  return count;
}

std::string brieskorn(int a, int b, int c) {
  return "x^" + std::to_string(a) + "+y^" + std::to_string(b) + "+z^" + std::to_string(c);
}

}  // namespace

TEST_CASE("Brieskorn-Pham: mu = (a-1)(b-1)(c-1), tau = mu, p_g by lattice points") {
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      for (int c = 2; c <= 6; ++c) {
        const SingularityProfile p = analyze(parse_polynomial(brieskorn(a, b, c)));
        const auto expected = static_cast<std::size_t>(oracle::brieskorn_milnor(a, b, c));
        CHECK(p.milnor == expected);
        CHECK(p.tjurina == expected);
        REQUIRE(p.geometric_genus);
        CHECK_MESSAGE(*p.geometric_genus == brieskorn_genus(a, b, c), brieskorn(a, b, c));
      }
    }
  }
}

TEST_CASE("corpus invariants match the mod-p local length oracle") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.polynomial);
    const RationalPolynomial f = parse_polynomial(entry.polynomial);
    const SingularityProfile p = analyze(f);
    CHECK(p.milnor == entry.milnor);
    CHECK(p.tjurina == entry.tjurina);
    CHECK(p.weights.has_value() == entry.quasi_homogeneous);
    CHECK(oracle::local_length(jacobian_ideal(f), 3) == entry.milnor);
    CHECK(oracle::local_length(tjurina_generators(f), 3) == entry.tjurina);
    CHECK(p.tjurina <= p.milnor);
    if (entry.quasi_homogeneous) CHECK(p.tjurina == p.milnor);
  }
}

TEST_CASE("Tjurina numbers of the x^10 family") {
  const RationalPolynomial family = parse_polynomial("z^2+y^3+x^10+t*x^7*y", {"x", "y", "z"}, "t");
  CHECK(tjurina_number(substitute_parameter(family, Rational(0))) == 18);
  for (const Rational& a : {Rational(1), Rational(2), Rational(1) / 2, Rational(-3), Rational(7) / 5}) {
    const RationalPolynomial f = substitute_parameter(family, a);
    CHECK(tjurina_number(f) == 16);
    CHECK(milnor_number(f) == 18);
    const SingularityProfile p = analyze(f);
    CHECK(p.milnor_localized);
    CHECK_FALSE(p.weights);
    CHECK_FALSE(p.geometric_genus);
  }
}

TEST_CASE("the Jacobian ideal of the deformed fiber has a second zero") {
  const RationalPolynomial f = parse_polynomial("z^2+y^3+x^10+x^7*y");
  const auto jacobian = buchberger(jacobian_ideal(f), MonomialOrder::grevlex());
  REQUIRE(quotient_dimension(jacobian));
  CHECK(*quotient_dimension(jacobian) == 19);
  CHECK_FALSE(supported_only_at_origin(jacobian));
  CHECK(local_length_at_origin(jacobian) == 18);
}

TEST_CASE("profile of x^10+y^3+z^2") {
  const SingularityProfile p = analyze(parse_polynomial("z^2+y^3+x^10"));
  CHECK(p.status == SingularityProfile::Status::IsolatedAtOrigin);
  CHECK(p.milnor == 18);
  CHECK(p.tjurina == 18);
  CHECK_FALSE(p.milnor_localized);
  REQUIRE(p.weights);
  CHECK(to_string(*p.weights) == "(3,10,15)/30");
  CHECK(p.geometric_genus == 1u);
  CHECK(p.genus_cutoff == 2);
  CHECK(p.torsion_omega2_length == 18);
  CHECK(p.omega3_length == 18);

  AnalyzeOptions lex;
  lex.order = MonomialOrder::lex();
  const SingularityProfile q = analyze(parse_polynomial("z^2+y^3+x^10"), lex);
  CHECK(q.milnor == 18);
  CHECK(q.geometric_genus == 1u);
}

TEST_CASE("geometric genus of cones over plane curves") {
  CHECK(analyze(parse_polynomial("x^3+y^3+z^3")).geometric_genus == 1u);
  CHECK(analyze(parse_polynomial("x^4+y^4+z^4")).geometric_genus == 4u);
  CHECK(analyze(parse_polynomial("x^5+y^5+z^5")).geometric_genus == 10u);
  CHECK(analyze(parse_polynomial("x^3+y^5+z^2")).geometric_genus == 0u);

  AnalyzeOptions wider;
  wider.genus_cutoff = 34;
  CHECK(analyze(parse_polynomial("z^2+y^3+x^10"), wider).geometric_genus == 18u);
}

TEST_CASE("invariants do not change under scaling or permuting variables") {
  for (const auto& entry : corpus()) {
    CAPTURE(entry.polynomial);
    const RationalPolynomial f = parse_polynomial(entry.polynomial);
    const SingularityProfile base = analyze(f);
    const SingularityProfile scaled = analyze(Rational(-3, 2) * f);
    CHECK(scaled.milnor == base.milnor);
    CHECK(scaled.tjurina == base.tjurina);
    CHECK(scaled.geometric_genus == base.geometric_genus);

    // x -> y -> z -> x
    std::string text = entry.polynomial;
    for (char& ch : text) {
      if (ch == 'x') ch = 'y';
      else if (ch == 'y') ch = 'z';
      else if (ch == 'z') ch = 'x';
    }
    const SingularityProfile permuted = analyze(parse_polynomial(text));
    CHECK(permuted.milnor == base.milnor);
    CHECK(permuted.tjurina == base.tjurina);
    CHECK(permuted.geometric_genus == base.geometric_genus);
  }
}

TEST_CASE("degenerate inputs") {
  const SingularityProfile smooth = analyze(parse_polynomial("x"));
  CHECK(smooth.smooth());
  CHECK(smooth.milnor == 0);
  CHECK(smooth.tjurina == 0);
  CHECK(analyze(parse_polynomial("x^2+y^2+z^2+1")).smooth());
  CHECK_THROWS_AS(tjurina_number(parse_polynomial("x")), SmoothPoint);

  CHECK_THROWS_AS(analyze(parse_polynomial("x*y")), NotIsolated);
  CHECK_THROWS_AS(analyze(parse_polynomial("x^2+y^2")), NotIsolated);
  CHECK_THROWS_AS(analyze(parse_polynomial("(x-1)^2+y^2+z^2")), SingularLocusNotAtOrigin);
  CHECK_THROWS_AS(analyze(parse_polynomial("x^2*(x-1)^2+y^2+z^2")), SingularLocusNotAtOrigin);

  const RationalPolynomial family = parse_polynomial("x^2+y^2+z^2+t*x", {"x", "y", "z"}, "t");
  CHECK_THROWS_AS(analyze(family), PreconditionViolation);
  CHECK_THROWS_AS(geometric_genus_qh(parse_polynomial("x^2+x^3+y^2+z^2"), *find_weights(parse_polynomial("x^2+y^2+z^2"))),
                  NotQuasiHomogeneous);

  for (int run = 0; run < 3; ++run) {
    CHECK_THROWS_AS(analyze(parse_polynomial("x*y")), NotIsolated);
    CHECK(analyze(parse_polynomial("x")).smooth());
  }
}
