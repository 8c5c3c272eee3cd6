#include <doctest.h>

#include <random>

#include "shiftedkeys/polyring.hpp"

using namespace shiftedkeys;

namespace {

Poly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms, bool with_beta = true,
                 const BigInt& coeff_scale = BigInt(10)) {
    std::uniform_int_distribution<int> expd(0, maxdeg), betad(0, with_beta ? 2 : 0);
    std::uniform_int_distribution<long> cd(-9, 9);
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = expd(rng);
        BigInt c = BigInt(cd(rng)) * coeff_scale;
        p.add_term(e, BetaScalar::of(c, betad(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("beta scalar ring") {
    BetaScalar a = BetaScalar(3) + BetaScalar::beta(2);
    BetaScalar b = BetaScalar::of(BigInt(-1), 1);
    CHECK((a * b).str() == "-3*b-b^3");
    CHECK((a - a).is_zero());
    CHECK(BetaScalar(6).exact_div(BigInt(3)) == BetaScalar(2));
    CHECK_THROWS_AS(BetaScalar(5).exact_div(BigInt(2)), InvariantError);
    CHECK(a.at_beta(BigInt(2)) == 7);
    CHECK(BetaScalar::beta().shifted(2) == BetaScalar::beta(3));
}

TEST_CASE("basic arithmetic identities") {
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2);
    CHECK((x1 + x2) * (x1 - x2) == Poly::parse("x1^2 - x2^2"));
    CHECK(oplus(x1, x1) == Poly::parse("2*x1 + b*x1^2"));
    CHECK(oplus(x1, Poly::zero()) == x1);
    CHECK(oplus(x1, x2).substitute_beta(0) == x1 + x2);
}

TEST_CASE("ring axioms on random polynomials with large coefficients") {
    std::mt19937 rng(12345);
    BigInt big = BigInt(1) << 64;
    for (int trial = 0; trial < 40; ++trial) {
        Poly a = random_poly(rng, 3, 4, 5, true, big);
        Poly b = random_poly(rng, 3, 4, 5, true, big + 17);
        Poly c = random_poly(rng, 3, 4, 5, true, BigInt(3));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("lex minimal term") {
    // left-to-right comparison after padding: (0,3) precedes (1,1)
    Poly f = Poly::parse("x2^3 + x1*x2");
    auto [e, c] = f.lex_min_term();
    CHECK(e == Exponents{0, 3});
    CHECK(c == BetaScalar(1));
    CHECK(Poly::parse("2*x1 + 2*x2").exact_div_int(BigInt(2)) == Poly::parse("x1 + x2"));
    CHECK_THROWS_AS(Poly::parse("2*x1 + x2").exact_div_int(BigInt(2)), InvariantError);

    // multiplicativity of the lex-min exponent over this integral domain
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Poly a = random_poly(rng, 3, 3, 4);
        Poly b = random_poly(rng, 3, 3, 4);
        if (a.is_zero() || b.is_zero() || (a * b).is_zero()) continue;
        CHECK((a * b).lex_min_term().first == exps_add(a.lex_min_term().first, b.lex_min_term().first));
    }
}

TEST_CASE("homogeneous parts and gradings") {
    Poly f = Poly::parse("x1^2 + b*x1*x2^2 + b^2*x1^2*x2^2 + x1*x2");
    CHECK(f.homogeneous_part(2, Grading::XDegree) == Poly::parse("x1^2 + x1*x2"));
    CHECK(f.homogeneous_part(2, Grading::XMinusBeta) ==
          Poly::parse("x1^2 + b*x1*x2^2 + b^2*x1^2*x2^2 + x1*x2"));
    CHECK(f.is_homogeneous(Grading::XMinusBeta));
    CHECK_FALSE(f.is_homogeneous(Grading::XDegree));
    CHECK(f.substitute_beta(0) == Poly::parse("x1^2 + x1*x2"));
}

TEST_CASE("truncation and variable swap") {
    Poly f = Poly::parse("x1*x3 + x1*x2 + x1^2");
    CHECK(f.truncate_vars(2) == Poly::parse("x1*x2 + x1^2"));
    CHECK(f.swap_vars(2) == Poly::parse("x1*x2 + x1*x3 + x1^2"));
    CHECK(Poly::parse("x1").swap_vars(1) == Poly::parse("x2"));
}

TEST_CASE("text and json round-trips are exact") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Poly f = random_poly(rng, 4, 5, 8, true, BigInt("123456789123456789"));
        CHECK(Poly::parse(f.to_text()) == f);
        CHECK(Poly::from_json(f.to_json()) == f);
    }
    CHECK(Poly::parse("0").is_zero());
    CHECK(Poly::zero().to_text() == "0");
    CHECK_THROWS_AS(Poly::parse("x1 + + x2"), ParseError);
    CHECK_THROWS_AS(Poly::parse("y1"), ParseError);
}

TEST_CASE("guard aborts runaway computations") {
    Guard saved = guard();
    Guard tight = saved;
    tight.max_terms = 10;
    set_guard(tight);
    Poly f = Poly::parse("x1 + x2 + x3 + 1");
    CHECK_THROWS_AS([&] {
        Poly g = f;
        for (int k = 0; k < 8; ++k) g = g * g;
        return g;
    }(), GuardError);
    set_guard(saved);
}
