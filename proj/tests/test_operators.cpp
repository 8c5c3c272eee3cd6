#include <doctest.h>

#include <random>

#include "shiftedkeys/enumerate.hpp"
#include "shiftedkeys/operators.hpp"

using namespace shiftedkeys;

namespace {

Poly random_poly(std::mt19937& rng, int nvars, int maxdeg, int nterms, bool with_beta = true) {
    std::uniform_int_distribution<int> expd(0, maxdeg), betad(0, with_beta ? 2 : 0);
    std::uniform_int_distribution<long> cd(-6, 6);
    Poly p;
    for (int t = 0; t < nterms; ++t) {
        Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = expd(rng);
        p.add_term(e, BetaScalar::of(BigInt(cd(rng)), betad(rng)));
    }
    return p;
}

const std::vector<OperatorKind> all_kinds = {OperatorKind::DD,   OperatorKind::ISO,   OperatorKind::BAR,
                                             OperatorKind::DD_B, OperatorKind::ISO_B, OperatorKind::BAR_B};

} // namespace

TEST_CASE("single applications") {
    Poly x1 = Poly::variable(1), x2 = Poly::variable(2);
    CHECK(apply(OperatorKind::DD, 1, x1) == Poly::constant(BetaScalar(1)));
    CHECK(apply(OperatorKind::ISO, 1, x1) == x1 + x2);
    CHECK(apply(OperatorKind::ISO_B, 1, x1) == Poly::parse("x1 + x2 + b*x1*x2"));
    CHECK(apply(OperatorKind::BAR, 1, x1) == x2);
    CHECK(apply(OperatorKind::DD_B, 1, Poly::constant(BetaScalar(1))) ==
          Poly::constant(BetaScalar::of(BigInt(-1), 1)));
    CHECK(apply(OperatorKind::DD, 2, x1).is_zero());
    // constants are fixed by every isobaric word
    CHECK(apply_word(OperatorKind::ISO, {1, 2, 1, 3}, Poly::constant(BetaScalar(1))) ==
          Poly::constant(BetaScalar(1)));
}

TEST_CASE("key example under operator words") {
    Poly xlam = Poly::x_power({2, 1, 1, 0});
    Poly keypoly = apply_perm(OperatorKind::ISO, Permutation::parse("3142"), xlam);
    Poly expect = Poly::parse(
        "x1^2*x2*x3 + x1*x2^2*x3 + x1*x2*x3^2 + x1^2*x2*x4 + x1^2*x3*x4 + x1*x2^2*x4 + x1*x2*x3*x4 + "
        "x1*x3^2*x4");
    CHECK(keypoly == expect);
    Poly atompoly = apply_perm(OperatorKind::BAR, Permutation::parse("3142"), xlam);
    CHECK(atompoly == Poly::parse("x1*x3^2*x4 + x1*x2*x3*x4"));
}

TEST_CASE("quadratic relations") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 40; ++t) {
        Poly f = random_poly(rng, 4, 3, 5);
        for (int i = 1; i <= 3; ++i) {
            Poly dd = apply(OperatorKind::DD, i, f);
            CHECK(apply(OperatorKind::DD, i, dd).is_zero());
            Poly iso = apply(OperatorKind::ISO, i, f);
            CHECK(apply(OperatorKind::ISO, i, iso) == iso);
            Poly bar = apply(OperatorKind::BAR, i, f);
            CHECK(apply(OperatorKind::BAR, i, bar) == -bar);
            Poly ddb = apply(OperatorKind::DD_B, i, f);
            CHECK(apply(OperatorKind::DD_B, i, ddb) == ddb.scalar_mul(BetaScalar::of(BigInt(-1), 1)));
            Poly isob = apply(OperatorKind::ISO_B, i, f);
            CHECK(apply(OperatorKind::ISO_B, i, isob) == isob);
            Poly barb = apply(OperatorKind::BAR_B, i, f);
            CHECK(apply(OperatorKind::BAR_B, i, barb) == -barb);
        }
    }
}

TEST_CASE("braid relations") {
    std::mt19937 rng(55);
    for (int t = 0; t < 25; ++t) {
        Poly f = random_poly(rng, 6, 3, 4);
        for (OperatorKind k : all_kinds) {
            for (int i = 1; i <= 4; ++i) {
                CHECK(apply_word(k, {i, i + 1, i}, f) == apply_word(k, {i + 1, i, i + 1}, f));
                if (i + 2 <= 5) CHECK(apply_word(k, {i, i + 2}, f) == apply_word(k, {i + 2, i}, f));
            }
        }
    }
}

TEST_CASE("reduced word independence") {
    std::mt19937 rng(77);
    auto s5 = symmetric_group(5);
    std::uniform_int_distribution<std::size_t> pick(0, s5.size() - 1);
    for (int t = 0; t < 30; ++t) {
        const Permutation& w = s5[pick(rng)];
        // generate a second reduced word by random descent choices
        std::vector<int> alt;
        Permutation v = w;
        std::mt19937 rng2(rng());
        while (!v.is_identity()) {
            auto ds = v.descents();
            std::uniform_int_distribution<std::size_t> dpick(0, ds.size() - 1);
            int i = ds[dpick(rng2)];
            alt.push_back(i);
            v = v * Permutation::s(i);
        }
        std::reverse(alt.begin(), alt.end());
        Poly f = random_poly(rng, 5, 2, 4);
        for (OperatorKind k : all_kinds) CHECK(apply_word(k, w.reduced_word(), f) == apply_word(k, alt, f));
    }
}

TEST_CASE("five-way equivalence and factorization") {
    std::mt19937 rng(31);
    for (int t = 0; t < 40; ++t) {
        Poly f = random_poly(rng, 4, 3, 4);
        for (int i = 1; i <= 3; ++i) {
            bool fixed = f.swap_vars(i) == f;
            CHECK(fixed == apply(OperatorKind::DD, i, f).is_zero());
            CHECK(fixed == (apply(OperatorKind::ISO_B, i, f) == f));
            CHECK(fixed == apply(OperatorKind::BAR_B, i, f).is_zero());
            CHECK(fixed ==
                  (apply(OperatorKind::DD_B, i, f) == f.scalar_mul(BetaScalar::of(BigInt(-1), 1))));
        }
    }
    // pi^b_i(fg) = f pi^b_i(g) when s_i f = f
    for (int t = 0; t < 20; ++t) {
        Poly g = random_poly(rng, 4, 3, 4);
        Poly sym = random_poly(rng, 1, 2, 2); // in x1 only
        int i = 2 + (t % 2);                  // s_2 or s_3 fix x1-only polynomials
        CHECK(apply(OperatorKind::ISO_B, i, sym * g) == sym * apply(OperatorKind::ISO_B, i, g));
        CHECK(apply(OperatorKind::DD_B, i, sym * g) == sym * apply(OperatorKind::DD_B, i, g));
    }
}

TEST_CASE("symmetrize") {
    CHECK(symmetrize(OperatorKind::ISO, 2, Poly::variable(1)) == Poly::parse("x1 + x2"));
    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Poly f = random_poly(rng, 3, 3, 4);
        Poly g = symmetrize(OperatorKind::ISO, 3, f);
        for (int i = 1; i < 3; ++i) CHECK(g.swap_vars(i) == g);
        CHECK(symmetrize(OperatorKind::ISO, 3, g) == g);
        Poly gb = symmetrize(OperatorKind::ISO_B, 3, f);
        for (int i = 1; i < 3; ++i) CHECK(gb.swap_vars(i) == gb);
        // sweeps agree with a reduced word of the reverse permutation
        CHECK(g == apply_perm(OperatorKind::ISO, Permutation::reverse(3), f));
        CHECK(gb == apply_perm(OperatorKind::ISO_B, Permutation::reverse(3), f));
    }
}

TEST_CASE("truncation compatibility of symmetrization") {
    std::mt19937 rng(13);
    for (int t = 0; t < 15; ++t) {
        Poly f = random_poly(rng, 4, 3, 4);
        for (int n = 1; n <= 4; ++n) {
            Poly g = symmetrize(OperatorKind::ISO_B, n, f.truncate_vars(n));
            for (int m = 1; m <= n; ++m) {
                CHECK(g.truncate_vars(m) == symmetrize(OperatorKind::ISO_B, m, f.truncate_vars(m)));
            }
        }
    }
}
