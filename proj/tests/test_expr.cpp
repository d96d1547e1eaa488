#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drmat/ratexpr.hpp"

#include <cmath>
#include <random>

using namespace drmat;

namespace {

RatExpr L(int k) { return RatExpr::l(k); }
RatExpr G() { return RatExpr::g(); }

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> numer(-10000, 10000);
    std::uniform_int_distribution<long> denom(1, 100);
    return Rational(numer(rng), denom(rng));
}

// random small expression in l1..l3, g
RatExpr random_expr(std::mt19937_64& rng, int depth = 3)
{
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
    switch (pick(rng)) {
    case 0: {
        std::uniform_int_distribution<long> c(-9, 9);
        return RatExpr(c(rng));
    }
    case 1: {
        std::uniform_int_distribution<int> v(0, 3);
        int k = v(rng);
        return k == 0 ? G() : L(k);
    }
    case 2: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 3: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
    default: {
        RatExpr d = random_expr(rng, depth - 1);
        if (d.is_zero()) return random_expr(rng, depth - 1);
        return random_expr(rng, depth - 1) / d;
    }
    }
}

Rational eval3(const RatExpr& e, std::mt19937_64& rng)
{
    for (int attempt = 0; attempt < 50; ++attempt) {
        std::vector<Rational> lv{random_rational(rng), random_rational(rng),
                                 random_rational(rng)};
        Rational gv = random_rational(rng);
        try {
            return e.eval(lv, gv);
        } catch (const pole_error&) {
            continue;
        }
    }
    throw pole_error("no pole-free point found");
}

} // namespace

TEST_CASE("arithmetic identities")
{
    CHECK(RatExpr(1) / (L(1) - L(2)) + RatExpr(1) / (L(2) - L(1)) == RatExpr(0));
    CHECK((L(1) - L(2)) * (RatExpr(1) / (L(1) - L(2))) == RatExpr(1));
    CHECK_THROWS_AS(RatExpr(1) / RatExpr(0), division_by_zero);

    // ((l1+g)/l1) * (l1/(l1+g)) = 1, checked structurally and at 10 points
    RatExpr prod = ((L(1) + G()) / L(1)) * (L(1) / (L(1) + G()));
    CHECK(prod == RatExpr(1));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) CHECK(eval3(prod, rng) == Rational(1));
}

TEST_CASE("canonical form: equality iff cross-multiplication")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 40; ++i) {
        RatExpr a = random_expr(rng), b = random_expr(rng);
        bool eq = a == b;
        bool cross = a.num() * b.den() == b.num() * a.den();
        CHECK(eq == cross);
        CHECK(a == a);
    }
}

TEST_CASE("shift_var")
{
    CHECK((RatExpr(1) / (L(1) - L(2))).shift_l(1, G()) ==
          RatExpr(1) / (L(1) - L(2) - G()));
    CHECK(L(3).shift_l(1, G()) == L(3));
    CHECK_THROWS_AS(L(1).shift_l(1, L(2)), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 25; ++i) {
        RatExpr e = random_expr(rng);
        CHECK(e.shift_l(1, G()).shift_l(1, -G()) == e);           // round trip
        CHECK(e.shift_l(2, RatExpr(0)) == e);                     // zero shift
        CHECK(e.shift_l(1, G()).shift_l(2, RatExpr(3)) ==
              e.shift_l(2, RatExpr(3)).shift_l(1, G()));          // commuting shifts
    }
}

TEST_CASE("partial_deriv")
{
    CHECK((RatExpr(1) / (L(1) - L(2))).derivative_l(1) ==
          RatExpr(-1) / ((L(1) - L(2)) * (L(1) - L(2))));
    CHECK((G() * L(2)).derivative_l(1) == RatExpr(0));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 25; ++i) {
        RatExpr a = random_expr(rng), b = random_expr(rng);
        CHECK((a * b).derivative_l(1) ==
              a.derivative_l(1) * b + a * b.derivative_l(1)); // product rule
    }
}

TEST_CASE("partial_deriv matches central finite differences")
{
    std::mt19937_64 rng(19);
    Rational h(1, 10000);
    for (int i = 0; i < 10; ++i) {
        RatExpr e = random_expr(rng);
        RatExpr d = e.derivative_l(1);
        for (int pt = 0; pt < 3; ++pt) {
            std::vector<Rational> lv{random_rational(rng), random_rational(rng),
                                     random_rational(rng)};
            Rational gv = random_rational(rng);
            try {
                std::vector<Rational> hi = lv, lo = lv;
                hi[0] += h;
                lo[0] -= h;
                Rational fd = (e.eval(hi, gv) - e.eval(lo, gv)) / (2 * h);
                Rational ex = d.eval(lv, gv);
                double scale = std::max(1.0, std::abs(static_cast<double>(ex)));
                CHECK(std::abs(static_cast<double>(fd - ex)) / scale < 1e-6);
            } catch (const pole_error&) {
                continue; // skip points that hit a pole
            }
        }
    }
}

TEST_CASE("eval_at")
{
    RatExpr e = RatExpr(1) / (L(1) - L(2));
    CHECK(e.eval({Rational(3), Rational(1)}, Rational(0)) == Rational(1, 2));
    CHECK_THROWS_AS(e.eval({Rational(1), Rational(1)}, Rational(0)), pole_error);

    // evaluation is a homomorphism
    std::mt19937_64 rng(23);
    for (int i = 0; i < 25; ++i) {
        RatExpr a = random_expr(rng), b = random_expr(rng);
        std::vector<Rational> lv{random_rational(rng), random_rational(rng),
                                 random_rational(rng)};
        Rational gv = random_rational(rng);
        try {
            CHECK((a + b).eval(lv, gv) == a.eval(lv, gv) + b.eval(lv, gv));
            CHECK((a * b).eval(lv, gv) == a.eval(lv, gv) * b.eval(lv, gv));
        } catch (const pole_error&) {
            continue;
        }
    }
}

TEST_CASE("taylor_gamma")
{
    auto c = (RatExpr(1) / (L(1) - L(2) - G())).taylor_g(1);
    CHECK(c[0] == RatExpr(1) / (L(1) - L(2)));
    CHECK(c[1] == RatExpr(1) / ((L(1) - L(2)) * (L(1) - L(2))));

    auto c2 = (RatExpr(1) + G() / (L(1) - L(2))).taylor_g(2);
    CHECK(c2[0] == RatExpr(1));
    CHECK(c2[1] == RatExpr(1) / (L(1) - L(2)));
    CHECK(c2[2] == RatExpr(0));

    CHECK_THROWS_AS((RatExpr(1) / G()).taylor_g(1), pole_error);

    // remainder e - sum c_i g^i has g-adic valuation > order
    std::mt19937_64 rng(29);
    for (int i = 0; i < 20; ++i) {
        RatExpr e = random_expr(rng);
        unsigned order = 2;
        std::vector<RatExpr> cs;
        try {
            cs = e.taylor_g(order);
        } catch (const pole_error&) {
            continue;
        }
        RatExpr rem = e;
        RatExpr gp(1);
        for (unsigned k = 0; k <= order; ++k) {
            rem = rem - cs[k] * gp;
            gp = gp * G();
        }
        if (!rem.is_zero()) {
            CHECK(rem.num().degree_in(GVAR) > 0);
            // valuation: numerator divisible by g^(order+1) once den(g=0) != 0
            CHECK(rem.num().univariate_in(GVAR).begin()->first > order);
        }
    }
}

TEST_CASE("is_identically_zero")
{
    CHECK((RatExpr(1) / (L(1) - L(2)) - RatExpr(1) / (L(1) - L(2))).is_zero());
    CHECK_FALSE((G() / (L(1) - L(2))).is_zero());
}

TEST_CASE("parser and formatter")
{
    CHECK(parse_expr("1/(l1-l2)") == RatExpr(1) / (L(1) - L(2)));
    CHECK(parse_expr("(l1-l2)^2/(l1-l2)") == L(1) - L(2));
    CHECK(parse_expr("(l1-l2)^2/(l1+g)") ==
          (L(1) - L(2)) * (L(1) - L(2)) / (L(1) + G()));
    CHECK_THROWS_AS(parse_expr("l1 +"), parse_error);
    CHECK_THROWS_AS(parse_expr("l1^(-2)"), exponent_error);
    CHECK_THROWS_AS(parse_expr("1/0"), parse_error);
    CHECK_THROWS_AS(parse_expr("x"), parse_error);

    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        RatExpr e = random_expr(rng);
        CHECK(parse_expr(e.str()) == e); // deterministic round trip
        CHECK(e.str() == e.str());
    }
}

TEST_CASE("int_pow")
{
    RatExpr b = (L(1) + G()) / L(2);
    CHECK(b.int_pow(0) == RatExpr(1));
    CHECK(b.int_pow(3) == b * b * b);
    CHECK(b.int_pow(-2) * b.int_pow(2) == RatExpr(1));
}
