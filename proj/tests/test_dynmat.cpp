#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "drmat/pipeline.hpp"

#include <random>

using namespace drmat;

namespace {
RatExpr L(int k) { return RatExpr::l(k); }
RatExpr G() { return RatExpr::g(); }
} // namespace

TEST_CASE("interval partition")
{
    IntervalPartition X = IntervalPartition::parse(5, "1-2,4-5");
    CHECK(X.same_interval(1, 2));
    CHECK_FALSE(X.same_interval(2, 3));
    CHECK(X.same_interval(4, 5));
    CHECK_FALSE(X.contains(3));
    CHECK(X.str() == "1-2,4-5");
    CHECK_THROWS(IntervalPartition::parse(5, "2-1"));
    CHECK_THROWS(IntervalPartition::parse(5, "1-3,2-4")); // overlap
    CHECK_THROWS(IntervalPartition::parse(3, "1-4"));     // out of range
}

TEST_CASE("two-form closedness")
{
    TwoForm D(3);
    D.set(1, 2, RatExpr(1) / (L(1) - L(2)));
    CHECK(D.is_closed()); // pairwise forms in own variables are closed
    CHECK(D.at(2, 1) == -D.at(1, 2));

    TwoForm bad(3);
    bad.set(1, 2, L(3)); // depends on a third variable: not closed
    CHECK_FALSE(bad.is_closed());
    CHECK_THROWS_AS(bad.require_closed(), not_closed_error);
}

TEST_CASE("r_canonical and r_rat")
{
    GradedSpace s(1, 1);
    IntervalPartition X(2, {{1, 2}});
    ZeroWeightOp r = r_rat(s, X);
    CHECK(r.beta(1, 2) == RatExpr(-1) / (L(1) - L(2)));
    CHECK(r.beta(2, 1) == RatExpr(1) / (L(2) - L(1)));
    CHECK(r.alpha(1, 2).is_zero());
    CHECK(r == r_canonical(s, X, TwoForm(2), {Rational(0), Rational(0)}));

    // empty partition, zero form: the zero operator
    ZeroWeightOp zero = r_canonical(s, IntervalPartition(2, {}), TwoForm(2),
                                    {Rational(0), Rational(0)});
    CHECK(zero.to_homop().is_zero());

    // purely even: the classical rational r-matrix, E_12 (x) E_21 / lambda_12
    GradedSpace ev(2, 0);
    ZeroWeightOp rc = r_rat(ev, IntervalPartition(2, {{1, 2}}));
    CHECK(rc.beta(2, 1) == RatExpr(1) / (L(1) - L(2)));
    CHECK(rc.beta(1, 2) == RatExpr(1) / (L(2) - L(1)));

    // canonical family with nonzero D and nu passes CDYBE
    TwoForm D(2);
    D.set(1, 2, RatExpr(3) / (L(1) - L(2) - RatExpr(7)));
    ZeroWeightOp rdn = r_canonical(s, X, D, {Rational(2), Rational(-1)});
    CHECK(cdybe_residual(rdn).passed);
    CHECK(check_zero_weight(rdn.to_homop()).passed);
}

TEST_CASE("R_X")
{
    GradedSpace s(2, 1);
    IntervalPartition X(3, {{1, 2}});
    QuasiConstant mu(3);
    mu.mu[1] = RatExpr(2);
    ZeroWeightOp R = R_X(s, X, mu);
    for (int i = 1; i <= 3; ++i) CHECK(R.alpha(i, i) == RatExpr(1));
    CHECK(R.alpha(1, 3) == RatExpr(-1)); // mixed parity off-interval
    CHECK(R.alpha(1, 2) == RatExpr(1) + RatExpr(1) / (L(1) - L(2) + RatExpr(2)));
    CHECK(R.step() == RatExpr(1));
    CHECK(qdybe_residual(R, R.step()).passed);
    CHECK(hecke_check(R, HeckeParams(RatExpr(1), RatExpr(1)), HeckeMode::strong).passed);

    QuasiConstant bad(3);
    bad.mu[0] = L(1);
    CHECK_THROWS(R_X(s, X, bad));
}

TEST_CASE("R_rat_gamma and semiclassical limit")
{
    GradedSpace s(1, 1);
    IntervalPartition X(2, {{1, 2}});
    ZeroWeightOp Rg = R_rat_gamma(s, X);
    CHECK(Rg.alpha(1, 2) == RatExpr(1) + G() / (L(1) - L(2)));
    CHECK(Rg.beta(1, 2) == G() / (L(1) - L(2)));

    // g = 0 slice is the identity
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            CHECK(Rg.alpha(i, j).taylor_g(0)[0] == RatExpr(1));

    CHECK(semiclassical_limit(Rg) == r_rat_prime(s, X));
    CHECK(semiclassical_limit(R_rat_gamma(s, IntervalPartition(2, {}))).to_homop().is_zero());

    // both diagonal conventions satisfy QDYBE (recorded resolution)
    CHECK(qdybe_residual(Rg, Rg.step()).passed);
    ZeroWeightOp Rgs = R_rat_gamma(s, X, DiagonalConvention::signed_diag);
    CHECK(qdybe_residual(Rgs, Rgs.step()).passed);

    // not unital at g = 0: rejected
    ZeroWeightOp notu(s);
    notu.alpha(1, 1) = G();
    CHECK_THROWS_AS(semiclassical_limit(notu), not_unital_error);
}

TEST_CASE("classical gauges preserve CDYBE")
{
    GradedSpace s(2, 1);
    IntervalPartition X(3, {{1, 3}});
    ZeroWeightOp r = r_rat(s, X);

    TwoForm D(3);
    D.set(1, 2, RatExpr(2) / (L(1) - L(2)));
    D.set(1, 3, RatExpr(-1) / (L(1) - L(3) + RatExpr(4)));
    CHECK(cdybe_residual(gauge_classical_add_form(r, D)).passed);
    CHECK(cdybe_residual(gauge_classical_shift(
              r, {RatExpr(1), G(), RatExpr(0)})).passed);
    CHECK(cdybe_residual(gauge_classical_scale(r, Rational(3, 2))).passed);
    CHECK(cdybe_residual(gauge_classical_permute(r, {2, 3, 1})).passed);
    CHECK(cdybe_residual(gauge_classical_add_id(r, Rational(5))).passed);

    // type (5) trades unitarity away
    CHECK(unitarity_residual(r).passed);
    CHECK_FALSE(unitarity_residual(gauge_classical_add_id(r, Rational(5))).passed);

    CHECK_THROWS_AS(gauge_classical_scale(r, Rational(0)), zero_scalar_error);
    TwoForm bad(3);
    bad.set(1, 2, L(3));
    CHECK_THROWS_AS(gauge_classical_add_form(r, bad), not_closed_error);

    // shift acts as f(lambda) -> f(lambda + mu)
    ZeroWeightOp sh = gauge_classical_shift(r, {RatExpr(1), RatExpr(0), RatExpr(0)});
    CHECK(sh.beta(2, 1) == r.beta(2, 1).subst_l(1, L(1) + RatExpr(1)));
}

TEST_CASE("the add-form gauge relates r'_rat and r_rat")
{
    for (GradedSpace s : {GradedSpace(1, 1), GradedSpace(2, 1)}) {
        int N = s.dim();
        IntervalPartition X(N, {{1, N}});
        TwoForm D(N);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                if (X.same_interval(i, j)) D.set(i, j, RatExpr(-1) / (L(i) - L(j)));
        CHECK(gauge_classical_add_form(r_rat(s, X), D) == r_rat_prime(s, X));
        CHECK(cdybe_residual(r_rat_prime(s, X)).passed);
    }
}

TEST_CASE("quantum gauges preserve QDYBE")
{
    GradedSpace s(1, 1);
    IntervalPartition X(2, {{1, 2}});
    QuasiConstant mu(2);
    ZeroWeightOp R = R_X(s, X, mu);

    // (1) multiplicative gamma-closed form
    MultForm phi(2, 2);
    RatExpr lam = L(1) - L(2);
    phi.set({1, 2}, (lam - RatExpr(3)) / (lam + RatExpr(3)));
    ZeroWeightOp R1 = gauge_quantum_form(R, phi);
    CHECK(qdybe_residual(R1, R1.step()).passed);

    // (2) permutation
    ZeroWeightOp R2 = gauge_quantum_permute(R, {2, 1});
    CHECK(qdybe_residual(R2, R2.step()).passed);

    // (3) scaling
    ZeroWeightOp R3 = gauge_quantum_scale(R, RatExpr(Rational(7, 3)));
    CHECK(qdybe_residual(R3, R3.step()).passed);
    CHECK_THROWS_AS(gauge_quantum_scale(R, RatExpr(0)), zero_scalar_error);

    // (4) affine substitution rescales the step
    ZeroWeightOp Rg = R_rat_gamma(s, X);
    ZeroWeightOp R4 = gauge_quantum_affine(Rg, Rational(2), {RatExpr(1), RatExpr(0)});
    CHECK(R4.step() == G() / RatExpr(2));
    CHECK(qdybe_residual(R4, R4.step()).passed);

    // a form that is not gamma-closed for the step is rejected
    GradedSpace s3(2, 1);
    IntervalPartition X3(3, {{1, 3}});
    ZeroWeightOp RR = R_X(s3, X3, QuasiConstant(3));
    MultForm notclosed(3, 2);
    notclosed.set({1, 2}, L(3));
    CHECK_THROWS_AS(gauge_quantum_form(RR, notclosed), not_gamma_closed);
}

TEST_CASE("delta_i and d_gamma")
{
    CHECK(delta_i(RatExpr(5), 1, G()) == RatExpr(1));
    CHECK(delta_i(L(1), 1, G()) == L(1) / (L(1) - G()));
    CHECK_THROWS_AS(delta_i(RatExpr(0), 1, G()), zero_function_error);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(1, 9);
    auto random_nonzero = [&] {
        return (L(1) + RatExpr(c(rng))) / (L(2) + L(3) + RatExpr(c(rng)));
    };
    for (int t = 0; t < 10; ++t) {
        RatExpr f = random_nonzero(), h = random_nonzero();
        CHECK(delta_i(f * h, 2, G()) == delta_i(f, 2, G()) * delta_i(h, 2, G()));
    }

    GradedSpace s(2, 1);
    // d of a constant form is trivial; d^2 = trivial on random 1-forms
    MultForm constant(3, 1);
    constant.set({2}, RatExpr(7));
    CHECK(d_gamma(constant, G(), s).is_trivial());
    for (int t = 0; t < 50; ++t) {
        MultForm omega(3, 1);
        for (int i = 1; i <= 3; ++i) omega.set({i}, random_nonzero());
        CHECK(d_gamma(d_gamma(omega, G(), s), G(), s).is_trivial());
    }

    // the 2-form built from a Hecke R-matrix is gamma-closed at step 1
    IntervalPartition X(3, {{1, 3}});
    ZeroWeightOp R = R_X(s, X, QuasiConstant(3));
    MultForm phi = phi_from_R(R, RatExpr(1));
    CHECK(d_gamma(phi, RatExpr(1), s).is_trivial());
}

TEST_CASE("quantize_closed_2form")
{
    GradedSpace s(1, 1);
    // D = 0: trivial form
    CHECK(quantize_closed_2form(TwoForm(2), s).is_trivial());

    // D_12 = -1/lambda_12: the half-step shifted ratio, fully verified
    TwoForm D(2);
    D.set(1, 2, RatExpr(-1) / (L(1) - L(2)));
    MultForm phi = quantize_closed_2form(D, s);
    RatExpr lam = L(1) - L(2);
    CHECK(phi.at({1, 2}) == (lam + G() / RatExpr(2)) / (lam - G() / RatExpr(2)));
    CHECK(phi.at({1, 2}) * phi.at({2, 1}) == RatExpr(1));
    auto c = phi.at({1, 2}).taylor_g(1);
    CHECK(c[0] == RatExpr(1));
    CHECK(c[1] == -D.at(1, 2));
    CHECK(d_gamma(phi, G(), s).is_trivial());

    // integer residues and constants quantize; non-integer residues do not
    TwoForm mix(2);
    mix.set(1, 2, RatExpr(2) / (lam - RatExpr(5)) + RatExpr(3));
    MultForm phim = quantize_closed_2form(mix, s);
    auto cm = phim.at({1, 2}).taylor_g(1);
    CHECK(cm[1] == -mix.at(1, 2));

    TwoForm frac(2);
    frac.set(1, 2, RatExpr(Rational(1, 2)) / lam);
    CHECK_THROWS_AS(quantize_closed_2form(frac, s), quantization_not_found);
}

TEST_CASE("quantize_pipeline")
{
    GradedSpace s(1, 1);
    IntervalPartition X(2, {{1, 2}});

    // empty partition, zero form: R = Id
    PipelineResult trivial = quantize_pipeline(s, IntervalPartition(2, {}), TwoForm(2),
                                               {Rational(0), Rational(0)});
    CHECK(trivial.quantization_found);
    CHECK(trivial.all_pass);
    REQUIRE(trivial.R.has_value());
    CHECK(trivial.R->to_homop() == HomOp::identity(s, 2));

    // gl(1|1), full interval, D = 0
    PipelineResult base = quantize_pipeline(s, X, TwoForm(2), {Rational(0), Rational(0)});
    CHECK(base.all_pass);

    // gl(2|1) split partition
    GradedSpace s3(2, 1);
    PipelineResult split = quantize_pipeline(s3, IntervalPartition(3, {{1, 2}, {3, 3}}),
                                             TwoForm(3), {Rational(0), Rational(0), Rational(0)});
    CHECK(split.all_pass);

    // nontrivial D and nu
    TwoForm D(2);
    D.set(1, 2, RatExpr(2) / (L(1) - L(2) - RatExpr(5)));
    PipelineResult rich = quantize_pipeline(s, X, D, {Rational(1), Rational(0)});
    CHECK(rich.quantization_found);
    CHECK(rich.all_pass);

    // a form outside the quantizable family reports the honest failure branch
    TwoForm frac(2);
    frac.set(1, 2, RatExpr(Rational(1, 3)) / (L(1) - L(2)));
    PipelineResult fail = quantize_pipeline(s, X, frac, {Rational(0), Rational(0)});
    CHECK_FALSE(fail.quantization_found);
    CHECK_FALSE(fail.all_pass);
    CHECK_FALSE(fail.note.empty());
}
