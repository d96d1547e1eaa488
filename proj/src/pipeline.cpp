#include "drmat/pipeline.hpp"

#include <random>

namespace drmat {

namespace {

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> numer(-10000, 10000);
    std::uniform_int_distribution<long> denom(1, 100);
    return Rational(numer(rng), denom(rng));
}

bool qdybe_holds(const ZeroWeightOp& R, std::uint64_t seed)
{
    if (R.dim() <= 3) return qdybe_residual(R, R.step()).passed;
    std::mt19937_64 rng(seed);
    for (int pt = 0; pt < 3; ++pt) {
        for (int attempt = 0;; ++attempt) {
            if (attempt >= 50) return false; // persistent pole hits
            std::vector<Rational> lv;
            for (int k = 0; k < R.dim(); ++k) lv.push_back(random_rational(rng));
            Rational gv = random_rational(rng);
            try {
                if (!qdybe_residual_at(R, R.step(), lv, gv).passed) return false;
                break;
            } catch (const pole_error&) {
                continue;
            }
        }
    }
    return true;
}

} // namespace

PipelineResult quantize_pipeline(const GradedSpace& space, const IntervalPartition& X,
                                 const TwoForm& D, const std::vector<Rational>& nu,
                                 std::uint64_t seed)
{
    int N = space.dim();
    if (X.N() != N || D.N() != N || static_cast<int>(nu.size()) != N)
        throw std::invalid_argument("dimension mismatch");

    PipelineResult out;
    out.r_target = r_canonical(space, X, D, nu);

    // Shift the poles of the step-gamma family to lambda_ij - nu_ij.
    std::vector<RatExpr> shift;
    for (const Rational& v : nu) shift.push_back(RatExpr(-v));
    ZeroWeightOp Rq = gauge_quantum_affine(R_rat_gamma(space, X), Rational(1), shift);

    // Correction 2-form: the target diagonal plus the interval poles that
    // the shifted family already carries at first order in g.
    TwoForm C(N);
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            RatExpr c = D.at(i, j);
            if (X.same_interval(i, j))
                c = c + RatExpr(1) / (RatExpr::l(i) - RatExpr::l(j) -
                                      RatExpr(Rational(nu[i - 1] - nu[j - 1])));
            if (!c.is_zero()) C.set(i, j, c);
        }

    MultForm phi(N, 2);
    try {
        phi = quantize_closed_2form(C, space);
        out.quantization_found = true;
    } catch (const quantization_not_found& e) {
        out.note = e.what();
        out.all_pass = false;
        return out;
    }

    ZeroWeightOp R = gauge_quantum_form(Rq, phi);
    out.R = R;

    out.checks.push_back({"qdybe", qdybe_holds(R, seed)});
    out.checks.push_back({"zero-weight", check_zero_weight(R.to_homop()).passed});
    bool sc = false;
    try {
        sc = semiclassical_limit(R) == *out.r_target;
    } catch (const not_unital_error&) {
        sc = false;
    }
    out.checks.push_back({"semiclassical-limit", sc});

    out.all_pass = true;
    for (const auto& c : out.checks) out.all_pass = out.all_pass && c.passed;
    return out;
}

} // namespace drmat
