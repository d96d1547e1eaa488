#include "drmat/gauge.hpp"

namespace drmat {

ZeroWeightOp gauge_classical_add_form(const ZeroWeightOp& r, const TwoForm& D)
{
    D.require_closed();
    int N = r.dim();
    if (D.N() != N) throw std::invalid_argument("dimension mismatch");
    ZeroWeightOp out = r;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && !D.at(i, j).is_zero())
                out.alpha(i, j) = out.alpha(i, j) + D.at(i, j);
    return out;
}

namespace {
ZeroWeightOp shift_all(const ZeroWeightOp& r, const std::vector<RatExpr>& mu, int direction)
{
    if (static_cast<int>(mu.size()) != r.dim()) throw std::invalid_argument("bad mu size");
    for (const auto& m : mu)
        if (m.has_l_vars()) throw std::invalid_argument("mu must be free of l variables");
    return r.map_coeffs([&](const RatExpr& e) {
        RatExpr out = e;
        for (int k = 1; k <= r.dim(); ++k)
            if (!mu[k - 1].is_zero()) out = out.shift_l(k, RatExpr(direction) * mu[k - 1]);
        return out;
    });
}
} // namespace

ZeroWeightOp gauge_classical_shift(const ZeroWeightOp& r, const std::vector<RatExpr>& mu)
{
    // f(lambda) -> f(lambda + mu) is the shift l_k -> l_k + mu_k
    return shift_all(r, mu, -1);
}

ZeroWeightOp gauge_classical_scale(const ZeroWeightOp& r, const Rational& c)
{
    if (c == 0) throw zero_scalar_error("scale factor must be nonzero");
    RatExpr ce{Rational(c)};
    return r.map_coeffs([&](const RatExpr& e) {
        RatExpr out = e;
        for (int k = 1; k <= r.dim(); ++k) out = out.subst_l(k, ce * RatExpr::l(k));
        return ce * out;
    });
}

ZeroWeightOp gauge_classical_permute(const ZeroWeightOp& r, const std::vector<int>& tau)
{
    return permute_op(r, tau);
}

ZeroWeightOp gauge_classical_add_id(const ZeroWeightOp& r, const Rational& c)
{
    if (c == 0) throw zero_scalar_error("scalar must be nonzero");
    ZeroWeightOp out = r;
    RatExpr ce{Rational(c)};
    for (int i = 1; i <= r.dim(); ++i)
        for (int j = 1; j <= r.dim(); ++j) out.alpha(i, j) = out.alpha(i, j) + ce;
    return out;
}

ZeroWeightOp gauge_quantum_form(const ZeroWeightOp& R, const MultForm& phi)
{
    if (phi.N() != R.dim() || phi.degree() != 2)
        throw std::invalid_argument("form dimension mismatch");
    if (!d_gamma(phi, R.step(), R.space()).is_trivial())
        throw not_gamma_closed("2-form is not gamma-closed for this step");
    ZeroWeightOp out = R;
    for (int i = 1; i <= R.dim(); ++i)
        for (int j = 1; j <= R.dim(); ++j)
            if (i != j && !out.alpha(i, j).is_zero())
                out.alpha(i, j) = phi.at({i, j}) * out.alpha(i, j);
    return out;
}

ZeroWeightOp gauge_quantum_permute(const ZeroWeightOp& R, const std::vector<int>& tau)
{
    return permute_op(R, tau);
}

ZeroWeightOp gauge_quantum_scale(const ZeroWeightOp& R, const RatExpr& c)
{
    if (c.is_zero()) throw zero_scalar_error("scale factor must be nonzero");
    if (c.has_l_vars()) throw std::invalid_argument("scale factor must be free of l variables");
    return R.scale(c);
}

ZeroWeightOp gauge_quantum_affine(const ZeroWeightOp& R, const Rational& c,
                                  const std::vector<RatExpr>& mu)
{
    if (c == 0) throw zero_scalar_error("scale factor must be nonzero");
    if (static_cast<int>(mu.size()) != R.dim()) throw std::invalid_argument("bad mu size");
    for (const auto& m : mu)
        if (m.has_l_vars()) throw std::invalid_argument("mu must be free of l variables");
    RatExpr ce{Rational(c)};
    ZeroWeightOp out = R.map_coeffs([&](const RatExpr& e) {
        RatExpr v = e;
        for (int k = 1; k <= R.dim(); ++k)
            v = v.subst_l(k, ce * RatExpr::l(k) + mu[k - 1]);
        return v;
    });
    out.set_step(R.step() / ce);
    return out;
}

} // namespace drmat
