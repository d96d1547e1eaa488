#include "drmat/zeroweight.hpp"

namespace drmat {

ZeroWeightOp::ZeroWeightOp(GradedSpace space)
    : space_(std::move(space)), step_(RatExpr::g())
{
    int N = space_.dim();
    alpha_.assign(static_cast<std::size_t>(N) * N, RatExpr());
    beta_.assign(static_cast<std::size_t>(N) * N, RatExpr());
}

bool ZeroWeightOp::operator==(const ZeroWeightOp& o) const
{
    return space_ == o.space_ && alpha_ == o.alpha_ && beta_ == o.beta_;
}

ZeroWeightOp ZeroWeightOp::operator+(const ZeroWeightOp& o) const
{
    if (space_ != o.space_) throw std::invalid_argument("space mismatch");
    ZeroWeightOp r = *this;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        if (!o.alpha_[k].is_zero()) r.alpha_[k] = r.alpha_[k] + o.alpha_[k];
        if (!o.beta_[k].is_zero()) r.beta_[k] = r.beta_[k] + o.beta_[k];
    }
    return r;
}

ZeroWeightOp ZeroWeightOp::operator-(const ZeroWeightOp& o) const
{
    if (space_ != o.space_) throw std::invalid_argument("space mismatch");
    ZeroWeightOp r = *this;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        if (!o.alpha_[k].is_zero()) r.alpha_[k] = r.alpha_[k] - o.alpha_[k];
        if (!o.beta_[k].is_zero()) r.beta_[k] = r.beta_[k] - o.beta_[k];
    }
    return r;
}

ZeroWeightOp ZeroWeightOp::scale(const RatExpr& c) const
{
    ZeroWeightOp r(space_);
    r.step_ = step_;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        if (!alpha_[k].is_zero()) r.alpha_[k] = alpha_[k] * c;
        if (!beta_[k].is_zero()) r.beta_[k] = beta_[k] * c;
    }
    return r;
}

ZeroWeightOp ZeroWeightOp::map_coeffs(const std::function<RatExpr(const RatExpr&)>& f) const
{
    ZeroWeightOp r(space_);
    r.step_ = step_;
    for (std::size_t k = 0; k < alpha_.size(); ++k) {
        if (!alpha_[k].is_zero()) r.alpha_[k] = f(alpha_[k]);
        if (!beta_[k].is_zero()) r.beta_[k] = f(beta_[k]);
    }
    return r;
}

ZeroWeightOp ZeroWeightOp::derivative_l(int k) const
{
    return map_coeffs([k](const RatExpr& e) { return e.derivative_l(k); });
}

namespace {
// Koszul sign of E_ji (x)_s E_ij at its single entry
int beta_sign(const GradedSpace& s, int i, int j)
{
    int p = (s.sigma(i) + s.sigma(j)) % 2;
    return (p * s.sigma(i)) % 2 ? -1 : 1;
}
} // namespace

HomOp ZeroWeightOp::to_homop() const
{
    int N = space_.dim();
    HomOp r(space_, 2);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            int col = (i - 1) * N + (j - 1);
            if (!alpha(i, j).is_zero()) r.at(col, col) = alpha(i, j);
            if (i != j && !beta(i, j).is_zero()) {
                int row = (j - 1) * N + (i - 1);
                RatExpr v = beta(i, j);
                if (beta_sign(space_, i, j) < 0) v = -v;
                r.at(row, col) = v;
            }
        }
    }
    return r;
}

Hom2Components ZeroWeightOp::to_components() const
{
    int N = space_.dim();
    Hom2Components c;
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            if (!alpha(i, j).is_zero())
                c.push_back({HomOp::basis_E(space_, i, i).scale(alpha(i, j)),
                             HomOp::basis_E(space_, j, j), 0, 0});
            if (i != j && !beta(i, j).is_zero()) {
                int p = (space_.sigma(i) + space_.sigma(j)) % 2;
                c.push_back({HomOp::basis_E(space_, j, i).scale(beta(i, j)),
                             HomOp::basis_E(space_, i, j), p, p});
            }
        }
    }
    if (c.empty())
        c.push_back({HomOp(space_, 1), HomOp(space_, 1), 0, 0});
    return c;
}

std::optional<ZeroWeightOp> ZeroWeightOp::from_homop(const HomOp& M)
{
    if (M.arity() != 2) return std::nullopt;
    const GradedSpace& s = M.space();
    int N = s.dim();
    ZeroWeightOp r(s);
    for (int row = 0; row < M.dim(); ++row) {
        for (int col = 0; col < M.dim(); ++col) {
            const RatExpr& v = M.at(row, col);
            if (v.is_zero()) continue;
            int i = col / N + 1, j = col % N + 1;
            int ri = row / N + 1, rj = row % N + 1;
            if (ri == i && rj == j) {
                r.alpha(i, j) = v;
            } else if (i != j && ri == j && rj == i) {
                r.beta(i, j) = beta_sign(s, i, j) < 0 ? -v : v;
            } else {
                return std::nullopt;
            }
        }
    }
    return r;
}

} // namespace drmat
