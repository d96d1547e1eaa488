#ifndef DRMAT_ZEROWEIGHT_HPP
#define DRMAT_ZEROWEIGHT_HPP

#include "drmat/homop.hpp"

#include <functional>
#include <optional>

namespace drmat {

/// Coefficient table of a zero-weight operator on V (x) V:
///   sum alpha_ij E_ii (x) E_jj  +  sum_{i != j} beta_ij E_ji (x) E_ij.
class ZeroWeightOp {
public:
    explicit ZeroWeightOp(GradedSpace space);

    const GradedSpace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    const RatExpr& alpha(int i, int j) const { return alpha_[idx(i, j)]; }
    RatExpr& alpha(int i, int j) { return alpha_[idx(i, j)]; }
    const RatExpr& beta(int i, int j) const { return beta_[idx(i, j)]; }
    RatExpr& beta(int i, int j) { return beta_[idx(i, j)]; }

    /// Step of the quantum family this operator belongs to (symbolic g by
    /// default); carried as metadata through gauge transformations.
    const RatExpr& step() const { return step_; }
    void set_step(RatExpr s) { step_ = std::move(s); }

    bool operator==(const ZeroWeightOp& o) const;

    ZeroWeightOp operator+(const ZeroWeightOp& o) const;
    ZeroWeightOp operator-(const ZeroWeightOp& o) const;
    ZeroWeightOp scale(const RatExpr& c) const;

    /// Apply f to every coefficient.
    ZeroWeightOp map_coeffs(const std::function<RatExpr(const RatExpr&)>& f) const;

    HomOp to_homop() const;
    Hom2Components to_components() const;

    /// Coefficient-wise partial derivative by l_k.
    ZeroWeightOp derivative_l(int k) const;

    /// Structural read-off; nullopt if M is not in the zero-weight span.
    static std::optional<ZeroWeightOp> from_homop(const HomOp& M);

private:
    GradedSpace space_;
    std::vector<RatExpr> alpha_, beta_;
    RatExpr step_;
    int idx(int i, int j) const { return (i - 1) * space_.dim() + (j - 1); }
};

} // namespace drmat

#endif
