#ifndef DRMAT_CONSTRUCTORS_HPP
#define DRMAT_CONSTRUCTORS_HPP

#include "drmat/zeroweight.hpp"

namespace drmat {

/// Disjoint ascending integer intervals inside {1..N}.
class IntervalPartition {
public:
    struct Interval {
        int lo, hi; // inclusive
    };

    IntervalPartition(int N, std::vector<Interval> intervals);

    int N() const { return N_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    bool same_interval(int i, int j) const;
    bool contains(int i) const;

    /// Parse "1-2,4-5" (empty string = empty partition).
    static IntervalPartition parse(int N, const std::string& text);
    std::string str() const;

private:
    int N_;
    std::vector<Interval> intervals_;
};

struct not_closed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Antisymmetric coefficient table D_ij of a meromorphic 2-form.
class TwoForm {
public:
    explicit TwoForm(int N);
    int N() const { return N_; }
    const RatExpr& at(int i, int j) const;
    /// Sets D_ij = v and D_ji = -v.
    void set(int i, int j, const RatExpr& v);
    bool is_closed() const; // d-closed: dD_ijk = 0 exactly
    void require_closed() const;

private:
    int N_;
    std::vector<RatExpr> d_;
};

/// gamma-quasiconstant mu: entries free of l variables (g only).
struct QuasiConstant {
    std::vector<RatExpr> mu; // size N

    explicit QuasiConstant(int N) : mu(N, RatExpr(0)) {}
    RatExpr diff(int i, int j) const { return mu.at(i - 1) - mu.at(j - 1); }
    void validate() const;
};

/// Theorem 2.3 family in index coordinates: alpha = D, beta from the
/// interval partition with pole shifts nu.
ZeroWeightOp r_canonical(const GradedSpace& space, const IntervalPartition& X,
                         const TwoForm& D, const std::vector<Rational>& nu);

/// The rational family: r_canonical(X, 0, 0).
ZeroWeightOp r_rat(const GradedSpace& space, const IntervalPartition& X);

/// Semiclassical limit of R_rat_gamma written out directly.
ZeroWeightOp r_rat_prime(const GradedSpace& space, const IntervalPartition& X);

/// Quantum family with p = q = 1, step 1 and quasiconstant mu; diagonal
/// alpha_ij = (-1)^(sigma(i)+sigma(j)) off the intervals.
ZeroWeightOp R_X(const GradedSpace& space, const IntervalPartition& X, const QuasiConstant& mu);

enum class DiagonalConvention { identity, signed_diag };

/// Step-gamma quantum family; `diag` selects the constant diagonal part
/// (Id, or the signed diagonal of the p=q=1 family).
ZeroWeightOp R_rat_gamma(const GradedSpace& space, const IntervalPartition& X,
                         DiagonalConvention diag = DiagonalConvention::identity);

struct not_unital_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// r with coefficients -c1 of the g-expansion; requires c0 = Id.
ZeroWeightOp semiclassical_limit(const ZeroWeightOp& R);

/// Alt_s(dr) via the slot-embedding rewrite of the three-term formula.
HomOp alt_s_of_dr(const ZeroWeightOp& r);
/// Alt_s(dr) directly from the definition of the super symmetrizer;
/// independent route kept for cross-checking.
HomOp alt_s_of_dr_direct(const ZeroWeightOp& r);

} // namespace drmat

#endif
