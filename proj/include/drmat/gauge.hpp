#ifndef DRMAT_GAUGE_HPP
#define DRMAT_GAUGE_HPP

#include "drmat/forms.hpp"
#include "drmat/verify.hpp"

namespace drmat {

struct zero_scalar_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_gamma_closed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Classical gauge transformations (1)-(5).

/// (1) r -> r + sum D_ij E_ii (x) E_jj for a closed 2-form D.
ZeroWeightOp gauge_classical_add_form(const ZeroWeightOp& r, const TwoForm& D);
/// (2) r(lambda) -> r(lambda + mu); mu free of l variables.
ZeroWeightOp gauge_classical_shift(const ZeroWeightOp& r, const std::vector<RatExpr>& mu);
/// (3) r(lambda) -> c r(c lambda), c != 0.
ZeroWeightOp gauge_classical_scale(const ZeroWeightOp& r, const Rational& c);
/// (4) permutation conjugation (relabeling); tau[i-1] = new index of old i.
ZeroWeightOp gauge_classical_permute(const ZeroWeightOp& r, const std::vector<int>& tau);
/// (5) r -> r + c Id, c != 0.
ZeroWeightOp gauge_classical_add_id(const ZeroWeightOp& r, const Rational& c);

// Quantum gauge transformations (1)-(4).

/// (1) alpha_ij -> phi_ij alpha_ij for a gamma-closed multiplicative 2-form.
ZeroWeightOp gauge_quantum_form(const ZeroWeightOp& R, const MultForm& phi);
/// (2) permutation conjugation.
ZeroWeightOp gauge_quantum_permute(const ZeroWeightOp& R, const std::vector<int>& tau);
/// (3) R -> cR, c != 0 (free of l variables).
ZeroWeightOp gauge_quantum_scale(const ZeroWeightOp& R, const RatExpr& c);
/// (4) R(lambda) -> R(c lambda + mu); the step becomes step/c.
ZeroWeightOp gauge_quantum_affine(const ZeroWeightOp& R, const Rational& c,
                                  const std::vector<RatExpr>& mu);

} // namespace drmat

#endif
