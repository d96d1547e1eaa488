#ifndef DRMAT_FORMS_HPP
#define DRMAT_FORMS_HPP

#include "drmat/constructors.hpp"

#include <map>

namespace drmat {

struct zero_function_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct quantization_not_found : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// delta_i: f -> f(lambda) / f(..., lambda_i - step, ...).
RatExpr delta_i(const RatExpr& f, int i, const RatExpr& step);

/// Multiplicative k-form: components phi_I on ascending index tuples,
/// extended to arbitrary tuples by phi_{tau(I)} = phi_I^(sign tau).
class MultForm {
public:
    MultForm(int N, int k) : N_(N), k_(k) {}

    int N() const { return N_; }
    int degree() const { return k_; }

    void set(std::vector<int> ascending, RatExpr v);
    /// Component at an arbitrary tuple of distinct indices.
    RatExpr at(std::vector<int> tuple) const;

    bool is_trivial() const; // every component == 1
    const std::map<std::vector<int>, RatExpr>& components() const { return comp_; }

private:
    int N_, k_;
    std::map<std::vector<int>, RatExpr> comp_;
};

/// (d phi)_I = prod_s (delta_{i_s} phi_{I \ i_s})^((-1)^(s+1)), where the
/// shift in delta_{i_s} is by the supertrace-dual weight (-1)^sigma(i_s) step.
MultForm d_gamma(const MultForm& phi, const RatExpr& step, const GradedSpace& space);

/// Multiplicative quantization of a closed 2-form whose coefficients are
/// sums of simple poles in lambda_ij with integer residues plus constants.
/// Candidates are verified exactly; throws quantization_not_found otherwise.
MultForm quantize_closed_2form(const TwoForm& D, const GradedSpace& space);

/// The 2-form phi_ij = ((-1)^sigma(i) beta_ij + (-1)^(sigma(i)+sigma(j)) q) / alpha_ij
/// built from a Hecke R-matrix. Verifies the reciprocal property.
MultForm phi_from_R(const ZeroWeightOp& R, const RatExpr& q);

} // namespace drmat

#endif
