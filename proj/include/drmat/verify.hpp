#ifndef DRMAT_VERIFY_HPP
#define DRMAT_VERIFY_HPP

#include "drmat/constructors.hpp"

namespace drmat {

/// Outcome of an identity check: per-component residuals with the smallest
/// failing basis tuples (lex order) as witnesses.
struct Residual {
    std::string kind;
    bool passed = true;
    struct Witness {
        std::vector<int> row, col; // basis tuples (col empty for scalar checks)
        std::string label;         // which sub-identity, when applicable
        RatExpr value;
    };
    std::vector<Witness> witnesses;

    void add(std::vector<int> row, std::vector<int> col, std::string label, RatExpr v)
    {
        passed = false;
        if (witnesses.size() < 16)
            witnesses.push_back({std::move(row), std::move(col), std::move(label), std::move(v)});
    }
    void merge(const HomOp& residual, const std::string& label = "");
};

struct HeckeParams {
    RatExpr p, q; // g-only expressions
    HeckeParams(RatExpr pp, RatExpr qq);
};

/// [h (x) 1 + 1 (x) h, M] = 0 for all Cartan h, plus the structural span check.
Residual check_zero_weight(const HomOp& M);

/// Alt_s(dr) + [r12,r13] + [r12,r23] + [r13,r23].
Residual cdybe_residual(const ZeroWeightOp& r);

struct unsupported_epsilon : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// r + T_s(r); only epsilon = 0 is supported.
Residual unitarity_residual(const ZeroWeightOp& r, const Rational& epsilon = Rational(0));

/// Symbolic QDYBE residual with the given step (an expression in g).
Residual qdybe_residual(const ZeroWeightOp& R, const RatExpr& step);

/// QDYBE residual by exact evaluation at one rational point (l values, g).
/// Throws pole_error if the point hits a pole; caller resamples.
Residual qdybe_residual_at(const ZeroWeightOp& R, const RatExpr& step,
                           const std::vector<Rational>& lvals, const Rational& gval);

struct alpha_diag_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The eight coefficient equations obtained from QDYBE applied to basis
/// vectors, checked for every admissible index tuple.
Residual coefficient_equation_suite(const ZeroWeightOp& R, const RatExpr& step);

struct parameter_conflict : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class HeckeMode { strong, weak };
Residual hecke_check(const ZeroWeightOp& R, const HeckeParams& params, HeckeMode mode);

/// The two reciprocal difference equations on beta, the trace relation
/// A_ij beta_ij + A_ji beta_ji = 0, and spectator-shift periodicity
/// (R normalized to gamma = p = q = 1).
Residual beta_recursion_check(const ZeroWeightOp& R);

struct classification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ClassificationResult {
    std::vector<std::vector<int>> classes; // all classes incl. singletons, sorted
    std::vector<int> tau;                  // 1-based permutation, new index of old i
    std::vector<RatExpr> mu;               // recovered quasiconstant per NEW index
    IntervalPartition partition;           // recovered X on the relabeled space
    ZeroWeightOp canonical;                // R_X the input maps to under tau
};

/// Recover the interval partition and quasiconstant of a Hecke R-matrix
/// with p = q = 1 and step 1, per the beta -> mu extraction.
ClassificationResult classify_hecke_R(const ZeroWeightOp& R);

/// Relabeling gauge: R'(lambda) = (tau (x) tau) R(tau^-1 lambda) (tau^-1 (x) tau^-1),
/// with the parity table carried along. tau[i-1] is the new index of old i.
ZeroWeightOp permute_op(const ZeroWeightOp& R, const std::vector<int>& tau);

} // namespace drmat

#endif
