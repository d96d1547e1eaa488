#ifndef DRMAT_PIPELINE_HPP
#define DRMAT_PIPELINE_HPP

#include "drmat/gauge.hpp"

#include <optional>

namespace drmat {

/// End-to-end quantization of r_canonical(X, D, nu): start from the
/// step-gamma rational family, shift the poles to lambda_ij - nu_ij, and
/// multiply in the quantization of the correction 2-form. Every stage is
/// verified exactly; `all_pass` is the conjunction.
struct PipelineResult {
    bool quantization_found = false;
    std::string note; // reason when the 2-form quantization fails

    std::optional<ZeroWeightOp> R; // the quantum operator, when found
    std::optional<ZeroWeightOp> r_target;

    struct Check {
        std::string name;
        bool passed;
    };
    std::vector<Check> checks;
    bool all_pass = false;
};

/// `seed` drives the random evaluation points used for the QDYBE check in
/// dimensions where the symbolic route is impractical (N >= 4).
PipelineResult quantize_pipeline(const GradedSpace& space, const IntervalPartition& X,
                                 const TwoForm& D, const std::vector<Rational>& nu,
                                 std::uint64_t seed = 0);

} // namespace drmat

#endif
