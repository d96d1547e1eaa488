#ifndef DRMAT_SERIALIZE_HPP
#define DRMAT_SERIALIZE_HPP

#include "drmat/pipeline.hpp"

#include "json.hpp"

#include <string>

namespace drmat {

struct document_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "drmat";
inline constexpr const char* kToolVersion = "1.0.0";

/// Operator document: schema_version, m, n, parities, kind
/// ("classical_r" | "quantum_R"), alpha (N x N expression strings), beta
/// (N x N, diagonal null), step, metadata (free-form object).
nlohmann::json operator_to_json(const ZeroWeightOp& op, const std::string& kind,
                                const nlohmann::json& metadata);

struct LoadedOperator {
    ZeroWeightOp op;
    std::string kind;
    nlohmann::json metadata;
};
LoadedOperator operator_from_json(const nlohmann::json& doc);

/// Antisymmetric 2-form document: {"n": N, "entries": [{"i","j","expr"}]}.
nlohmann::json twoform_to_json(const TwoForm& D);
TwoForm twoform_from_json(const nlohmann::json& doc);

/// Multiplicative 2-form document, same entry layout as twoform.
nlohmann::json multform_to_json(const MultForm& phi);
MultForm multform_from_json(const nlohmann::json& doc);

/// Report document builder: deterministic field order (alphabetical keys),
/// one entry per check with status pass/fail/error and lex-least witnesses.
class Report {
public:
    explicit Report(std::uint64_t seed) : seed_(seed) {}

    void add(const std::string& name, const Residual& r);
    void add_pass(const std::string& name);
    void add_fail(const std::string& name, const std::string& detail);
    void add_error(const std::string& name, const std::string& message);

    bool all_pass() const { return all_pass_; }
    nlohmann::json to_json() const;

private:
    struct Entry {
        std::string name, status, detail;
        std::vector<Residual::Witness> witnesses;
    };
    std::uint64_t seed_;
    bool all_pass_ = true;
    std::vector<Entry> entries_;
};

} // namespace drmat

#endif
