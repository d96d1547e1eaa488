#include "drmat/serialize.hpp"

namespace drmat {

using nlohmann::json;

json operator_to_json(const ZeroWeightOp& op, const std::string& kind,
                      const json& metadata)
{
    if (kind != "classical_r" && kind != "quantum_R")
        throw document_error("unknown operator kind: " + kind);
    int N = op.dim();
    json alpha = json::array(), beta = json::array();
    for (int i = 1; i <= N; ++i) {
        json arow = json::array(), brow = json::array();
        for (int j = 1; j <= N; ++j) {
            arow.push_back(op.alpha(i, j).str());
            if (i == j)
                brow.push_back(nullptr);
            else
                brow.push_back(op.beta(i, j).str());
        }
        alpha.push_back(std::move(arow));
        beta.push_back(std::move(brow));
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["m"] = op.space().m();
    doc["n"] = op.space().n();
    doc["parities"] = op.space().parities();
    doc["kind"] = kind;
    doc["alpha"] = std::move(alpha);
    doc["beta"] = std::move(beta);
    doc["step"] = op.step().str();
    doc["metadata"] = metadata.is_null() ? json::object() : metadata;
    return doc;
}

LoadedOperator operator_from_json(const json& doc)
{
    try {
        if (doc.at("schema_version").get<int>() != kSchemaVersion)
            throw document_error("unsupported schema_version");
        std::string kind = doc.at("kind").get<std::string>();
        if (kind != "classical_r" && kind != "quantum_R")
            throw document_error("unknown operator kind: " + kind);
        GradedSpace space = doc.contains("parities")
                                ? GradedSpace(doc.at("parities").get<std::vector<int>>())
                                : GradedSpace(doc.at("m").get<int>(), doc.at("n").get<int>());
        int N = space.dim();
        if (doc.contains("m") &&
            (doc.at("m").get<int>() != space.m() || doc.at("n").get<int>() != space.n()))
            throw document_error("m/n inconsistent with parities");
        const json& alpha = doc.at("alpha");
        const json& beta = doc.at("beta");
        if (static_cast<int>(alpha.size()) != N || static_cast<int>(beta.size()) != N)
            throw document_error("coefficient table has wrong dimensions");
        ZeroWeightOp op{space};
        for (int i = 1; i <= N; ++i) {
            const json& arow = alpha.at(i - 1);
            const json& brow = beta.at(i - 1);
            if (static_cast<int>(arow.size()) != N || static_cast<int>(brow.size()) != N)
                throw document_error("coefficient table has wrong dimensions");
            for (int j = 1; j <= N; ++j) {
                op.alpha(i, j) = parse_expr(arow.at(j - 1).get<std::string>());
                const json& b = brow.at(j - 1);
                if (i == j) {
                    if (!b.is_null()) throw document_error("beta diagonal must be null");
                } else {
                    op.beta(i, j) = parse_expr(b.get<std::string>());
                }
            }
        }
        op.set_step(parse_expr(doc.at("step").get<std::string>()));
        json metadata = doc.contains("metadata") ? doc.at("metadata") : json::object();
        return {std::move(op), std::move(kind), std::move(metadata)};
    } catch (const json::exception& e) {
        throw document_error(std::string("malformed operator document: ") + e.what());
    }
}

json twoform_to_json(const TwoForm& D)
{
    json entries = json::array();
    for (int i = 1; i <= D.N(); ++i)
        for (int j = i + 1; j <= D.N(); ++j)
            if (!D.at(i, j).is_zero())
                entries.push_back({{"i", i}, {"j", j}, {"expr", D.at(i, j).str()}});
    return json{{"n", D.N()}, {"entries", std::move(entries)}};
}

TwoForm twoform_from_json(const json& doc)
{
    try {
        TwoForm D(doc.at("n").get<int>());
        for (const json& e : doc.at("entries"))
            D.set(e.at("i").get<int>(), e.at("j").get<int>(),
                  parse_expr(e.at("expr").get<std::string>()));
        return D;
    } catch (const json::exception& e) {
        throw document_error(std::string("malformed 2-form document: ") + e.what());
    }
}

json multform_to_json(const MultForm& phi)
{
    json entries = json::array();
    for (const auto& [tuple, v] : phi.components()) {
        json t = json::array();
        for (int i : tuple) t.push_back(i);
        entries.push_back({{"indices", std::move(t)}, {"expr", v.str()}});
    }
    return json{{"n", phi.N()}, {"degree", phi.degree()}, {"entries", std::move(entries)}};
}

MultForm multform_from_json(const json& doc)
{
    try {
        MultForm phi(doc.at("n").get<int>(), doc.at("degree").get<int>());
        for (const json& e : doc.at("entries"))
            phi.set(e.at("indices").get<std::vector<int>>(),
                    parse_expr(e.at("expr").get<std::string>()));
        return phi;
    } catch (const json::exception& e) {
        throw document_error(std::string("malformed form document: ") + e.what());
    }
}

void Report::add(const std::string& name, const Residual& r)
{
    Entry e{name, r.passed ? "pass" : "fail", "", r.witnesses};
    if (!r.passed) all_pass_ = false;
    entries_.push_back(std::move(e));
}

void Report::add_pass(const std::string& name)
{
    entries_.push_back({name, "pass", "", {}});
}

void Report::add_fail(const std::string& name, const std::string& detail)
{
    all_pass_ = false;
    entries_.push_back({name, "fail", detail, {}});
}

void Report::add_error(const std::string& name, const std::string& message)
{
    all_pass_ = false;
    entries_.push_back({name, "error", message, {}});
}

json Report::to_json() const
{
    json checks = json::array();
    for (const Entry& e : entries_) {
        json c;
        c["name"] = e.name;
        c["status"] = e.status;
        if (!e.detail.empty()) c["detail"] = e.detail;
        if (!e.witnesses.empty()) {
            json ws = json::array();
            for (const auto& w : e.witnesses)
                ws.push_back({{"row", w.row},
                              {"col", w.col},
                              {"label", w.label},
                              {"value", w.value.str()}});
            c["witnesses"] = std::move(ws);
        }
        checks.push_back(std::move(c));
    }
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    doc["seed"] = seed_;
    doc["checks"] = std::move(checks);
    doc["all_pass"] = all_pass_;
    return doc;
}

} // namespace drmat
