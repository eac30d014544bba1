#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "commutant.hpp"
#include "cover.hpp"
#include "partition.hpp"
#include "poset.hpp"
#include "prime_field.hpp"
#include "verify.hpp"

namespace jtlab {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaId = "jtlab-report/1";

struct ReportMetadata {
    std::string version = kVersion;
    std::uint64_t prime = gf::kModulus;
    std::string rng = SplitMix64::name;
    std::uint64_t seed = 0;
    int trials = 3;
    friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

struct InvariantResults {
    std::optional<int> mu;
    std::optional<std::vector<int>> mu_components;
    std::optional<int> r;
    std::optional<std::vector<int>> lambda;
    std::optional<std::vector<int>> lambda_u;
    std::optional<std::vector<int>> u;
    std::optional<int> oblak;
    std::optional<std::vector<int>> q_mc;
    // Present but null when no closed form applies.
    std::optional<std::optional<std::vector<int>>> q_closed;
    std::optional<std::vector<std::vector<int>>> spreads;
    std::optional<bool> q_idempotent;
    friend bool operator==(const InvariantResults&, const InvariantResults&) = default;
};

struct CoverCertificate {
    bool valid = false;
    bool disjoint = false;
    bool antichains = false;
    bool sizes = false;
    std::size_t count = 0;
    int antichain_size = 0;
    friend bool operator==(const CoverCertificate&, const CoverCertificate&) = default;
};

struct ReportWitnesses {
    std::optional<std::vector<std::vector<int>>> uchains;
    std::optional<std::vector<std::vector<PosetVertex>>> antichains;
    friend bool operator==(const ReportWitnesses&, const ReportWitnesses&) = default;
};

struct VerifyReport {
    int max_n = 0;
    std::size_t partitions = 0;
    std::vector<std::size_t> partitions_per_n;
    std::map<std::string, CheckTally> checks;
    std::vector<Counterexample> counterexamples;
    bool ok = true;
    friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

struct ReportDocument {
    std::string schema = kSchemaId;
    std::string command;
    std::optional<std::vector<int>> input;
    std::vector<std::string> requested;
    InvariantResults results;
    ReportWitnesses witnesses;
    std::optional<CoverCertificate> certificate;
    std::optional<VerifyReport> verify;
    ReportMetadata metadata;
    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

using nlohmann::json;

namespace detail {

template <class T>
void put(json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
}

template <class T>
void get(const json& j, const char* key, std::optional<T>& v)
{
    if (auto it = j.find(key); it != j.end())
        v = it->template get<T>();
    else
        v.reset();
}

}  // namespace detail

inline void to_json(json& j, const PosetVertex& v) { j = json::array({v.u, v.p, v.k}); }

inline void from_json(const json& j, PosetVertex& v)
{
    if (!j.is_array() || j.size() != 3)
        throw json::type_error::create(302, "vertex must be a [u,p,k] triple", &j);
    v = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

inline void to_json(json& j, const ReportMetadata& m)
{
    j = {{"version", m.version}, {"prime", m.prime}, {"rng", m.rng}, {"seed", m.seed}, {"trials", m.trials}};
}

inline void from_json(const json& j, ReportMetadata& m)
{
    j.at("version").get_to(m.version);
    j.at("prime").get_to(m.prime);
    j.at("rng").get_to(m.rng);
    j.at("seed").get_to(m.seed);
    j.at("trials").get_to(m.trials);
}

inline void to_json(json& j, const InvariantResults& r)
{
    j = json::object();
    detail::put(j, "mu", r.mu);
    detail::put(j, "mu_components", r.mu_components);
    detail::put(j, "r", r.r);
    detail::put(j, "lambda", r.lambda);
    detail::put(j, "lambda_u", r.lambda_u);
    detail::put(j, "u", r.u);
    detail::put(j, "oblak", r.oblak);
    detail::put(j, "q_mc", r.q_mc);
    if (r.q_closed)
        j["q_closed"] = *r.q_closed ? json(**r.q_closed) : json(nullptr);
    detail::put(j, "spreads", r.spreads);
    detail::put(j, "q_idempotent", r.q_idempotent);
}

inline void from_json(const json& j, InvariantResults& r)
{
    detail::get(j, "mu", r.mu);
    detail::get(j, "mu_components", r.mu_components);
    detail::get(j, "r", r.r);
    detail::get(j, "lambda", r.lambda);
    detail::get(j, "lambda_u", r.lambda_u);
    detail::get(j, "u", r.u);
    detail::get(j, "oblak", r.oblak);
    detail::get(j, "q_mc", r.q_mc);
    if (auto it = j.find("q_closed"); it != j.end())
        r.q_closed = it->is_null() ? std::optional<std::vector<int>>() : it->get<std::vector<int>>();
    else
        r.q_closed.reset();
    detail::get(j, "spreads", r.spreads);
    detail::get(j, "q_idempotent", r.q_idempotent);
}

inline void to_json(json& j, const CoverCertificate& c)
{
    j = {{"valid", c.valid},   {"disjoint", c.disjoint}, {"antichains", c.antichains},
         {"sizes", c.sizes},   {"count", c.count},       {"antichain_size", c.antichain_size}};
}

inline void from_json(const json& j, CoverCertificate& c)
{
    j.at("valid").get_to(c.valid);
    j.at("disjoint").get_to(c.disjoint);
    j.at("antichains").get_to(c.antichains);
    j.at("sizes").get_to(c.sizes);
    j.at("count").get_to(c.count);
    j.at("antichain_size").get_to(c.antichain_size);
}

inline void to_json(json& j, const ReportWitnesses& w)
{
    j = json::object();
    detail::put(j, "uchains", w.uchains);
    detail::put(j, "antichains", w.antichains);
}

inline void from_json(const json& j, ReportWitnesses& w)
{
    detail::get(j, "uchains", w.uchains);
    detail::get(j, "antichains", w.antichains);
}

inline void to_json(json& j, const CheckTally& t) { j = {{"passed", t.passed}, {"failed", t.failed}}; }

inline void from_json(const json& j, CheckTally& t)
{
    j.at("passed").get_to(t.passed);
    j.at("failed").get_to(t.failed);
}

inline void to_json(json& j, const Counterexample& c)
{
    j = {{"check", c.check}, {"partition", c.partition}, {"detail", c.detail}};
}

inline void from_json(const json& j, Counterexample& c)
{
    j.at("check").get_to(c.check);
    j.at("partition").get_to(c.partition);
    j.at("detail").get_to(c.detail);
}

inline void to_json(json& j, const VerifyReport& v)
{
    j = {{"max_n", v.max_n},
         {"partitions", v.partitions},
         {"partitions_per_n", v.partitions_per_n},
         {"checks", v.checks},
         {"counterexamples", v.counterexamples},
         {"ok", v.ok}};
}

inline void from_json(const json& j, VerifyReport& v)
{
    j.at("max_n").get_to(v.max_n);
    j.at("partitions").get_to(v.partitions);
    j.at("partitions_per_n").get_to(v.partitions_per_n);
    j.at("checks").get_to(v.checks);
    j.at("counterexamples").get_to(v.counterexamples);
    j.at("ok").get_to(v.ok);
}

inline void to_json(json& j, const ReportDocument& d)
{
    j = {{"schema", d.schema}, {"command", d.command}};
    if (d.input)
        j["input"] = *d.input;
    j["requested"] = d.requested;
    j["results"] = d.results;
    j["witnesses"] = d.witnesses;
    detail::put(j, "certificate", d.certificate);
    detail::put(j, "verify", d.verify);
    j["metadata"] = d.metadata;
}

inline void from_json(const json& j, ReportDocument& d)
{
    j.at("schema").get_to(d.schema);
    if (d.schema != kSchemaId)
        throw ParseError("report: unsupported schema '" + d.schema + "'");
    j.at("command").get_to(d.command);
    detail::get(j, "input", d.input);
    j.at("requested").get_to(d.requested);
    j.at("results").get_to(d.results);
    j.at("witnesses").get_to(d.witnesses);
    detail::get(j, "certificate", d.certificate);
    detail::get(j, "verify", d.verify);
    j.at("metadata").get_to(d.metadata);
}

inline std::string dump(const ReportDocument& d) { return json(d).dump(2) + "\n"; }

inline ReportDocument parse_report(const std::string& text)
{
    try {
        return json::parse(text).get<ReportDocument>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

inline CoverCertificate to_certificate(const FamilyCertificate& c)
{
    return {c.valid, c.disjoint, c.antichains, c.sizes, c.count, c.antichain_size};
}

inline VerifyReport to_report(const VerifySummary& s, int max_n)
{
    return {max_n, s.partitions, s.partitions_per_n, s.checks, s.counterexamples, s.ok()};
}

// The poset document is plain JSON rather than a ReportDocument.
inline json poset_json(const PartitionPoset& D, const Partition& P)
{
    json edges = json::array();
    for (const auto& e : D.cover_edges())
        edges.push_back({{"source", D.vertices()[e.source]},
                         {"target", D.vertices()[e.target]},
                         {"kind", edge_kind_name(e.kind)}});
    return {{"schema", kSchemaId},
            {"command", "poset"},
            {"input", P.parts()},
            {"vertices", D.vertices()},
            {"edges", edges},
            {"metadata", ReportMetadata{}}};
}

}  // namespace jtlab
