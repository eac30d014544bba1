#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jtlab/commutant.hpp"
#include "jtlab/cover.hpp"
#include "jtlab/errors.hpp"
#include "jtlab/greene.hpp"
#include "jtlab/partition.hpp"
#include "jtlab/poset.hpp"
#include "jtlab/report.hpp"
#include "jtlab/uchains.hpp"
#include "jtlab/verify.hpp"

using namespace jtlab;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kViolation = 2, kCertification = 3 };

struct InvariantFlags {
    bool mu = false, r = false, lambda = false, lambda_u = false, oblak = false;
    bool q_mc = false, q_closed = false, spreads = false, all = false, check_idempotent = false;
    int trials = 3;
    std::uint64_t seed = 0;
};

ReportDocument cmd_invariants(const Partition& P, const InvariantFlags& f)
{
    if (f.trials < 1)
        throw PreconditionError("--trials must be positive");
    ReportDocument doc;
    doc.command = "invariants";
    doc.input = P.parts();
    doc.metadata.seed = f.seed;
    doc.metadata.trials = f.trials;
    auto want = [&](bool flag, const char* name) {
        if (flag || f.all)
            doc.requested.emplace_back(name);
        return flag || f.all;
    };
    auto& res = doc.results;
    if (want(f.mu, "mu")) {
        res.mu = mu(P);
        res.mu_components = mu_components(P);
    }
    if (want(f.r, "r"))
        res.r = r_of(P);
    if (want(f.lambda, "lambda"))
        res.lambda = lambda_of(P).lambda.parts();
    if (want(f.lambda_u, "lambda_u")) {
        auto lu = lambda_u_of(P);
        res.lambda_u = lu.lambda_u.parts();
        res.u = lu.u;
        std::vector<std::vector<int>> specs;
        for (const auto& w : lu.witnesses)
            specs.push_back(w.bases);
        doc.witnesses.uchains = specs;
    }
    if (want(f.oblak, "oblak"))
        res.oblak = oblak_index(P);
    if (want(f.q_mc, "q_mc")) {
        Partition q = q_estimate(P, f.trials, f.seed);
        res.q_mc = q.parts();
        if (f.check_idempotent)
            res.q_idempotent = q_estimate(q, f.trials, f.seed) == q;
    }
    if (want(f.q_closed, "q_closed")) {
        auto cf = q_closed_form(P);
        res.q_closed = cf ? std::optional<std::vector<int>>(cf->parts()) : std::nullopt;
    }
    if (want(f.spreads, "spreads")) {
        std::vector<std::vector<int>> s;
        for (const auto& S : spread_decompose(P).spreads)
            s.push_back(S.parts());
        res.spreads = s;
    }
    return doc;
}

ReportDocument cmd_cover(const Partition& P)
{
    ReportDocument doc;
    doc.command = "cover";
    doc.input = P.parts();
    doc.requested = {"cover"};
    auto F = general_cover(P);
    auto cert = validate_family(build_poset(P), F);
    if (!cert.valid || static_cast<int>(cert.count) != mu(P))
        throw CertificationError("cover of " + to_string(P) + " failed certification: " + cert.failure);
    doc.results.mu = mu(P);
    doc.results.r = r_of(P);
    doc.witnesses.antichains = F.antichains;
    doc.certificate = to_certificate(cert);
    return doc;
}

int cmd_verify(int max_n, int ceiling, int trials, std::uint64_t seed)
{
    if (max_n > ceiling)
        throw PreconditionError("--max-n " + std::to_string(max_n) + " exceeds the ceiling " + std::to_string(ceiling) +
                                " (raise it with --ceiling)");
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.trials = trials;
    opt.seed = seed;
    opt.threads = default_threads();
    auto summary = run_verify(opt);
    ReportDocument doc;
    doc.command = "verify";
    doc.metadata.seed = seed;
    doc.metadata.trials = trials;
    doc.verify = to_report(summary, max_n);
    std::cout << dump(doc);
    for (const auto& c : summary.counterexamples)
        std::cerr << "counterexample: " << c.check << " at " << c.partition << (c.detail.empty() ? "" : ": ")
                  << c.detail << "\n";
    if (summary.certification_failure)
        return kCertification;
    return summary.ok() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jordan types of commuting nilpotent matrices: invariants of the poset D_P"};
    app.require_subcommand(1);

    std::string text;
    InvariantFlags inv;
    auto* invariants = app.add_subcommand("invariants", "compute invariants of a partition");
    invariants->add_option("partition", text, "partition, e.g. \"6^2,4,3,2^3,1\" or \"6 6 4\"")->required();
    invariants->add_flag("--mu", inv.mu, "mu(P) and its spread components");
    invariants->add_flag("--r", inv.r, "r(P), the width of D_P");
    invariants->add_flag("--lambda", inv.lambda, "lambda(P) from maximum chain unions");
    invariants->add_flag("--lambda-u", inv.lambda_u, "lambda_U(P) with witness U-chain specs");
    invariants->add_flag("--oblak", inv.oblak, "Oblak index");
    invariants->add_flag("--q-mc", inv.q_mc, "Q(P) by Monte Carlo over GF(2^61-1)");
    invariants->add_flag("--q-closed", inv.q_closed, "Q(P) by closed form, null where none applies");
    invariants->add_flag("--spreads", inv.spreads, "spread decomposition");
    invariants->add_flag("--all", inv.all, "everything above");
    invariants->add_flag("--check-idempotent", inv.check_idempotent, "also compare Q(Q(P)) with Q(P)");
    invariants->add_option("--trials", inv.trials, "Monte Carlo trials")->capture_default_str();
    invariants->add_option("--seed", inv.seed, "Monte Carlo seed")->capture_default_str();

    bool dot = false, as_json = false;
    auto* poset = app.add_subcommand("poset", "export the poset D_P");
    poset->add_option("partition", text, "partition")->required();
    auto* dot_flag = poset->add_flag("--dot", dot, "Graphviz DOT");
    auto* json_flag = poset->add_flag("--json", as_json, "JSON");
    dot_flag->excludes(json_flag);

    auto* cover = app.add_subcommand("cover", "certified family of mu(P) disjoint maximum antichains");
    cover->add_option("partition", text, "partition")->required();

    int max_n = kVerifyCeiling, ceiling = kVerifyCeiling, trials = 3;
    std::uint64_t seed = 0;
    auto* verify = app.add_subcommand("verify", "sweep all partitions of n <= max-n through every property check");
    verify->add_option("--max-n", max_n, "largest n swept")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--ceiling", ceiling, "upper limit for --max-n")->capture_default_str();
    verify->add_option("--trials", trials, "Monte Carlo trials per partition")->capture_default_str()->check(
        CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();

    try {
        app.parse(argc, argv);
        if (*poset && !dot && !as_json)
            throw CLI::RequiredError("poset: one of --dot or --json");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*invariants) {
            std::cout << dump(cmd_invariants(parse_partition(text), inv));
        } else if (*poset) {
            Partition P = parse_partition(text);
            auto D = build_poset(P);
            if (dot)
                std::cout << export_dot(D);
            else
                std::cout << poset_json(D, P).dump(2) << "\n";
        } else if (*cover) {
            std::cout << dump(cmd_cover(parse_partition(text)));
        } else if (*verify) {
            return cmd_verify(max_n, ceiling, trials, seed);
        }
    } catch (const ParseError& e) {
        std::cerr << "jtlab: " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "jtlab: " << e.what() << "\n";
        return kUsage;
    } catch (const CertificationError& e) {
        std::cerr << "jtlab: certification failure: " << e.what() << "\n";
        return kCertification;
    } catch (const IncomparableTrials& e) {
        std::cerr << "jtlab: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "jtlab: internal error: " << e.what() << "\n";
        return kCertification;
    }
    return kOk;
}
