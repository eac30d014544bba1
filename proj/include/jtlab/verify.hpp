#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "commutant.hpp"
#include "cover.hpp"
#include "errors.hpp"
#include "greene.hpp"
#include "oracles.hpp"
#include "partition.hpp"
#include "poset.hpp"
#include "uchains.hpp"

namespace jtlab {

inline constexpr int kVerifyCeiling = 12;

struct VerifyOptions {
    int max_n = kVerifyCeiling;
    int trials = 3;
    std::uint64_t seed = 0;
    int bruteforce_max_n = 10;  // Greene conjugacy and dominance axioms
    unsigned threads = 1;
};

struct CheckTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct Counterexample {
    std::string check;
    std::string partition;
    std::string detail;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerifySummary {
    std::vector<std::size_t> partitions_per_n;  // index n - 1
    std::size_t partitions = 0;
    std::map<std::string, CheckTally> checks;
    std::vector<Counterexample> counterexamples;
    bool certification_failure = false;

    bool ok() const { return counterexamples.empty(); }
};

// Worker count from JTLAB_THREADS, else the hardware concurrency.
inline unsigned default_threads()
{
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("JTLAB_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v >= 1)
            return std::min<unsigned>(static_cast<unsigned>(v), hw);
    }
    return hw;
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body)
{
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
                body(i);
        });
    for (auto& th : pool)
        th.join();
}

namespace detail {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
    bool certification = false;
};

class CheckLog {
public:
    void expect(const std::string& name, bool ok, const std::string& detail = {})
    {
        results.push_back({name, ok, ok ? std::string() : detail});
    }

    // Runs fn; an exception counts as a failure of `name`.
    void guarded(const std::string& name, const std::function<void()>& fn)
    {
        try {
            fn();
        } catch (const CertificationError& e) {
            results.push_back({name, false, e.what(), true});
        } catch (const std::exception& e) {
            results.push_back({name, false, e.what()});
        }
    }

    std::vector<CheckResult> results;
};

inline std::string str(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

inline void verify_partition(const Partition& P, const VerifyOptions& opt, CheckLog& log)
{
    const int n = P.total();
    const int r = r_of(P);
    const int m = mu(P);

    log.expect("partition.conjugate_involution", conjugate(conjugate(P)) == P);
    log.guarded("partition.spread_decomposition", [&] {
        auto sd = spread_decompose(P);
        std::vector<int> all;
        bool ok = true;
        for (std::size_t k = 0; k < sd.spreads.size(); ++k) {
            ok = ok && is_spread(sd.spreads[k]);
            if (k + 1 < sd.spreads.size())
                ok = ok && sd.spreads[k].smallest() >= sd.spreads[k + 1].largest() + 2;
            all.insert(all.end(), sd.spreads[k].parts().begin(), sd.spreads[k].parts().end());
        }
        log.expect("partition.spread_decomposition", ok && Partition(all) == P, to_string(P));
    });
    log.expect("partition.r_bruteforce", oracle::r_bruteforce(P) == r,
               "brute force " + std::to_string(oracle::r_bruteforce(P)) + " vs " + std::to_string(r));
    {
        auto d = P.distinct();
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] - d[i] < 2)
                continue;
            std::vector<int> lo, hi;
            for (int p : P.parts())
                (p <= d[i] ? lo : hi).push_back(p);
            Partition Pl(lo), Ph(hi);
            int expect = std::min(mu(Pl), mu(shift_down(Ph, 2 * r_of(Pl))));
            log.expect("partition.mu_union_rule", m == expect,
                       "split at " + std::to_string(d[i]) + ": " + std::to_string(m) + " vs " + std::to_string(expect));
        }
    }

    PartitionPoset D = build_poset(P);
    log.expect("poset.vertex_count", static_cast<int>(D.size()) == n);
    {
        auto bad = oracle::closure_mismatch(D);
        log.expect("poset.closure_matches_order", bad.empty(), bad);
        bad = oracle::cover_not_minimal(D);
        log.expect("poset.covers_minimal", bad.empty(), bad);
    }

    ChainUnionProfile lam;
    bool have_lambda = false;
    log.guarded("greene.lambda", [&] {
        lam = lambda_of(P);
        have_lambda = true;
    });
    OrderRelation R = OrderRelation::of(D);
    if (have_lambda) {
        int width = max_antichain_size(R);
        log.expect("greene.parts_equal_r", static_cast<int>(lam.lambda.length()) == r && width == r,
                   "parts " + std::to_string(lam.lambda.length()) + ", width " + std::to_string(width) + ", r " +
                       std::to_string(r));
        log.expect("greene.min_equals_mu", lam.lambda.smallest() == m,
                   "min " + std::to_string(lam.lambda.smallest()) + " vs mu " + std::to_string(m));
        if (n <= opt.bruteforce_max_n) {
            auto a = antichain_union_profile_bruteforce(R);
            std::vector<int> diffs;
            for (std::size_t k = 1; k < a.size(); ++k)
                diffs.push_back(a[k] - a[k - 1]);
            Partition conj = conjugate(lam.lambda);
            log.expect("greene.conjugacy", Partition(diffs) == conj,
                       "antichain increments " + str(diffs) + " vs conjugate " + to_string(conj));
        }
    }

    UChainProfile lu;
    bool have_lu = false;
    log.guarded("uchains.lambda_u", [&] {
        lu = lambda_u_of(P);
        have_lu = true;
    });
    {
        auto [lo, hi] = uchain_base_range(P);
        bool ok = true;
        std::string why;
        for (int a = lo; a <= hi && ok; ++a) {
            int f = simple_uchain_size(P, a);
            int c = static_cast<int>(u_chain_vertices(D, {{a}}).size());
            if (f != c) {
                ok = false;
                why = "a=" + std::to_string(a) + ": formula " + std::to_string(f) + " vs count " + std::to_string(c);
            }
        }
        log.expect("uchains.simple_size_formula", ok, why);
    }
    if (have_lu) {
        bool chains_ok = true;
        for (const auto& w : lu.witnesses) {
            std::set<PosetVertex> seen;
            for (int i = 1; i <= static_cast<int>(w.bases.size()); ++i) {
                auto S = u_chain_component(D, w, i);
                for (std::size_t x = 0; x < S.size(); ++x) {
                    chains_ok = chains_ok && seen.insert(S[x]).second;
                    for (std::size_t y = x + 1; y < S.size(); ++y)
                        chains_ok = chains_ok && (leq(D, S[x], S[y]) || leq(D, S[y], S[x]));
                }
            }
        }
        log.expect("uchains.chains_disjoint", chains_ok);
        log.expect("uchains.profile",
                   static_cast<int>(lu.lambda_u.length()) == r && lu.lambda_u.total() == n &&
                       lu.lambda_u.smallest() == m,
                   "lambda_u " + to_string(lu.lambda_u) + ", r " + std::to_string(r) + ", mu " + std::to_string(m));
        if (have_lambda)
            log.expect("uchains.dominated_by_lambda", dominance_leq(lu.lambda_u, lam.lambda),
                       to_string(lu.lambda_u) + " vs " + to_string(lam.lambda));
    }

    log.guarded("cover.valid_mu_family", [&] {
        auto F = general_cover(P);
        auto cert = validate_family(D, F);
        log.expect("cover.valid_mu_family", cert.valid && static_cast<int>(cert.count) == m,
                   cert.failure + " count " + std::to_string(cert.count));
    });

    log.guarded("commutant.q_estimate", [&] {
        Partition q = q_estimate(P, opt.trials, opt.seed);
        if (have_lu && have_lambda)
            log.expect("commutant.sandwich", dominance_leq(lu.lambda_u, q) && dominance_leq(q, lam.lambda),
                       to_string(lu.lambda_u) + " <= " + to_string(q) + " <= " + to_string(lam.lambda));
        log.expect("commutant.min_equals_mu", q.smallest() == m, to_string(q));
        log.expect("commutant.parts_equal_r", static_cast<int>(q.length()) == r, to_string(q));
        log.expect("commutant.index_equals_oblak", q.largest() == oblak_index(P),
                   to_string(q) + " vs oblak " + std::to_string(oblak_index(P)));
        if (auto cf = q_closed_form(P))
            log.expect("commutant.closed_form", *cf == q, to_string(*cf) + " vs " + to_string(q));
    });
}

inline void verify_dominance_axioms(const std::vector<Partition>& all, CheckLog& log)
{
    bool ok = true;
    std::string why;
    for (const auto& a : all) {
        ok = ok && dominance_leq(a, a);
        for (const auto& b : all) {
            bool ab = dominance_leq(a, b);
            if (ab && dominance_leq(b, a) && !(a == b)) {
                ok = false;
                why = to_string(a) + " and " + to_string(b) + " dominate each other";
            }
            if (!ab)
                continue;
            for (const auto& c : all)
                if (dominance_leq(b, c) && !dominance_leq(a, c)) {
                    ok = false;
                    why = "transitivity fails at " + to_string(a) + ", " + to_string(b) + ", " + to_string(c);
                }
        }
    }
    log.expect("partition.dominance_partial_order", ok, why);
}

}  // namespace detail

inline VerifySummary run_verify(const VerifyOptions& opt)
{
    if (opt.max_n < 1)
        throw PreconditionError("verify: max-n must be at least 1");
    if (opt.trials < 1)
        throw PreconditionError("verify: trials must be positive");
    struct Task {
        Partition P;
        int n;
        bool dominance;
    };
    std::vector<Task> tasks;
    VerifySummary summary;
    for (int n = 1; n <= opt.max_n; ++n) {
        auto all = all_partitions(n);
        summary.partitions_per_n.push_back(all.size());
        summary.partitions += all.size();
        for (auto& P : all)
            tasks.push_back({std::move(P), n, false});
        if (n <= opt.bruteforce_max_n)
            tasks.push_back({Partition{}, n, true});
    }
    std::vector<detail::CheckLog> logs(tasks.size());
    parallel_for(tasks.size(), opt.threads, [&](std::size_t i) {
        const auto& t = tasks[i];
        if (t.dominance)
            detail::verify_dominance_axioms(all_partitions(t.n), logs[i]);
        else
            logs[i].guarded("internal", [&] { detail::verify_partition(t.P, opt, logs[i]); });
    });
    for (std::size_t i = 0; i < tasks.size(); ++i)
        for (const auto& r : logs[i].results) {
            auto& tally = summary.checks[r.name];
            if (r.ok) {
                ++tally.passed;
            } else {
                ++tally.failed;
                summary.certification_failure = summary.certification_failure || r.certification;
                summary.counterexamples.push_back(
                    {r.name, tasks[i].dominance ? "n=" + std::to_string(tasks[i].n) : to_string(tasks[i].P), r.detail});
            }
        }
    return summary;
}

}  // namespace jtlab
