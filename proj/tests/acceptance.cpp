// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero when a
// criterion fails that is not listed in kKnownUnattainable.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "jtlab/commutant.hpp"
#include "jtlab/cover.hpp"
#include "jtlab/greene.hpp"
#include "jtlab/partition.hpp"
#include "jtlab/poset.hpp"
#include "jtlab/report.hpp"
#include "jtlab/uchains.hpp"
#include "jtlab/verify.hpp"

using namespace jtlab;
using Clock = std::chrono::steady_clock;

namespace {

// Budgets in seconds.
constexpr double kBudgetExample = 1.0;
constexpr double kBudgetClosedForm = 5.0;
constexpr double kBudgetSweep = 600.0;

// Criterion 3b: the expected value (29,22,13,10) sums to 74 but the partition
// has 82 boxes.  See the README.
const std::set<std::string> kKnownUnattainable = {"3b"};

struct Outcome {
    std::string id;
    bool pass;
};
std::vector<Outcome> outcomes;

std::string vec(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string part(const Partition& P) { return vec(P.parts()); }

void report(const std::string& id, bool pass, const std::string& what, double seconds, double budget)
{
    bool in_budget = seconds <= budget;
    char t[64];
    std::snprintf(t, sizeof t, "%.3fs / %.0fs", seconds, budget);
    std::cout << (pass && in_budget ? "PASS " : "FAIL ") << id << ": " << what << " [" << t << "]\n";
    outcomes.push_back({id, pass && in_budget});
}

// Runs body, which fills `what`, and reports it with the elapsed time.
void criterion(const std::string& id, double budget, const std::function<bool(std::string&)>& body)
{
    std::string what;
    auto t0 = Clock::now();
    bool pass = false;
    try {
        pass = body(what);
    } catch (const std::exception& e) {
        what += std::string(" threw: ") + e.what();
    }
    report(id, pass, what, std::chrono::duration<double>(Clock::now() - t0).count(), budget);
}

std::vector<int> lower_bump(int p, int eta, int d, int delta)
{
    std::vector<int> v(p, eta);
    for (int c = d + 1; c <= d + delta; ++c)
        ++v[c - 1];
    return v;
}

std::vector<int> upper_dip(int w, int theta, int d, int eps)
{
    std::vector<int> v(w, theta);
    for (int c = d + 1; c <= d + eps; ++c)
        --v[c - 1];
    return v;
}

std::vector<int> minus(std::vector<int> a, const std::vector<int>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

// Antichain, disjointness and size checks straight from the label order.
bool independent_family_check(const Partition& P, const AntichainFamily& F, std::size_t count, std::string& what)
{
    auto D = build_poset(P);
    int r = r_of(P);
    std::set<PosetVertex> seen;
    bool ok = F.antichains.size() == count;
    for (const auto& A : F.antichains) {
        ok = ok && static_cast<int>(A.size()) == r;
        for (std::size_t i = 0; i < A.size(); ++i) {
            ok = ok && D.contains(A[i]) && seen.insert(A[i]).second;
            for (std::size_t j = 0; j < A.size(); ++j)
                ok = ok && (i == j || !leq_labels(A[i], A[j]));
        }
    }
    auto cert = validate_family(D, F);
    what = std::to_string(F.antichains.size()) + " antichains of size " + std::to_string(cert.antichain_size) +
           " for " + part(P) + ", certificate " + (cert.valid ? "valid" : "invalid: " + cert.failure);
    return ok && cert.valid && cert.count == count;
}

}  // namespace

int main()
{
    criterion("1", kBudgetExample, [](std::string& what) {
        auto lu = lambda_u_of(parse_partition("6^2,4,3,2^3,1"));
        what = "lambda_U(6^2,4,3,2^3,1) = " + part(lu.lambda_u) + ", u = " + vec(lu.u);
        return lu.lambda_u == Partition{15, 8, 3} && lu.u == std::vector<int>{0, 15, 23, 26};
    });

    criterion("2", kBudgetExample, [](std::string& what) {
        auto big = parse_partition("11,10,9^2,8,6,5,3,2,1^2");
        auto comps = mu_components(big);
        int a = mu(big), b = mu(parse_partition("4,3^2")), c = mu(parse_partition("2,1^2")),
            d = mu(parse_partition("6^2,5,4,3^2"));
        what = "mu = " + std::to_string(a) + " with components " + vec(comps) + "; mu(4,3^2) = " + std::to_string(b) +
               ", mu(2,1^2) = " + std::to_string(c) + ", mu(6^2,5,4,3^2) = " + std::to_string(d);
        return a == 1 && comps == std::vector<int>{1, 3, 5} && b == 10 && c == 4 && d == 10;
    });

    criterion("3a", kBudgetClosedForm, [](std::string& what) {
        auto P = parse_partition("8^2,7,6,5^2,3,2^4");
        auto cf = q_closed_form(P);
        auto mc = q_estimate(P, 3, 0);
        what = "Q(8^2,7,6,5^2,3,2^4): closed form " + (cf ? part(*cf) : "none") + ", Monte Carlo " + part(mc) +
               ", index " + std::to_string(mc.largest());
        Partition want{23, 17, 10};
        return cf && *cf == want && mc == want && mc.largest() == 23;
    });

    criterion("3b", kBudgetClosedForm, [](std::string& what) {
        auto P = parse_partition("10^2,9,8,7^2,5,4^4,2^3,1^4");
        auto cf = q_closed_form(P);
        auto mc = q_estimate(P, 3, 0);
        auto lam = lambda_of(P).lambda;
        auto lu = lambda_u_of(P).lambda_u;
        Partition want{29, 22, 13, 10};
        what = "Q(10^2,9,8,7^2,5,4^4,2^3,1^4): closed form " + (cf ? part(*cf) : "none") + ", Monte Carlo " +
               part(mc) + ", lambda " + part(lam) + ", lambda_U " + part(lu) + "; expected " + part(want) +
               " has sum " + std::to_string(want.total()) + " but |P| = " + std::to_string(P.total());
        return cf && *cf == want && mc == want;
    });

    criterion("4a", kBudgetExample, [](std::string& what) {
        auto P = parse_partition("6^2,5,4,3^2");
        return independent_family_check(P, general_cover(P), 10, what);
    });
    criterion("4b", kBudgetExample, [](std::string& what) {
        auto P = parse_partition("10,9,6^2,5,4,3^2");
        return independent_family_check(P, general_cover(P), 10, what);
    });
    criterion("4c", kBudgetExample, [](std::string& what) {
        auto P = parse_partition("4^2,2,1^2");
        return independent_family_check(P, general_cover(P), 4, what);
    });

    criterion("5", kBudgetExample, [](std::string& what) {
        bool ok = true;
        std::ostringstream os;
        {
            const int p = 6, eta = 4, delta = 2, d = 2, theta = 1;
            const auto X = lower_bump(p, eta, d, delta);
            struct Row {
                int g;
                char which;
                std::vector<int> residual;
            };
            for (const Row& row : {Row{7, 'a', {2, 2, 3, 2, 2, 2}}, Row{9, 'b', {1, 2, 2, 2, 2, 2}},
                                   Row{11, 'c', {1, 1, 2, 2, 2, 1}}}) {
                auto m = match_theta_le_eta(p, row.g, eta, theta, delta, d);
                int a = m.a, b = m.b;
                std::vector<int> table;
                if (row.which == 'a')
                    table = lower_bump(p, eta - theta - a, d, delta - b);
                else if (row.which == 'b')
                    table = lower_bump(p, eta - theta - a - 1, b - delta, p - b + delta);
                else
                    table = lower_bump(p, eta - theta - a - 1, d, p - b + delta);
                auto res = minus(X, m.lower_used);
                bool r = match_case_letter(m.which) == row.which &&
                         static_cast<int>(m.pairs.size()) == theta * (p + row.g) && res == table && res == row.residual;
                os << "g=" << row.g << " case " << match_case_letter(m.which) << " " << m.pairs.size() << " pairs "
                   << vec(res) << (r ? "" : " MISMATCH") << "; ";
                ok = ok && r;
            }
        }
        {
            const int p = 2, g = 6, d = 2, eps = 3, theta = 2, w = p + g;
            const auto Y = upper_dip(w, theta, d, eps);
            struct Row {
                int eta;
                char which;
                std::vector<int> residual;
            };
            for (const Row& row : {Row{3, 'a', {1, 1, 0, 1, 1, 1, 1, 1}}, Row{2, 'b', {2, 1, 1, 1, 1, 1, 1, 1}},
                                   Row{1, 'c', {2, 2, 1, 1, 1, 1, 1, 2}}}) {
                auto m = match_eta_le_theta(p, g, row.eta, theta, eps, d);
                int a = m.a, b = m.b;
                std::vector<int> table;
                if (row.which == 'a')
                    table = upper_dip(w, theta - a, d, eps - b);
                else if (row.which == 'b')
                    table = upper_dip(w, theta - a + 1, b - eps, w - b + eps);
                else
                    table = upper_dip(w, theta - a + 1, d, w - b + eps);
                auto res = minus(Y, m.upper_used);
                bool r = match_case_letter(m.which) == row.which &&
                         static_cast<int>(m.pairs.size()) == p * row.eta && res == table && res == row.residual;
                os << "eta=" << row.eta << " case " << match_case_letter(m.which) << " " << m.pairs.size()
                   << " pairs " << vec(res) << (r ? "" : " MISMATCH") << "; ";
                ok = ok && r;
            }
        }
        what = os.str();
        return ok;
    });

    VerifySummary sweep;
    {
        VerifyOptions opt;
        opt.max_n = 12;
        opt.trials = 3;
        opt.seed = 0;
        opt.threads = 1;
        auto t0 = Clock::now();
        std::string err;
        try {
            sweep = run_verify(opt);
        } catch (const std::exception& e) {
            err = e.what();
        }
        double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        auto all_pass = [&](std::initializer_list<const char*> names, std::size_t expected_runs) {
            for (const char* name : names) {
                auto it = sweep.checks.find(name);
                if (it == sweep.checks.end() || it->second.failed != 0 || it->second.passed != expected_runs)
                    return false;
            }
            return true;
        };
        std::size_t n = sweep.partitions;
        std::string base = err.empty() ? std::to_string(n) + " partitions, single worker" : "threw: " + err;
        report("6", err.empty() && n == 271 && sweep.ok(), base + ", " + std::to_string(sweep.counterexamples.size()) +
                                                             " counterexamples", secs, kBudgetSweep);
        report("6i", all_pass({"greene.min_equals_mu", "uchains.profile", "commutant.min_equals_mu"}, n),
               "min lambda = min lambda_U = mu", secs, kBudgetSweep);
        report("6ii", all_pass({"greene.parts_equal_r", "uchains.profile", "partition.r_bruteforce"}, n),
               "parts(lambda) = parts(lambda_U) = r", secs, kBudgetSweep);
        report("6iii",
               all_pass({"commutant.sandwich", "commutant.min_equals_mu", "commutant.parts_equal_r",
                         "commutant.index_equals_oblak"},
                        n),
               "lambda_U <= Q_MC <= lambda, min Q_MC = mu, max Q_MC = Oblak index", secs, kBudgetSweep);
        report("6iv", all_pass({"cover.valid_mu_family"}, n), "general_cover valid with mu antichains", secs,
               kBudgetSweep);
        report("6v", all_pass({"greene.conjugacy"}, 138), "Greene conjugacy for the 138 partitions with n <= 10",
               secs, kBudgetSweep);
        auto it = sweep.checks.find("commutant.closed_form");
        report("6vi", it != sweep.checks.end() && it->second.failed == 0 && it->second.passed > 0,
               "closed form = Q_MC on " + std::to_string(it == sweep.checks.end() ? 0 : it->second.passed) +
                   " partitions where defined",
               secs, kBudgetSweep);
        for (const auto& c : sweep.counterexamples)
            std::cout << "  counterexample " << c.check << " at " << c.partition << ": " << c.detail << "\n";
    }

    criterion("7", 2 * kBudgetSweep, [](std::string& what) {
        auto run = [](unsigned threads) {
            VerifyOptions opt;
            opt.max_n = 12;
            opt.trials = 3;
            opt.seed = 7;
            opt.threads = threads;
            ReportDocument doc;
            doc.command = "verify";
            doc.metadata.seed = 7;
            doc.metadata.trials = 3;
            doc.verify = to_report(run_verify(opt), 12);
            return dump(doc);
        };
        std::string a = run(1), b = run(4);
        what = "two verify summaries (1 and 4 workers, seed 7), " + std::to_string(a.size()) + " bytes, " +
               (a == b ? "identical" : "different");
        return a == b;
    });

    int unexpected = 0, known = 0, passed = 0;
    for (const auto& o : outcomes) {
        if (o.pass)
            ++passed;
        else if (kKnownUnattainable.count(o.id))
            ++known;
        else
            ++unexpected;
    }
    std::cout << "SUMMARY: " << passed << " PASS, " << known + unexpected << " FAIL (" << known
              << " documented as unattainable)\n";
    return unexpected == 0 ? 0 : 1;
}
