/**
 * Acceptance gate: one line per criterion, pass/fail, with check counts and
 * wall times.  Exits nonzero when any criterion fails.  Criteria that carry
 * a runtime target enforce it here.
 */
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "w22/suites.hpp"

using namespace w22;

namespace {

std::size_t workers() {
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs the checks of `suite` whose ids start with `prefix`; counts and
/// wall-clock time come back through the out-params.
SuiteRun run_filtered(const std::string& suite, const std::string& prefix,
                      const RunConfig& cfg, double& wall_ms) {
    std::vector<CheckJob> jobs = build_suite(suite, cfg);
    if (!prefix.empty())
        std::erase_if(jobs,
                      [&](const CheckJob& j) { return j.check_id.rfind(prefix, 0) != 0; });
    auto t0 = std::chrono::steady_clock::now();
    SuiteRun run = execute_jobs(suite, std::move(jobs), cfg.seed, workers());
    wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
    return run;
}

bool clean(const SuiteRun& run) { return run.failed == 0 && run.skipped == 0; }

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s (%s)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass)
        ++failures;
}

std::string detail(const SuiteRun& run, double wall_ms) {
    std::ostringstream out;
    out << run.checks.size() << " checks, " << run.passed << " passed";
    if (run.failed > 0)
        out << ", " << run.failed << " FAILED";
    if (run.skipped > 0)
        out << ", " << run.skipped << " skipped";
    out << ", " << static_cast<long>(wall_ms) << " ms";
    return out.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

int main() {
    RunConfig cfg = RunConfig::defaults();
    double ms = 0;

    {
        SuiteRun run = run_filtered("axioms", "axioms/lie/", cfg, ms);
        report(1, "Lie bracket axioms on all generator triples, |index| <= 4",
               clean(run) && run.checks.size() == 4 && ms < 5000, detail(run, ms));
    }
    {
        SuiteRun run = run_filtered("axioms", "axioms/module/", cfg, ms);
        std::size_t omega2 = 0, omega3 = 0, verma = 0, tensor = 0;
        for (const auto& c : run.checks) {
            omega2 += c.check_id.rfind("axioms/module/omega2/", 0) == 0;
            omega3 += c.check_id.rfind("axioms/module/omega3/", 0) == 0;
            verma += c.check_id.rfind("axioms/module/verma/", 0) == 0;
            tensor += c.check_id.rfind("axioms/module/tensor/", 0) == 0;
        }
        bool coverage = omega2 >= 3 && omega3 >= 3 && verma >= 3 && tensor >= 3;
        report(2, "module actions respect xy - yx = [x,y] on every module type",
               clean(run) && coverage && ms < 60000, detail(run, ms));
    }
    {
        SuiteRun run = run_filtered("determinant", "determinant/equality/", cfg, ms);
        report(3, "block determinant closed form equals elimination, shapes <= 5",
               clean(run) && run.checks.size() == 31 && ms < 30000, detail(run, ms));
    }
    {
        SuiteRun run = run_filtered("hom", "", cfg, ms);
        report(4, "intertwiner dimensions match the classification matrix",
               clean(run) && run.checks.size() >= 12, detail(run, ms));
    }
    {
        SuiteRun norm = run_filtered("q-identity", "q-identity/normalization/", cfg, ms);
        double ms2 = 0;
        SuiteRun coeff = run_filtered("q-identity", "q-identity/tensor-coefficient/", cfg, ms2);
        report(5, "quadratic element fixes the module and its t1 t2 coefficient matches",
               clean(norm) && norm.checks.size() >= 6 && clean(coeff) &&
                   coeff.checks.size() >= 2,
               detail(norm, ms) + " / " + detail(coeff, ms2));
    }
    {
        SuiteRun red = run_filtered("tensor-simplicity", "tensor-simplicity/reductions/", cfg, ms);
        double ms2 = 0;
        SuiteRun reach = run_filtered("tensor-simplicity", "tensor-simplicity/reach/", cfg, ms2);
        report(6, "reduction spans and vacuum generation on randomized instances",
               clean(red) && red.checks.size() >= 10 && clean(reach) &&
                   !reach.checks.empty() && ms + ms2 < 120000,
               detail(red, ms) + " / " + detail(reach, ms2));
    }
    {
        SuiteRun run = run_filtered("degenerate", "", cfg, ms);
        report(7, "coincident parameters yield a closed proper submodule",
               clean(run) && run.checks.size() >= 3, detail(run, ms));
    }
    {
        SuiteRun nos = run_filtered("rg", "rg/no-s/", cfg, ms);
        double ms2 = 0;
        SuiteRun withs = run_filtered("rg", "rg/with-s/", cfg, ms2);
        report(8, "rank invariant: m+1 without s-dependence, larger with it",
               clean(nos) && nos.checks.size() >= 10 && clean(withs) &&
                   withs.checks.size() >= 10,
               detail(nos, ms) + " / " + detail(withs, ms2));
    }
    {
        SuiteRun run = run_filtered("q-identity", "q-identity/non-weight/", cfg, ms);
        report(9, "L_0 strictly raises the lexicographic degree",
               clean(run) && run.checks.size() >= 20, detail(run, ms));
    }
    {
        SuiteRun sep = run_filtered("fingerprint", "fingerprint/separation/", cfg, ms);
        double ms2 = 0;
        SuiteRun perm = run_filtered("fingerprint", "fingerprint/permutation/", cfg, ms2);
        report(10, "fingerprints separate parameter sets and ignore slot order",
               clean(sep) && sep.checks.size() >= 10 && clean(perm) && perm.checks.size() >= 2,
               detail(sep, ms) + " / " + detail(perm, ms2));
    }
    {
        std::string a = "/tmp/w22-acceptance-a.json";
        std::string b = "/tmp/w22-acceptance-b.json";
        std::string cmd = std::string(W22_CLI_PATH) + " verify all --seed 7 --jobs " +
                          std::to_string(workers());
        auto t0 = std::chrono::steady_clock::now();
        int ra = std::system((cmd + " --out " + a + " 2>/dev/null").c_str());
        auto t1 = std::chrono::steady_clock::now();
        int rb = std::system((cmd + " --out " + b + " 2>/dev/null").c_str());
        auto t2 = std::chrono::steady_clock::now();
        double run1 = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double run2 = std::chrono::duration<double, std::milli>(t2 - t1).count();
        std::string ta = slurp(a), tb = slurp(b);
        bool ok = WEXITSTATUS(ra) == 0 && WEXITSTATUS(rb) == 0 && !ta.empty() && ta == tb &&
                  run1 < 300000 && run2 < 300000;
        std::ostringstream d;
        d << "two full runs, " << static_cast<long>(run1) << " ms and "
          << static_cast<long>(run2) << " ms, "
          << (ta == tb && !ta.empty() ? "byte-identical" : "MISMATCH");
        report(11, "repeated full verification is byte-identical and under 5 minutes", ok,
               d.str());
        std::remove(a.c_str());
        std::remove(b.c_str());
    }

    if (failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
