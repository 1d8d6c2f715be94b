#include "romanovski/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

#include "romanovski/auxiliary.hpp"
#include "romanovski/classical.hpp"
#include "romanovski/qfamily.hpp"
#include "romanovski/quadrature.hpp"
#include "romanovski/weight_ring.hpp"

namespace romanovski {

namespace {

// Sampled parameters keep numerators in [-6,6] and denominators in [1,4]
// so exact trials stay fast and runs reproduce from the seed alone.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    Rational rational() {
        const long num = static_cast<long>(rng_() % 13) - 6;
        const long den = static_cast<long>(rng_() % 4) + 1;
        return Rational(num, den);
    }
    Params params() { return {rational(), rational()}; }
    double unit() { return static_cast<double>(rng_() % 1000000001ull) / 1e9; }
    bool flip() { return rng_() % 2 == 0; }

private:
    std::mt19937_64 rng_;
};

struct TrialResult {
    long cases = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::string> notes;

    void expect(bool ok, std::string case_id, std::string detail, std::string context) {
        ++cases;
        if (!ok) failures.push_back({std::move(case_id), std::move(detail), std::move(context)});
    }
    void expect_zero(const Poly& residual, const std::string& case_id, const std::string& context) {
        expect(residual.is_zero(), case_id,
               residual.is_zero() ? "" : "residual = " + residual.str(), context);
    }
    void expect_equal(const Poly& got, const Poly& want, const std::string& case_id,
                      const std::string& context) {
        expect(got == want, case_id, got == want ? "" : "difference = " + (got - want).str(),
               context);
    }
    void note(std::string text) { notes.push_back(std::move(text)); }
};

std::string ctx(const Params& p) { return "alpha=" + p.alpha.str() + " a=" + p.a.str(); }

using TrialBody = std::function<void(TrialResult&, Sampler&, unsigned trial, const VerifyOptions&)>;

// --- suite bodies ---------------------------------------------------------

void trial_rodrigues(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 12u);
    const QFamily fam = three_term_q(p, d);
    WeightedElement e = WeightedElement::unit(p);
    for (unsigned nu = 0; nu <= d; ++nu) {
        t.expect_equal(rodrigues_q(p, nu), fam.q(nu), "rodrigues vs three-term nu=" + std::to_string(nu),
                       ctx(p));
        if (e.sigma_power != nu) {
            // Canonicalization may strip sigma only when sigma truly divides Q_nu.
            const bool legitimate = fam.q(nu).is_zero() ||
                                    divide_exact(fam.q(nu), sigma_poly()).has_value();
            t.expect(legitimate, "sigma power nu=" + std::to_string(nu),
                     "power " + std::to_string(e.sigma_power), ctx(p));
        } else {
            t.expect(true, "sigma power nu=" + std::to_string(nu), "", ctx(p));
        }
        e = we_diff(e);
    }
    for (const unsigned mu : {d / 2, d}) {
        t.expect_equal(generalized_rodrigues_q(p, d, mu, fam.q(mu)), fam.q(d),
                       "generalized Rodrigues mu=" + std::to_string(mu), ctx(p));
    }
    const unsigned shift_max = std::min(d, 8u);
    for (int l = -2; l <= 3; ++l) {
        const QFamily shifted = three_term_q(Params{p.alpha, p.a + Rational(l)}, shift_max);
        for (unsigned nu = 0; nu <= shift_max; ++nu)
            t.expect_equal(parameter_shift_q(p, l, nu), shifted.q(nu),
                           "parameter shift l=" + std::to_string(l) + " nu=" + std::to_string(nu),
                           ctx(p));
    }
    for (unsigned l = 0; l <= 5; ++l) {
        const auto res = pearson_residual(p, l);
        t.expect(res.is_zero(), "Pearson ODE l=" + std::to_string(l),
                 res.is_zero() ? "" : "residual numerator = " + res.numerator.str(), ctx(p));
    }
}

void trial_recursion(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 12u);
    const QFamily by_recursion = three_term_q(p, d);
    const QFamily by_derivative = recursive_ode_q(p, d);
    bool noted_degenerate = false;
    for (unsigned nu = 0; nu <= d; ++nu) {
        t.expect_equal(by_derivative.q(nu), by_recursion.q(nu),
                       "derivative path nu=" + std::to_string(nu), ctx(p));
        const Rational lc = q_leading_coefficient(p.a, nu);
        if (!lc.is_zero()) {
            const bool ok = !by_recursion.q(nu).is_zero() &&
                            by_recursion.q(nu).degree() == nu &&
                            by_recursion.q(nu).leading() == lc;
            t.expect(ok, "degree and leading nu=" + std::to_string(nu),
                     ok ? "" : "got " + by_recursion.q(nu).str(), ctx(p));
        } else if (!noted_degenerate) {
            t.note("degenerate leading coefficient at " + ctx(p) + " from nu=" +
                   std::to_string(nu));
            noted_degenerate = true;
        }
    }
}

void trial_ode(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 12u);
    const QFamily fam = three_term_q(p, d);
    for (unsigned nu = 1; nu <= d; ++nu)
        t.expect_zero(basic_ode_residual(p, nu, fam), "basic ODE nu=" + std::to_string(nu), ctx(p));
    for (unsigned nu = 0; nu <= d; ++nu)
        t.expect_zero(sturm_liouville_residual(p, nu, fam),
                      "Sturm-Liouville nu=" + std::to_string(nu), ctx(p));
    for (unsigned l = 0; l <= d; ++l)
        t.expect_zero(p_ode_residual(p, l, fam), "P ODE l=" + std::to_string(l), ctx(p));
    for (unsigned nu = 0; nu <= d; ++nu) {
        Poly der = fam.q(nu);
        Rational expected(1);
        for (unsigned j = 1; j <= nu; ++j) {
            der = der.derivative();
            expected *= -lambda_nu(p.a, j);
        }
        t.expect_equal(der, Poly::constant(expected), "nu-fold derivative nu=" + std::to_string(nu),
                       ctx(p));
    }
}

void trial_selfadjoint(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 10u);
    const QFamily fam = three_term_q(p, d);
    for (unsigned nu = 0; nu <= d; ++nu) {
        for (const unsigned l : {0u, 1u, nu, nu + 3u, 7u}) {
            const auto res = self_adjoint_residual(p, l, nu, fam);
            t.expect(res.is_zero(),
                     "self-adjoint l=" + std::to_string(l) + " nu=" + std::to_string(nu),
                     res.is_zero() ? "" : "residual numerator = " + res.numerator.str(), ctx(p));
        }
    }
}

void trial_addition(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p1 = s.params();
    const Params p2 = s.params();
    const unsigned d = std::min(opt.max_degree, 8u);
    const Params composed{p1.alpha + p2.alpha, p1.a + p2.a + Rational(1)};
    const QFamily direct = three_term_q(composed, d);
    for (unsigned n = 0; n <= d; ++n)
        t.expect_equal(addition_q(p1, p2, n), direct.q(n), "addition N=" + std::to_string(n),
                       ctx(p1) + " | " + ctx(p2));
    const unsigned nd = std::min(opt.max_degree, 6u);
    std::vector<Params> plist{p1};
    for (unsigned n_params = 1; n_params <= 4; ++n_params) {
        Params folded{Rational(0), Rational(static_cast<long>(n_params)) - Rational(1)};
        for (const auto& q : plist) {
            folded.alpha += q.alpha;
            folded.a += q.a;
        }
        const QFamily want = three_term_q(folded, nd);
        for (unsigned n = 0; n <= nd; ++n)
            t.expect_equal(nfold_addition_q(plist, n), want.q(n),
                           "n-fold addition n=" + std::to_string(n_params) + " N=" + std::to_string(n),
                           ctx(p1));
        plist.push_back(s.params());
    }
}

void trial_decomposition(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 8u);
    const QFamily direct = three_term_q(p, d);
    for (unsigned n = 0; n <= d; ++n)
        t.expect_equal(decomposition_q(p, n), direct.q(n), "decomposition N=" + std::to_string(n),
                       ctx(p));
}

void trial_parity(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Params p = s.params();
    const unsigned d = std::min(opt.max_degree, 12u);
    for (unsigned nu = 0; nu <= d; ++nu)
        t.expect_zero(parity_check(p, nu), "parity nu=" + std::to_string(nu), ctx(p));
    // alpha = 0 specialization: fixed parity in x.
    const Params even{Rational(0), p.a};
    const QFamily fam = three_term_q(even, d);
    for (unsigned nu = 0; nu <= d; ++nu) {
        const Poly want = nu % 2 == 0 ? fam.q(nu).reflected() : -fam.q(nu).reflected();
        t.expect_equal(fam.q(nu), want, "alpha=0 parity nu=" + std::to_string(nu), ctx(even));
    }
}

void trial_powerseries(TrialResult& t, Sampler& s, unsigned, const VerifyOptions& opt) {
    const Rational a = s.rational();
    const unsigned d = std::min(opt.max_degree, 10u);
    const QFamily fam = three_term_q(Params{Rational(0), a}, d);
    for (unsigned n = 0; n <= d; ++n) {
        try {
            const Poly monic = power_series_q0(a, n);
            t.expect_equal(monic * q_leading_coefficient(a, n), fam.q(n),
                           "power series N=" + std::to_string(n), "a=" + a.str());
        } catch (const std::domain_error&) {
            t.note("power series coefficient pole at a=" + a.str() + " N=" + std::to_string(n));
        }
    }
}

void trial_gegenbauer(TrialResult& t, Sampler& s, unsigned trial, const VerifyOptions& opt) {
    const unsigned d10 = std::min(opt.max_degree, 10u);
    if (trial == 0) {
        const QFamily base = three_term_q(Params{Rational(0), Rational(0)}, d10);
        for (unsigned m = 0; m <= d10; ++m)
            t.expect_equal(expand_q00_gegenbauer(m), base.q(m),
                           "Gegenbauer expansion (0,0) m=" + std::to_string(m), "");
    }
    const Rational a = s.rational();
    const QFamily alpha_free = three_term_q(Params{Rational(0), a}, d10);
    for (unsigned n = 0; n <= d10; ++n)
        t.expect_equal(expand_q0a_gegenbauer(a, n), alpha_free.q(n),
                       "Gegenbauer expansion N=" + std::to_string(n), "a=" + a.str());
    const Params p = s.params();
    const unsigned d6 = std::min(opt.max_degree, 6u);
    const QFamily direct = three_term_q(p, d6);
    for (unsigned n = 0; n <= d6; ++n)
        t.expect_equal(expand_general_gegenbauer(p, n), direct.q(n),
                       "general Gegenbauer expansion N=" + std::to_string(n), ctx(p));
    if (trial == 0) {
        const unsigned n = std::min(opt.max_degree, 4u);
        const Poly printed_residual =
            expand_general_gegenbauer_printed(p, n) - three_term_q(p, n).q(n);
        t.note(printed_residual.is_zero()
                   ? "printed general expansion agrees at N=" + std::to_string(n)
                   : "printed general expansion residual at N=" + std::to_string(n) + ", " +
                         ctx(p) + ": " + printed_residual.str());
    }
    const Rational lambda = s.rational();
    for (unsigned l = 0; l <= std::min(opt.max_degree, 8u); ++l)
        t.expect_zero(hyperbolic_gegenbauer_residual(lambda, l),
                      "hyperbolic equation l=" + std::to_string(l), "lambda=" + lambda.str());
    const GegenbauerFamily cfam = gegenbauer(lambda, 8);
    for (unsigned l = 0; l <= 8; ++l)
        t.expect_zero(gegenbauer_ode_residual(cfam, l),
                      "Gegenbauer ODE l=" + std::to_string(l), "lambda=" + lambda.str());
}

void trial_auxiliary(TrialResult& t, Sampler& s, unsigned trial, const VerifyOptions& opt) {
    Params p = s.params();
    while ((p.a + Rational(1)).is_zero()) p = s.params();
    const unsigned d = std::min(opt.max_degree, 8u);
    const SFamily fam = s_family(p, std::max(d, 2u));
    t.expect_equal(fam.s(1), Poly{Rational(0), Rational(2)}, "S_1", ctx(p));
    const Poly sigma_prime{Rational(0), Rational(2)};
    const Poly s2_direct = Poly::constant(2) * sigma_poly() +
                           sigma_prime * (Poly::constant(p.alpha) -
                                          sigma_prime * (p.a + Rational(2)));
    t.expect_equal(fam.s(2), s2_direct, "S_2 closed form", ctx(p));
    for (unsigned l = 1; l <= d; ++l)
        t.expect_zero(alt1_residual(p, l), "S reconstruction l=" + std::to_string(l), ctx(p));
    for (unsigned l = 1; l <= d; ++l) {
        const Poly expected = sigma_prime *
                              three_term_q(Params{p.alpha, p.a + Rational(1)}, l - 1).q(l - 1) *
                              p.alpha;
        t.expect_equal(p_shift_relation_residual(p, l), expected,
                       "shift relation residual form l=" + std::to_string(l), ctx(p));
    }
    if (trial == 0)
        t.note("shift relation residual (reported, not asserted zero) at l=2, " + ctx(p) + ": " +
               p_shift_relation_residual(p, 2).str());
}

void trial_classical(TrialResult& t, Sampler& s, unsigned trial, const VerifyOptions& opt) {
    if (trial == 0) {
        const auto lag = laguerre(10, 0);
        t.expect_equal(lag[1], Poly{Rational(1), Rational(-1)}, "Laguerre L_1", "");
        t.expect_equal(laguerre(1, 1)[1], Poly{Rational(2), Rational(-1)}, "Laguerre L_1^1", "");
        for (unsigned l = 1; l <= 10; ++l)
            t.expect_zero(laguerre_identity_residual(l), "Laguerre identity l=" + std::to_string(l),
                          "");
    }
    const unsigned d = std::min(opt.max_degree, 8u);
    Rational a = s.rational(), b = s.rational();
    for (int tries = 0; jacobi_recurrence_degenerate(a, b, d) && tries < 50; ++tries) {
        t.note("resampled Jacobi parameters (a=" + a.str() + ", b=" + b.str() +
               "): recurrence denominator vanishes");
        a = s.rational();
        b = s.rational();
    }
    if (jacobi_recurrence_degenerate(a, b, d)) return;
    const std::string jctx = "a=" + a.str() + " b=" + b.str();
    const auto fam = jacobi(a, b, d);
    for (unsigned l = 0; l <= d; ++l) {
        Rational norm(1);
        for (unsigned j = 1; j <= l; ++j) norm *= (a + Rational(static_cast<long>(j)));
        norm /= factorial(l);
        t.expect(fam[l].eval(Rational(1)) == norm, "Jacobi normalization l=" + std::to_string(l),
                 "P_l(1) = " + fam[l].eval(Rational(1)).str(), jctx);
    }
    for (unsigned l = 1; l <= d; ++l) {
        if (jacobi_recurrence_degenerate(a, b + Rational(1), l - 1) ||
            jacobi_recurrence_degenerate(a + Rational(1), b, l - 1)) {
            t.note("skipped Jacobi identity at l=" + std::to_string(l) + " (" + jctx +
                   "): shifted family degenerate");
            continue;
        }
        t.expect_zero(jacobi_identity_residual(a, b, l), "Jacobi identity l=" + std::to_string(l),
                      jctx);
    }
}

void trial_genfun(TrialResult& t, Sampler& s, unsigned, const VerifyOptions&) {
    const Params p = s.params();
    const double x = -2.0 + 4.0 * s.unit();
    const double rho = 0.1 + 0.3 * s.unit();
    const double y = (s.flip() ? rho : -rho) / std::sqrt(1.0 + x * x);
    const auto chk = genfun_series_check(p, x, y, 40);
    char point[96];
    std::snprintf(point, sizeof(point), "x=%.6f y=%.6f %s", x, y, ctx(p).c_str());
    if (chk.converged) {
        const double rel = std::abs(chk.closed - chk.series) / std::max(std::abs(chk.closed), 1e-300);
        char detail[64];
        std::snprintf(detail, sizeof(detail), "relative difference %.3e", rel);
        t.expect(rel < 1e-10, "closed form vs series", detail, point);
    } else {
        t.note(std::string("series tail not certified at ") + point);
    }
    const double res = genfun_pde_residual(p, x, y * 0.5);
    char detail[64];
    std::snprintf(detail, sizeof(detail), "residual %.3e", res);
    t.expect(res < 1e-6, "generating function PDE", detail, point);
}

const std::vector<std::pair<std::string, TrialBody>>& suite_table() {
    static const std::vector<std::pair<std::string, TrialBody>> table{
        {"rodrigues", trial_rodrigues},
        {"recursion", trial_recursion},
        {"ode", trial_ode},
        {"selfadjoint", trial_selfadjoint},
        {"addition", trial_addition},
        {"decomposition", trial_decomposition},
        {"parity", trial_parity},
        {"gegenbauer", trial_gegenbauer},
        {"powerseries", trial_powerseries},
        {"auxiliary", trial_auxiliary},
        {"classical", trial_classical},
        {"genfun", trial_genfun},
    };
    return table;
}

unsigned resolve_workers(const VerifyOptions& options) {
    if (options.workers > 0) return options.workers;
    if (const char* env = std::getenv("ROMANOVSKI_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

SuiteReport run_one(const std::string& name, const TrialBody& body, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialResult> results(options.trials);
    const unsigned workers = std::min(resolve_workers(options), std::max(options.trials, 1u));
    const auto run_range = [&](unsigned from, unsigned to) {
        for (unsigned trial = from; trial < to; ++trial) {
            // Trials own independent deterministic streams so the fan-out
            // cannot change any sampled value.
            Sampler sampler(options.seed + 0x9E3779B97F4A7C15ull * (trial + 1));
            body(results[trial], sampler, trial, options);
        }
    };
    if (workers <= 1 || options.trials <= 1) {
        run_range(0, options.trials);
    } else {
        std::vector<std::thread> pool;
        const unsigned chunk = (options.trials + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const unsigned from = w * chunk;
            const unsigned to = std::min(options.trials, from + chunk);
            if (from >= to) break;
            pool.emplace_back(run_range, from, to);
        }
        for (auto& th : pool) th.join();
    }
    SuiteReport report;
    report.suite = name;
    std::set<std::string> seen_notes;
    for (const auto& r : results) {
        report.cases_run += r.cases;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
        for (const auto& n : r.notes)
            if (seen_notes.insert(n).second) report.notes.push_back(n);
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, body] : suite_table()) v.push_back(name);
        return v;
    }();
    return names;
}

std::vector<SuiteReport> run_suites(const std::string& name, const VerifyOptions& options) {
    if (options.trials < 1) throw std::invalid_argument("verify needs at least one trial");
    std::vector<SuiteReport> reports;
    if (name == "all") {
        for (const auto& [suite, body] : suite_table()) reports.push_back(run_one(suite, body, options));
        return reports;
    }
    const auto it = std::find_if(suite_table().begin(), suite_table().end(),
                                 [&](const auto& entry) { return entry.first == name; });
    if (it == suite_table().end()) throw std::invalid_argument("unknown suite: " + name);
    reports.push_back(run_one(name, it->second, options));
    return reports;
}

void print_report(std::ostream& os, const SuiteReport& report) {
    os << "suite " << report.suite << ": " << report.cases_run << " cases, "
       << report.failures.size() << " failures\n";
    for (const auto& note : report.notes) os << "  note: " << note << "\n";
    for (const auto& f : report.failures) {
        os << "  FAIL " << f.case_id;
        if (!f.detail.empty()) os << ": " << f.detail;
        if (!f.context.empty()) os << " [" << f.context << "]";
        os << "\n";
    }
}

}  // namespace romanovski
