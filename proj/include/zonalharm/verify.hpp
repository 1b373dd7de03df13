#pragma once

#include "bessel.hpp"
#include "gegenbauer.hpp"
#include "harmonic.hpp"
#include "oracles.hpp"
#include "poly_io.hpp"
#include "random.hpp"
#include "transforms.hpp"
#include "zonal.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace zh {

struct VerificationCase {
    std::string case_id;
    nlohmann::json params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    double max_residual = 0.0;
    double wall_time_s = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<VerificationCase> cases;
    VerificationSummary summary;

    bool all_pass() const { return summary.passed == summary.total; }
};

struct SuiteInfo {
    std::string name;
    std::string anchor;
    std::string identity;
};

inline const std::vector<SuiteInfo>& suite_catalog()
{
    static const std::vector<SuiteInfo> catalog{
        {"theorem1", "Theorem 1", "canonical decomposition P = sum r^{2k} h_{l-2k}, exact"},
        {"dimension", "dimension formula", "dim H^l against the rank of the Laplacian on P^l"},
        {"genfunc", "generating function", "sum r^m C_m(t) = (1 - 2rt + r^2)^{-alpha}"},
        {"theorem2", "Theorem 2", "zonal expansion coefficients against the Gegenbauer integral"},
        {"corollary1", "Corollary 1", "plane wave partial sums"},
        {"theorem3", "Theorem 3", "sphere Fourier transform, component and Laplacian displays"},
        {"corollary3", "Corollary 3", "multistep spherical Bessel recurrence"},
        {"corollary4", "Corollary 4", "finite Bessel expansions, integer and half-odd order"},
        {"bochner", "Corollary 5", "generalized Bochner identity"},
        {"periodicity", "Corollary 6", "Hankel periodicity relation, with the t^2 factor"},
    };
    return catalog;
}

class UnknownSuite : public std::invalid_argument {
public:
    explicit UnknownSuite(const std::string& name) : std::invalid_argument("unknown suite '" + name + "'") {}
};

/// key -> comma separated values, e.g. {"alpha", "1/2,1"}.
using GridOverrides = std::map<std::string, std::string>;

namespace detail {

class Grid {
public:
    explicit Grid(const GridOverrides& overrides) : overrides_(overrides) {}

    std::vector<int> ints(const std::string& key, std::vector<int> fallback)
    {
        std::vector<int> out;
        for (const auto& item : items(key)) out.push_back(std::stoi(item));
        return out.empty() && !has(key) ? fallback : out;
    }
    std::vector<double> reals(const std::string& key, std::vector<double> fallback)
    {
        std::vector<double> out;
        for (const auto& item : items(key)) out.push_back(to_double(parse_rational_or_decimal(item)));
        return out.empty() && !has(key) ? fallback : out;
    }
    std::vector<Rational> rationals(const std::string& key, std::vector<Rational> fallback)
    {
        std::vector<Rational> out;
        for (const auto& item : items(key)) out.push_back(parse_rational(item));
        return out.empty() && !has(key) ? fallback : out;
    }
    int integer(const std::string& key, int fallback)
    {
        const auto v = ints(key, {fallback});
        if (v.size() != 1) throw std::invalid_argument("grid key '" + key + "' takes a single value");
        return v.front();
    }
    double real(const std::string& key, double fallback)
    {
        const auto v = reals(key, {fallback});
        if (v.size() != 1) throw std::invalid_argument("grid key '" + key + "' takes a single value");
        return v.front();
    }

    void reject_unused() const
    {
        for (const auto& [key, value] : overrides_) {
            if (!used_.count(key)) throw std::invalid_argument("unknown grid key '" + key + "'");
        }
    }

private:
    static Rational parse_rational_or_decimal(const std::string& text)
    {
        if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("bad number '" + text + "'");
        return Rational(v);
    }
    bool has(const std::string& key) const { return overrides_.count(key) != 0; }
    std::vector<std::string> items(const std::string& key)
    {
        used_.insert(key);
        std::vector<std::string> out;
        const auto it = overrides_.find(key);
        if (it == overrides_.end()) return out;
        std::stringstream ss(it->second);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty value in grid key '" + key + "'");
            out.push_back(item);
        }
        if (out.empty()) throw std::invalid_argument("grid key '" + key + "' has no values");
        return out;
    }

    const GridOverrides& overrides_;
    std::set<std::string> used_;
};

struct PendingCase {
    std::string case_id;
    nlohmann::json params;
    double tolerance;
    std::function<double()> residual;
};

class CaseList {
public:
    void add(const std::string& tag, nlohmann::json params, double tolerance, std::function<double()> residual)
    {
        char id[32];
        std::snprintf(id, sizeof id, "%s-%05zu", tag.c_str(), cases_.size());
        cases_.push_back({id, std::move(params), tolerance, std::move(residual)});
    }
    std::vector<PendingCase>& cases() { return cases_; }

private:
    std::vector<PendingCase> cases_;
};

inline std::string rational_text(const Rational& q) { return to_string(q); }

inline double relative_or_absolute(Complex mine, Complex ref, double floor)
{
    const double diff = std::abs(mine - ref);
    return std::abs(ref) >= floor ? diff / std::abs(ref) : diff;
}

inline std::vector<double> random_point(CaseRng& rng, int d, double max_radius)
{
    auto v = rng.sphere_point(d);
    const double r = rng.real(0.0, max_radius);
    for (double& c : v) c *= r;
    return v;
}

inline void suite_theorem1(CaseList& out, Grid& grid, CaseRng& rng)
{
    const auto dims = grid.ints("d", {3, 4, 5, 6, 7, 8});
    const auto degrees = grid.ints("l", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    const int count = grid.integer("count", 200);
    const int terms = grid.integer("terms", 6);
    for (int i = 0; i < count; ++i) {
        const int d = dims[static_cast<std::size_t>(rng.integer(0, static_cast<int>(dims.size()) - 1))];
        const int l = degrees[static_cast<std::size_t>(rng.integer(0, static_cast<int>(degrees.size()) - 1))];
        const auto p = random_polynomial(rng, d, l, terms);
        // residual counts the failed exact checks
        out.add("t1", {{"d", d}, {"l", l}, {"poly", to_text(p)}}, 0.0, [p] {
            const auto dec = decompose(p);
            int failures = dec.reconstruct() == p ? 0 : 1;
            for (std::size_t a = 0; a < dec.components.size(); ++a) {
                if (!laplacian(dec.components[a].h).is_zero()) ++failures;
                for (std::size_t b = a + 1; b < dec.components.size(); ++b) {
                    if (sphere_inner_product(dec.components[a].h, dec.components[b].h) != 0) ++failures;
                }
            }
            return static_cast<double>(failures);
        });
    }
}

inline void suite_dimension(CaseList& out, Grid& grid, CaseRng&)
{
    for (int d : grid.ints("d", {3, 4, 5})) {
        for (int l : grid.ints("l", {0, 1, 2, 3, 4, 5, 6})) {
            out.add("dim", {{"d", d}, {"l", l}}, 0.0, [d, l] {
                const Integer formula = harmonic_dim(Alpha::from_dimension(d), l);
                return std::abs(static_cast<double>(formula.get_si() - oracle::harmonic_dim_by_rank(d, l)));
            });
        }
    }
}

inline void suite_genfunc(CaseList& out, Grid& grid, CaseRng&)
{
    const double r = grid.real("r", 0.5);
    const int terms = grid.integer("terms", 60);
    const double tol = grid.real("tol", 1e-12);
    for (const Rational& a : grid.rationals("alpha", {Rational(1, 2), Rational(1)})) {
        for (double t : grid.reals("t", {-0.9, 0.0, 0.9})) {
            const Alpha alpha(a);
            nlohmann::json decay = nlohmann::json::array();
            const int step = std::max(1, terms / 6);
            for (int m = 0; m <= terms; m += step) decay.push_back({{"M", m}, {"residual", generating_function_check(alpha, r, t, m)}});
            out.add("gf", {{"alpha", rational_text(a)}, {"r", r}, {"t", t}, {"M", terms}, {"decay", decay}}, tol,
                    [alpha, r, t, terms] { return generating_function_check(alpha, r, t, terms); });
        }
    }
}

inline void suite_theorem2(CaseList& out, Grid& grid, CaseRng&)
{
    const auto dims = grid.ints("d", {3, 4, 5});
    const double r = grid.real("r", 2.0);
    const int max_m = grid.integer("m", 10);
    const int max_l = grid.integer("l", 6);
    const int closed_terms = grid.integer("closed_terms", 20);
    for (int d : dims) {
        const Alpha alpha = Alpha::from_dimension(d);
        std::vector<std::pair<std::string, ZonalProfile>> profiles{{"exp(i*" + std::to_string(r) + "*t)", ZonalProfile::plane_wave(r)}};
        for (int l = 0; l <= max_l; ++l) profiles.emplace_back("t^" + std::to_string(l), ZonalProfile::monomial(l));
        for (const auto& [name, profile] : profiles) {
            for (int m = 0; m <= max_m; ++m) {
                out.add("t2-oracle", {{"d", d}, {"profile", name}, {"m", m}}, 1e-8, [alpha, profile, m, max_m] {
                    const Complex mine = expand(profile, alpha, max_m).term_coefficient(m);
                    return relative_or_absolute(mine, oracle::gegenbauer_integral_coefficient(profile, alpha.to_double(), m), 1e-13);
                });
            }
        }
        for (int m = 0; m <= closed_terms; ++m) {
            out.add("t2-closed", {{"d", d}, {"r", r}, {"m", m}}, 1e-12, [alpha, r, m, closed_terms] {
                const Complex mine = expand(ZonalProfile::plane_wave(r), alpha, closed_terms).term_coefficient(m);
                const Complex ref = plane_wave_coefficients(alpha, r, closed_terms)[static_cast<std::size_t>(m)];
                return std::abs(mine - ref) / std::max(1.0, std::abs(ref));
            });
        }
    }
}

inline void suite_corollary1(CaseList& out, Grid& grid, CaseRng& rng)
{
    const int terms = grid.integer("terms", 50);
    const int points = grid.integer("points", 100);
    for (int d : grid.ints("d", {3, 4})) {
        for (double r : grid.reals("r", {1.0, 5.0})) {
            const Alpha alpha = Alpha::from_dimension(d);
            for (int i = 0; i < points; ++i) {
                const UnitVector xi(rng.sphere_point(d));
                const UnitVector eta(rng.sphere_point(d));
                out.add("c1", {{"d", d}, {"r", r}, {"M", terms}, {"xi_dot_eta", xi.dot(eta)}}, 1e-10, [alpha, r, xi, eta, terms] {
                    return std::abs(plane_wave_partial_sum(alpha, r, xi, eta, terms) - std::exp(Complex(0.0, r * xi.dot(eta))));
                });
            }
        }
    }
}

inline void suite_theorem3(CaseList& out, Grid& grid, CaseRng& rng)
{
    const auto dims = grid.ints("d", {3, 4, 5});
    const int max_l = grid.integer("l", 6);
    const double radius = grid.real("radius", 5.0);
    const int count = grid.integer("count", 120);
    const double oracle_tol = grid.real("oracle_tol", 1e-13);
    for (int i = 0; i < count; ++i) {
        const int d = dims[static_cast<std::size_t>(rng.integer(0, static_cast<int>(dims.size()) - 1))];
        const int l = rng.integer(0, max_l);
        const auto p = random_polynomial(rng, d, l, 4);
        const auto x = random_point(rng, d, radius);
        const nlohmann::json params{{"d", d}, {"l", l}, {"poly", to_text(p)}, {"x", x}};
        out.add("t3-displays", params, 1e-11, [p, x] {
            return std::abs(sphere_ft_components(p, x).value - sphere_ft_laplacian(p, x).value);
        });
        out.add("t3-oracle", params, 1e-10, [p, x, oracle_tol] {
            const Complex ref = sphere_ft_oracle(p, x, oracle_tol).value;
            return std::max(std::abs(sphere_ft_components(p, x).value - ref), std::abs(sphere_ft_laplacian(p, x).value - ref));
        });
    }
}

inline void suite_corollary3(CaseList& out, Grid& grid, CaseRng&)
{
    const auto alphas = grid.rationals("alpha", {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)});
    const int max_l = grid.integer("l", 10);
    const auto radii = grid.reals("r", {0.5, 1.0, 2.0, 5.0, 10.0});
    for (const Rational& a : alphas) {
        const Alpha alpha(a);
        for (int l = 2; l <= max_l; ++l) {
            for (int s = 1; s <= l / 2; ++s) {
                out.add("c3-lead", {{"alpha", rational_text(a)}, {"l", l}, {"s", s}}, 0.0, [alpha, l, s] {
                    return multistep_coefficient(alpha, l, s, s) == 1 ? 0.0 : 1.0;
                });
                for (double r : radii) {
                    out.add("c3", {{"alpha", rational_text(a)}, {"l", l}, {"s", s}, {"r", r}}, 1e-11,
                            [alpha, l, s, r] { return multistep_residual(alpha, l, s, r); });
                }
            }
        }
    }
}

inline void suite_corollary4(CaseList& out, Grid& grid, CaseRng&)
{
    const int max_int = grid.integer("n_int", 8);
    const int max_half = grid.integer("n_half", 6);
    for (int n = 0; n <= max_int; ++n) {
        for (double t : grid.reals("t_int", {0.5, 1.0, 2.0, 5.0})) {
            out.add("c4-int", {{"n", n}, {"t", t}}, 1e-12, [n, t] { return finite_expansion_integer_residual(n, t); });
        }
    }
    for (int n = 0; n <= max_half; ++n) {
        for (double t : grid.reals("t_half", {0.5, 1.0, 2.0, 5.0, 10.0})) {
            out.add("c4-half", {{"n", n}, {"t", t}}, 1e-11, [n, t] { return finite_expansion_halfodd_residual(n, t); });
        }
    }
}

inline void suite_bochner(CaseList& out, Grid& grid, CaseRng& rng)
{
    const int points = grid.integer("points", 5);
    const double radius = grid.real("radius", 2.0);
    const double tol = grid.real("quad_tol", 1e-11);
    const auto f = RadialProfile::gaussian(0.5);
    const std::vector<std::string> harmonics{"x1*x2", "x1^2 - x2^2", "x1*x2*x3", "x3"};
    for (int d : grid.ints("d", {3, 4})) {
        for (const auto& text : harmonics) {
            const auto p = parse_polynomial(text, d);
            for (int i = 0; i < points; ++i) {
                const auto y = random_point(rng, d, radius);
                out.add("c5-harmonic", {{"d", d}, {"poly", text}, {"y", y}}, 1e-8, [f, p, y, tol] {
                    const double r = euclidean_norm(y);
                    const Complex expected = i_power(p.degree()) * std::exp(-r * r / 2.0) * evaluate(p, y);
                    return std::max(std::abs(bochner_components(f, p, y, tol) - expected),
                                    std::abs(bochner_laplacian(f, p, y, tol) - expected));
                });
            }
        }
        for (int i = 0; i < points; ++i) {
            const auto p = random_polynomial(rng, d, 4, 5);
            const auto y = random_point(rng, d, radius);
            out.add("c5-displays", {{"d", d}, {"poly", to_text(p)}, {"y", y}}, 1e-8, [f, p, y, tol] {
                return std::abs(bochner_components(f, p, y, tol) - bochner_laplacian(f, p, y, tol));
            });
        }
    }
}

inline void suite_periodicity(CaseList& out, Grid& grid, CaseRng&)
{
    const auto g = RadialProfile::gaussian();
    const double tol = grid.real("quad_tol", 1e-10);
    for (const Rational& a : grid.rationals("alpha", {Rational(1, 2), Rational(1), Rational(3, 2)})) {
        for (int l : grid.ints("l", {2, 3, 4, 5, 6})) {
            for (double t : grid.reals("t", {0.5, 1.0, 2.0})) {
                out.add("c6", {{"alpha", rational_text(a)}, {"l", l}, {"t", t}}, 1e-7,
                        [g, a, l, t, tol] { return hankel_periodicity_residual(g, Alpha(a), l, t, tol); });
            }
        }
    }
    for (const Rational& nu : grid.rationals("nu", {Rational(1, 2), Rational(3, 2), Rational(5, 2)})) {
        for (double t : grid.reals("t_closed", {0.0, 1.0, 2.0})) {
            out.add("hankel-gauss", {{"nu", rational_text(nu)}, {"t", t}}, 1e-9, [g, nu, t] {
                const double expected = std::pow(2.0, -(to_double(nu) + 1.0)) * std::exp(-t * t / 4.0);
                return std::abs(hankel(g, BesselOrder(nu), t, 1e-12).value - expected);
            });
        }
    }
}

inline unsigned worker_count(std::size_t jobs)
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("ZH_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(1, jobs)));
}

} // namespace detail

/// Builds the seeded case list for `name` and evaluates it on a worker pool capped by ZH_THREADS.
inline VerificationReport run_verify_suite(const std::string& name, std::uint64_t seed, const GridOverrides& overrides = {})
{
    using Builder = void (*)(detail::CaseList&, detail::Grid&, CaseRng&);
    static const std::map<std::string, Builder> builders{
        {"theorem1", detail::suite_theorem1},     {"dimension", detail::suite_dimension},
        {"genfunc", detail::suite_genfunc},       {"theorem2", detail::suite_theorem2},
        {"corollary1", detail::suite_corollary1}, {"theorem3", detail::suite_theorem3},
        {"corollary3", detail::suite_corollary3}, {"corollary4", detail::suite_corollary4},
        {"bochner", detail::suite_bochner},       {"periodicity", detail::suite_periodicity},
    };
    const auto it = builders.find(name);
    if (it == builders.end()) throw UnknownSuite(name);

    const auto start = std::chrono::steady_clock::now();
    detail::CaseList list;
    detail::Grid grid(overrides);
    CaseRng rng(seed);
    it->second(list, grid, rng);
    grid.reject_unused();

    auto& pending = list.cases();
    VerificationReport report;
    report.suite = name;
    report.seed = seed;
    report.cases.resize(pending.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < pending.size(); i = next++) {
            VerificationCase& c = report.cases[i];
            c.case_id = pending[i].case_id;
            c.params = pending[i].params;
            c.tolerance = pending[i].tolerance;
            try {
                c.residual = pending[i].residual();
            } catch (const std::exception& e) {
                c.residual = std::numeric_limits<double>::infinity();
                c.params["error"] = e.what();
            }
            c.pass = c.residual <= c.tolerance;
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned workers = detail::worker_count(pending.size());
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }
    std::sort(report.cases.begin(), report.cases.end(), [](const auto& a, const auto& b) { return a.case_id < b.case_id; });

    report.summary.total = report.cases.size();
    for (const auto& c : report.cases) {
        if (c.pass) ++report.summary.passed;
        report.summary.max_residual = std::max(report.summary.max_residual, c.residual);
    }
    report.summary.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

/// Deterministic unless `include_timing` is set.
inline nlohmann::json report_to_json(const VerificationReport& report, bool include_timing = false)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        cases.push_back({{"case_id", c.case_id}, {"params", c.params}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    nlohmann::json summary{{"total", report.summary.total}, {"passed", report.summary.passed}, {"max_residual", report.summary.max_residual}};
    if (include_timing) summary["wall_time_s"] = report.summary.wall_time_s;
    return {{"suite", report.suite}, {"seed", report.seed}, {"cases", std::move(cases)}, {"summary", std::move(summary)}};
}

inline std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// suite,case_id,param_json,residual,tolerance,pass
inline void write_csv(std::ostream& os, const VerificationReport& report)
{
    os << "suite,case_id,param_json,residual,tolerance,pass\n";
    for (const auto& c : report.cases) {
        std::string params = c.params.dump();
        std::string quoted = "\"";
        for (char ch : params) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        os << report.suite << ',' << c.case_id << ',' << quoted << ',' << format_double(c.residual) << ','
           << format_double(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
    }
}

inline void write_pretty(std::ostream& os, const VerificationReport& report, bool include_timing = false)
{
    for (const auto& c : report.cases) {
        if (!c.pass) os << "FAIL " << c.case_id << " residual " << format_double(c.residual) << " > " << format_double(c.tolerance) << ' ' << c.params.dump() << '\n';
    }
    os << report.suite << ": " << report.summary.passed << '/' << report.summary.total << " passed, max residual "
       << format_double(report.summary.max_residual);
    if (include_timing) os << ", " << report.summary.wall_time_s << " s";
    os << '\n';
}

} // namespace zh
