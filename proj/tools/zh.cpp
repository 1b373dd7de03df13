#include <zonalharm/verify.hpp>
#include <zonalharm/zonalharm.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using Json = nlohmann::json;
using namespace zh;

enum class Format { json, csv, pretty };

struct Output {
    Format format = Format::json;
    std::string path;
    bool timing = false;
};

/// Validation failure detected after parsing; exits 2.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string fmt(double v) { return format_double(v); }

std::vector<double> parse_point(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        double v = 0;
        try {
            v = std::stod(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size()) throw UsageError("bad coordinate '" + item + "' in '" + text + "'");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError("empty point");
    return out;
}

std::string read_file_or_inline(const std::string& value)
{
    std::error_code ec;
    if (!std::filesystem::is_regular_file(value, ec)) return value;
    std::ifstream in(value);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
    return text;
}

ZonalProfile zonal_profile(const std::string& spec, double alpha)
{
    // builtin name[:parameter] or a Taylor file with one "re im" pair per line
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto number = [&](double fallback) { return arg.empty() ? fallback : std::stod(arg); };
    if (name == "planewave") return ZonalProfile::plane_wave(number(1.0));
    if (name == "monomial") return ZonalProfile::monomial(static_cast<int>(number(1.0)));
    if (name == "constant") return ZonalProfile::constant(Complex(number(1.0)));
    if (name == "generating") return ZonalProfile::gegenbauer_generating(alpha, number(0.5));
    std::ifstream in(spec);
    if (!in) throw UsageError("unknown profile '" + spec + "' (builtin: planewave[:r], monomial[:l], constant[:c], generating[:r], or a Taylor file)");
    std::vector<Complex> taylor;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re)) throw UsageError(spec + ":" + std::to_string(lineno) + ": expected 're im'");
        ls >> im;
        taylor.emplace_back(re, im);
    }
    return ZonalProfile::from_taylor(std::move(taylor));
}

RadialProfile radial_profile(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const double arg = colon == std::string::npos ? 0.0 : std::stod(spec.substr(colon + 1));
    if (name == "gaussian") return RadialProfile::gaussian(colon == std::string::npos ? 1.0 : arg);
    if (name == "bump") return RadialProfile::bump(colon == std::string::npos ? 1.0 : arg);
    throw UsageError("unknown radial profile '" + spec + "' (gaussian[:a], bump[:width])");
}

void emit(const Output& out, const std::string& text)
{
    if (out.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out.path);
    if (!file) throw std::runtime_error("cannot write " + out.path);
    file << text;
}

void emit_json(const Output& out, const Json& j) { emit(out, j.dump(2) + "\n"); }

int cmd_decompose(const Output& out, int d, const std::string& text)
{
    const auto p = parse_polynomial(read_file_or_inline(text), d);
    const auto dec = decompose(p);
    if (out.format == Format::pretty) {
        std::ostringstream os;
        for (const auto& c : dec.components) os << "h_" << p.degree() - 2 * c.k << " (k=" << c.k << "): " << to_text(c.h) << '\n';
        emit(out, os.str());
        return 0;
    }
    Json components = Json::array();
    for (const auto& c : dec.components) components.push_back({{"k", c.k}, {"h", to_json(c.h)}});
    emit_json(out, {{"d", d}, {"l", p.degree()}, {"components", components}});
    return 0;
}

int cmd_gegenbauer(const Output& out, const std::string& alpha_text, int degree, const std::optional<double>& at)
{
    const Alpha alpha(parse_rational(alpha_text));
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    if (at) {
        const double value = gegenbauer_value(alpha.to_double(), degree, *at);
        if (out.format == Format::pretty) emit(out, fmt(value) + "\n");
        else emit_json(out, {{"alpha", to_string(alpha.value())}, {"degree", degree}, {"t", *at}, {"value", value}});
        return 0;
    }
    const auto c = gegenbauer(alpha, degree);
    if (out.format == Format::pretty) {
        std::ostringstream os;
        bool first = true;
        for (int k = degree; k >= 0; --k) {
            const Rational& a = c.coefficients()[static_cast<std::size_t>(k)];
            if (a == 0) continue;
            if (first) os << (a < 0 ? "-" : "");
            else os << (a < 0 ? " - " : " + ");
            os << to_string(abs(a));
            if (k > 0) os << "*t" << (k > 1 ? "^" + std::to_string(k) : "");
            first = false;
        }
        emit(out, (first ? std::string("0") : os.str()) + "\n");
        return 0;
    }
    Json coeffs = Json::array();
    for (const auto& a : c.coefficients()) coeffs.push_back(to_string(a));
    emit_json(out, {{"alpha", to_string(alpha.value())}, {"degree", degree}, {"coefficients", coeffs}, {"at_one", to_string(gegenbauer_at_one(alpha, degree))}});
    return 0;
}

int cmd_zonal_expand(const Output& out, const std::string& alpha_text, const std::string& profile_spec, int terms)
{
    const Alpha alpha(parse_rational(alpha_text));
    if (terms < 0) throw UsageError("--terms must be nonnegative");
    const auto exp = expand(zonal_profile(profile_spec, alpha.to_double()), alpha, terms);
    std::ostringstream os;
    Json rows = Json::array();
    if (out.format == Format::csv) os << "m,re,im,weight\n";
    for (int m = 0; m <= terms; ++m) {
        const Complex f = exp.coefficients[static_cast<std::size_t>(m)];
        const double w = exp.weights[static_cast<std::size_t>(m)];
        rows.push_back({{"m", m}, {"re", f.real()}, {"im", f.imag()}, {"weight", w}});
        if (out.format == Format::csv) os << m << ',' << fmt(f.real()) << ',' << fmt(f.imag()) << ',' << fmt(w) << '\n';
        if (out.format == Format::pretty) os << "m=" << m << "  f=" << fmt(f.real()) << (f.imag() < 0 ? " - " : " + ") << fmt(std::abs(f.imag())) << "i  weight=" << fmt(w) << '\n';
    }
    if (out.format == Format::json) emit_json(out, rows);
    else emit(out, os.str());
    return 0;
}

int cmd_planewave(const Output& out, const std::string& alpha_text, double r, int terms, const std::optional<double>& at)
{
    const Alpha alpha(parse_rational(alpha_text));
    if (terms < 0) throw UsageError("--terms must be nonnegative");
    if (r < 0.0 || r > bessel_series_cap) throw UsageError("--r must lie in [0, 30]");
    const auto coeffs = plane_wave_coefficients(alpha, r, terms);
    Json j{{"alpha", to_string(alpha.value())}, {"r", r}, {"terms", terms}};
    Json cj = Json::array();
    for (int m = 0; m <= terms; ++m) cj.push_back({{"m", m}, {"re", coeffs[static_cast<std::size_t>(m)].real()}, {"im", coeffs[static_cast<std::size_t>(m)].imag()}});
    j["coefficients"] = cj;
    double residual = 0.0;
    if (at) {
        if (std::abs(*at) > 1.0) throw UsageError("--at is (xi|eta) and must lie in [-1, 1]");
        const int d = alpha.dimension();
        const UnitVector eta = UnitVector::axis(d, 0);
        std::vector<double> xv(static_cast<std::size_t>(d), 0.0);
        xv[0] = *at;
        xv[1] = std::sqrt(std::max(0.0, 1.0 - *at * *at));
        const Complex sum = plane_wave_partial_sum(alpha, r, UnitVector::normalized(xv), eta, terms);
        residual = std::abs(sum - std::exp(Complex(0.0, r * *at)));
        j["value_re"] = sum.real();
        j["value_im"] = sum.imag();
        j["residual"] = residual;
    }
    if (out.format == Format::pretty) {
        std::ostringstream os;
        for (const auto& c : cj) os << "m=" << c["m"] << "  " << fmt(c["re"]) << (c["im"].get<double>() < 0 ? " - " : " + ") << fmt(std::abs(c["im"].get<double>())) << "i\n";
        if (at) os << "partial sum " << fmt(j["value_re"]) << " + " << fmt(j["value_im"]) << "i, residual " << fmt(residual) << '\n';
        emit(out, os.str());
    } else {
        emit_json(out, j);
    }
    return 0;
}

int cmd_bessel(const Output& out, const std::string& nu_text, double t)
{
    const BesselOrder nu(parse_rational(nu_text));
    const double J = bessel_j(nu, t);
    const double j = spherical_j(nu, t);
    if (out.format == Format::pretty) emit(out, fmt(J) + "\n");
    else if (out.format == Format::csv) emit(out, "nu,t,J,j\n" + to_string(nu.value()) + "," + fmt(t) + "," + fmt(J) + "," + fmt(j) + "\n");
    else emit_json(out, {{"nu", to_string(nu.value())}, {"t", t}, {"J", J}, {"j", j}});
    return 0;
}

int cmd_verify_recurrence(const Output& out, const std::string& alpha_text, int l, int s, const std::string& grid, double tol)
{
    const Alpha alpha(parse_rational(alpha_text));
    if (s < 1 || s > l / 2) throw UsageError("need 1 <= s <= floor(l/2)");
    std::ostringstream os;
    os << "alpha,l,s,r,residual,residual_J,pass\n";
    bool all = true;
    for (double r : parse_point(grid)) {
        const double a = multistep_residual(alpha, l, s, r);
        const double b = multistep_residual_J(alpha, l, s, r);
        const bool pass = a <= tol && b <= tol;
        all = all && pass;
        os << to_string(alpha.value()) << ',' << l << ',' << s << ',' << fmt(r) << ',' << fmt(a) << ',' << fmt(b) << ',' << (pass ? "true" : "false") << '\n';
    }
    emit(out, os.str());
    return all ? 0 : 1;
}

int cmd_ft_sphere(const Output& out, const std::string& poly_text, const std::string& at_text, const std::string& method, double tol)
{
    const auto x = parse_point(at_text);
    const auto p = parse_polynomial(read_file_or_inline(poly_text), static_cast<int>(x.size()));
    SphereFTResult r;
    if (method == "components") r = sphere_ft_components(p, x);
    else if (method == "laplacian") r = sphere_ft_laplacian(p, x);
    else r = sphere_ft_oracle(p, x, tol);
    if (out.format == Format::pretty) emit(out, fmt(r.value.real()) + (r.value.imag() < 0 ? " - " : " + ") + fmt(std::abs(r.value.imag())) + "i\n");
    else emit_json(out, {{"value_re", r.value.real()}, {"value_im", r.value.imag()}, {"method", to_string(r.method)}});
    return 0;
}

int cmd_hankel(const Output& out, const std::string& nu_text, const std::string& profile, double t, double tol)
{
    const auto h = hankel(radial_profile(profile), BesselOrder(parse_rational(nu_text)), t, tol);
    if (out.format == Format::pretty) emit(out, fmt(h.value) + "\n");
    else emit_json(out, {{"nu", to_string(h.order.value())}, {"t", h.at}, {"value", h.value}, {"quadrature_error_estimate", h.quadrature_error_estimate}});
    return 0;
}

int cmd_verify(const Output& out, bool list, const std::string& suite, std::uint64_t seed, const std::vector<std::string>& grid_items)
{
    if (list) {
        std::ostringstream os;
        for (const auto& s : suite_catalog()) os << s.name << '\t' << s.anchor << '\t' << s.identity << '\n';
        emit(out, os.str());
        return 0;
    }
    if (suite.empty()) throw UsageError("verify needs --suite or --list");
    GridOverrides grid;
    for (const auto& item : grid_items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--grid expects key=v1,v2,..., got '" + item + "'");
        grid[item.substr(0, eq)] = item.substr(eq + 1);
    }
    const auto report = run_verify_suite(suite, seed, grid);
    std::ostringstream os;
    if (out.format == Format::csv) write_csv(os, report);
    else if (out.format == Format::pretty) write_pretty(os, report, out.timing);
    else os << report_to_json(report, out.timing).dump(2) << '\n';
    emit(out, os.str());
    if (!out.path.empty()) write_pretty(std::cerr, report, out.timing);
    return report.all_pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zonal harmonics toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    std::string format = "json";
    app.add_option("--format", format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--out", out.path, "write output to a file");

    int d = 0;
    std::string poly;
    auto* decompose_cmd = app.add_subcommand("decompose", "canonical harmonic decomposition of a homogeneous polynomial");
    decompose_cmd->add_option("--d", d, "dimension")->required()->check(CLI::PositiveNumber);
    decompose_cmd->add_option("poly", poly, "polynomial text or a file holding it")->required();

    std::string alpha;
    int degree = 0;
    std::optional<double> at;
    auto* geg_cmd = app.add_subcommand("gegenbauer", "Gegenbauer polynomial coefficients or value");
    geg_cmd->add_option("--alpha", alpha, "alpha = (d-2)/2 as p/q")->required();
    geg_cmd->add_option("--degree", degree)->required();
    geg_cmd->add_option("--at", at, "evaluate at t");

    std::string profile;
    int terms = 0;
    auto* zonal_cmd = app.add_subcommand("zonal-expand", "zonal expansion coefficients f_m");
    zonal_cmd->add_option("--alpha", alpha)->required();
    zonal_cmd->add_option("--profile", profile, "planewave[:r], monomial[:l], constant[:c], generating[:r] or a Taylor file")->required();
    zonal_cmd->add_option("--terms", terms)->required();

    double radius = 1.0;
    auto* pw_cmd = app.add_subcommand("planewave", "plane wave expansion coefficients and partial sum");
    pw_cmd->add_option("--alpha", alpha)->required();
    pw_cmd->add_option("--r", radius)->required();
    pw_cmd->add_option("--terms", terms)->default_val(50);
    pw_cmd->add_option("--at", at, "(xi|eta) for the partial sum");

    std::string nu;
    double t = 0.0;
    auto* bessel_cmd = app.add_subcommand("bessel", "J_nu(t) and spherical j_nu(t)");
    bessel_cmd->add_option("--nu", nu)->required();
    bessel_cmd->add_option("--at", t)->required();

    int l = 0;
    int s = 0;
    std::string grid = "0.5,1,2,5,10";
    double tol = 1e-11;
    auto* rec_cmd = app.add_subcommand("verify-recurrence", "multistep Bessel recurrence residuals as CSV");
    rec_cmd->add_option("--alpha", alpha)->required();
    rec_cmd->add_option("--l", l)->required();
    rec_cmd->add_option("--s", s)->required();
    rec_cmd->add_option("--grid", grid, "comma separated r values")->capture_default_str();
    rec_cmd->add_option("--tol", tol)->capture_default_str();

    std::string point;
    std::string method = "components";
    double ft_tol = 1e-13;
    auto* ft_cmd = app.add_subcommand("ft-sphere", "Fourier transform of P dsigma on the sphere");
    ft_cmd->add_option("--poly", poly, "polynomial text or a file holding it")->required();
    ft_cmd->add_option("--at", point, "x1,x2,...")->required();
    ft_cmd->add_option("--method", method)->check(CLI::IsMember({"components", "laplacian", "oracle"}))->capture_default_str();
    ft_cmd->add_option("--tol", ft_tol, "oracle tolerance")->capture_default_str();

    std::string radial = "gaussian";
    double h_tol = 1e-12;
    auto* hankel_cmd = app.add_subcommand("hankel", "Hankel transform of a radial profile");
    hankel_cmd->add_option("--nu", nu)->required();
    hankel_cmd->add_option("--profile", radial, "gaussian[:a] or bump[:width]")->capture_default_str();
    hankel_cmd->add_option("--at", t)->required();
    hankel_cmd->add_option("--tol", h_tol)->capture_default_str();

    std::string suite;
    std::uint64_t seed = 1;
    bool list = false;
    std::vector<std::string> grid_items;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite);
    verify_cmd->add_option("--seed", seed)->capture_default_str();
    verify_cmd->add_flag("--list", list, "list suites and the results they check");
    verify_cmd->add_option("--grid", grid_items, "key=v1,v2,... override, repeatable");
    verify_cmd->add_flag("--timing", out.timing, "include wall time (output is then not reproducible)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    out.format = format == "csv" ? Format::csv : format == "pretty" ? Format::pretty : Format::json;

    try {
        if (*decompose_cmd) return cmd_decompose(out, d, poly);
        if (*geg_cmd) return cmd_gegenbauer(out, alpha, degree, at);
        if (*zonal_cmd) return cmd_zonal_expand(out, alpha, profile, terms);
        if (*pw_cmd) return cmd_planewave(out, alpha, radius, terms, at);
        if (*bessel_cmd) return cmd_bessel(out, nu, t);
        if (*rec_cmd) return cmd_verify_recurrence(out, alpha, l, s, grid, tol);
        if (*ft_cmd) return cmd_ft_sphere(out, poly, point, method, ft_tol);
        if (*hankel_cmd) return cmd_hankel(out, nu, radial, t, h_tol);
        if (*verify_cmd) return cmd_verify(out, list, suite, seed, grid_items);
    } catch (const ParseError& e) {
        std::cerr << "error: polynomial " << e.what() << '\n';
        return 2;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
