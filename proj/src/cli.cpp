#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracspec/fracspec.hpp"

namespace fracspec::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Numerical failure with the operation and point that produced it.
class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class F>
double evaluate(const std::string& op, double x, F&& f) {
    try {
        return f(x);
    } catch (const ConvergenceError& e) {
        throw Failure(op + " at " + format_double(x) + ": " + e.what());
    } catch (const OverflowError& e) {
        throw Failure(op + " at " + format_double(x) + ": overflow: " + e.what());
    }
}

struct Output {
    std::string format;
    std::string path;

    void add(CLI::App* sub, const std::string& default_format = "csv") {
        sub->add_option("--format", format, "output format (default: " + default_format + ")")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", path,
                        "output file; relative paths resolve against $FRACSPEC_OUTPUT_DIR when set "
                        "(default: standard output)");
    }
    bool json() const { return format == "json"; }
};

/// Either one point (--tau/--h/--x) or a uniform grid (--start --step --count).
struct Sampling {
    std::optional<double> point;
    double start = 0.0;
    double step = 0.1;
    int count = 0;

    void add(CLI::App* sub, const std::string& point_flag, const std::string& what) {
        auto* p = sub->add_option("--" + point_flag, point, "single " + what);
        auto* s = sub->add_option("--start", start, "first grid point")->capture_default_str();
        auto* d = sub->add_option("--step", step, "grid spacing")->capture_default_str();
        auto* c = sub->add_option("--count", count, "number of grid points (>= 2)");
        p->excludes(c);
        c->excludes(p);
        s->needs(c);
        d->needs(c);
    }

    void check(const std::string& point_flag) const {
        if (!point && count == 0) {
            throw ValidationError(std::vector<Violation>{
                {point_flag, "give --" + point_flag + " or a grid (--start, --step, --count)"}});
        }
        if (!point) Grid(start, step, count);  // validates
        if (point && !std::isfinite(*point)) throw ValidationError(std::vector<Violation>{{point_flag, "must be finite"}});
    }

    std::vector<double> points() const {
        if (point) return {*point};
        return Grid(start, step, count).points();
    }
    double grid_start() const { return point ? *point : start; }
    double grid_step() const { return point ? 0.0 : step; }
    int grid_count() const { return point ? 1 : count; }
};

struct ModelOptions {
    std::optional<std::string> family;
    double mu = 1.0;
    std::optional<double> beta;
    double sigma2 = 1.0;
    std::optional<double> alpha;
    std::optional<double> n;
    std::optional<double> kappa;

    void add(CLI::App* sub) {
        sub->add_option("--family", family, "model family: weyl, even or odd")->required();
        sub->add_option("--mu", mu, "mu > 0")->capture_default_str();
        sub->add_option("--beta", beta, "beta > 0")->required();
        sub->add_option("--sigma2", sigma2, "sigma^2 > 0")->capture_default_str();
        sub->add_option("--alpha", alpha, "fractional order in (0, 1] (weyl)");
        sub->add_option("--n", n, "integer >= 1 (even, odd)");
        sub->add_option("--kappa", kappa, "-1 or +1 (odd)");
    }

    ModelSpec model() const {
        RawModel r;
        r.family = family;
        r.mu = mu;
        r.beta = beta;
        r.sigma2 = sigma2;
        r.alpha = alpha;
        r.n = n;
        r.kappa = kappa;
        return validate_model(r);
    }
};

struct PlanOptions {
    int samples = 1 << 14;
    double cutoff = 0.0;
    std::string taper = "tail-corrected";

    void add(CLI::App* sub) {
        sub->add_option("--samples", samples, "transform sample count")->capture_default_str();
        sub->add_option("--cutoff", cutoff, "frequency cutoff (0 = automatic)")->capture_default_str();
        sub->add_option("--taper", taper, "tail handling beyond the cutoff")
            ->check(CLI::IsMember({"tail-corrected", "none"}))
            ->capture_default_str();
    }

    TransformPlan plan() const {
        TransformPlan p;
        p.sample_count = samples;
        p.frequency_cutoff = cutoff;
        p.taper = taper == "none" ? Taper::None : Taper::TailCorrected;
        p.check();
        return p;
    }
};

std::string emit_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& cols) {
    std::ostringstream s;
    write_csv(s, header, cols);
    return s.str();
}

std::string emit_json(const Json& j) { return j.dump(2) + "\n"; }

void write_output(const Output& o, const std::string& body, std::ostream& out) {
    if (o.path.empty()) {
        out << body;
        out.flush();
        return;
    }
    std::filesystem::path p(o.path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("FRACSPEC_OUTPUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
    }
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    f << body;
    if (!f) throw std::ios_base::failure("cannot write " + p.string());
}

// ---------------------------------------------------------------------------
// Subcommands. Each returns the text to emit.

std::string cmd_spectral(const ModelOptions& mo, const Sampling& s, const Output& o) {
    const auto m = mo.model();
    s.check("tau");
    const auto tau = s.points();
    std::vector<double> re, im, mod, phase;
    for (double t : tau) {
        const auto f = spectral_density(m, t);
        re.push_back(f.real());
        im.push_back(f.imag());
        mod.push_back(spectral_modulus(m, t));
        phase.push_back(spectral_phase(m, t));
    }
    if (o.json()) {
        return emit_json(curve_json(model_to_json(m), "spectral", "exact", s.grid_start(), s.grid_step(),
                                    s.grid_count(), re, m.is_real() ? std::vector<double>{} : im));
    }
    if (m.is_real()) return emit_csv({"tau", "f"}, {tau, re});
    return emit_csv({"tau", "f_re", "f_im", "modulus", "phase"}, {tau, re, im, mod, phase});
}

std::string cmd_covariance(const ModelOptions& mo, const Sampling& s, const std::string& method_name_,
                           const PlanOptions& po, const Output& o) {
    const auto m = mo.model();
    s.check("h");
    const Method method = *parse_method(method_name_);
    const auto plan = po.plan();
    const auto lags = s.points();
    std::vector<double> cov;
    std::string used;
    for (double h : lags) {
        cov.push_back(evaluate("covariance", h, [&](double x) { return covariance(m, x, method, plan); }));
        const std::string name = fracspec::method_name(resolve_method(m, h, method));
        if (used.empty()) used = name;
        else if (used != name && used.find(name) == std::string::npos) used += "+" + name;
    }
    if (o.json()) {
        return emit_json(curve_json(model_to_json(m), "covariance", used, s.grid_start(), s.grid_step(),
                                    s.grid_count(), cov));
    }
    return emit_csv({"h", "cov"}, {lags, cov});
}

std::string cmd_kernel(int order, int kappa, double w, const Sampling& s, const Output& o) {
    const KernelSpec spec(order, kappa);
    if (!(w > 0.0 && std::isfinite(w))) throw ValidationError(std::vector<Violation>{{"w", "must be > 0"}});
    s.check("x");
    const auto xs = s.points();
    std::vector<double> u;
    for (double x : xs) u.push_back(evaluate("heat_kernel", x, [&](double v) { return heat_kernel(spec, v, w); }));
    if (o.json()) {
        Json model{{"order", spec.order()}, {"kappa", spec.kappa()}, {"w", w}};
        return emit_json(curve_json(model, "kernel", "exact", s.grid_start(), s.grid_step(), s.grid_count(), u));
    }
    return emit_csv({"x", "u"}, {xs, u});
}

struct SpecfunOptions {
    std::string function;
    double nu = 0.0;
    double alpha = 0.5;
    double s = 1.0;
    double scale = 1.0;
    double w = 1.0;
};

std::string cmd_specfun(const SpecfunOptions& f, const Sampling& s, const Output& o) {
    s.check("x");
    const auto xs = s.points();
    std::function<double(double)> g;
    Json params{{"function", f.function}};
    if (f.function == "bessel_k") {
        g = [&](double x) { return bessel_k(f.nu, x); };
        params["nu"] = f.nu;
    } else if (f.function == "airy_ai") {
        g = [](double x) { return airy_ai(x); };
    } else if (f.function == "airy_ai_prime") {
        g = [](double x) { return airy_ai_prime(x); };
    } else if (f.function == "gamma") {
        g = [](double x) { return gamma_fn(x); };
    } else if (f.function == "onesided_stable") {
        const auto idx = StableIndex::one_sided(f.alpha);
        g = [&, idx](double x) { return onesided_stable_density(idx, x, f.s).value; };
        params["alpha"] = f.alpha;
        params["s"] = f.s;
    } else {
        const auto idx = StableIndex::symmetric(f.alpha);
        g = [&, idx](double x) { return symmetric_stable_density(idx, f.scale, x, f.w).value; };
        params["alpha"] = f.alpha;
        params["scale"] = f.scale;
        params["w"] = f.w;
    }
    std::vector<double> v;
    for (double x : xs) v.push_back(evaluate(f.function, x, g));
    if (o.json()) {
        return emit_json(curve_json(params, "specfun", "exact", s.grid_start(), s.grid_step(), s.grid_count(), v));
    }
    return emit_csv({"x", "value"}, {xs, v});
}

struct SimulateOptions {
    int count = 4096;
    std::optional<double> dt;
    std::uint64_t seed = 1;
    double alias_tolerance = 1e-6;
};

std::string cmd_simulate(const ModelOptions& mo, const SimulateOptions& so, const Output& o) {
    const auto m = mo.model();
    if (!so.dt) throw ValidationError(std::vector<Violation>{{"dt", "required"}});
    const auto path = synthesize(m, so.count, *so.dt, so.seed, so.alias_tolerance);
    std::vector<double> t(path.values.size());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = static_cast<double>(k) * path.dt;
    if (o.json()) {
        auto j = curve_json(model_to_json(m), "path", "spectral-synthesis", 0.0, path.dt,
                            static_cast<int>(path.values.size()), path.values);
        j["seed"] = path.seed;
        return emit_json(j);
    }
    return emit_csv({"t", "x"}, {t, path.values});
}

struct FigureOptions {
    std::vector<double> alphas{0.25, 0.5, 0.75, 1.0};
    std::vector<double> betas{0.5, 1.0, 2.0};
    double mu = 1.0;
    double sigma2 = 1.0;
    double tau_max = 5.0;
    int half = 100;
};

std::string cmd_figure(const FigureOptions& fo, const Output& o) {
    const auto t = figure_data(fo.alphas, fo.betas, fo.mu, fo.sigma2, fo.tau_max, fo.half);
    if (!o.json()) return emit_csv({"alpha", "beta", "tau", "f"}, {t.alpha, t.beta, t.tau, t.f});
    Json curves = Json::array();
    const std::size_t per = 2 * static_cast<std::size_t>(fo.half) + 1;
    for (std::size_t k = 0; k < t.f.size(); k += per) {
        const auto m = ModelSpec::weyl(fo.mu, t.beta[k], fo.sigma2, t.alpha[k]);
        curves.push_back(curve_json(model_to_json(m), "spectral", "exact", -fo.tau_max, fo.tau_max / fo.half,
                                    static_cast<int>(per),
                                    std::vector<double>(t.f.begin() + k, t.f.begin() + k + per)));
    }
    return emit_json(Json{{"curves", curves}});
}

struct ValidateOptions {
    bool quick = false;
    bool statistical = false;
    bool printed_even_form = false;
    std::vector<int> only;
};

std::string cmd_validate(const ValidateOptions& vo, const Output& o, std::ostream& err, bool& all_pass) {
    SuiteConfig cfg;
    cfg.quick = vo.quick;
    cfg.statistical = vo.statistical;
    cfg.printed_even_form = vo.printed_even_form;
    cfg.only = vo.only;
    const auto reports = run_validation_suite(cfg);
    all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        if (r.skipped) {
            err << "criterion " << r.id << " SKIP " << r.title << " (" << r.skip_reason << ")\n";
            continue;
        }
        err << "criterion " << r.id << (r.passed() ? " PASS " : " FAIL ") << r.title << " ("
            << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks)\n";
        for (const auto& c : r.checks) {
            if (!c.pass) {
                err << "  failed: " << c.name << " observed=" << format_double(c.observed)
                    << " expected=" << format_double(c.expected) << " tolerance=" << format_double(c.tolerance)
                    << (c.note.empty() ? "" : " (" + c.note + ")") << "\n";
            } else if (!c.note.empty()) {
                err << "  note: " << c.name << ": " << c.note << "\n";
            }
        }
    }
    if (o.json()) return emit_json(report_to_json(reports));
    std::ostringstream s;
    s << "criterion,name,observed,expected,tolerance,comparison,pass,note\n";
    for (const auto& r : reports) {
        for (const auto& c : r.checks) {
            std::string name = c.name, note = c.note;
            std::replace(name.begin(), name.end(), ',', ';');
            std::replace(note.begin(), note.end(), ',', ';');
            std::replace(note.begin(), note.end(), '\n', ' ');
            s << r.id << "," << name << "," << format_double(c.observed) << "," << format_double(c.expected) << ","
              << format_double(c.tolerance) << "," << comparison_name(c.comparison) << ","
              << (c.pass ? "true" : "false") << "," << note << "\n";
        }
    }
    return s.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectral densities and covariances of fractional and higher-order Gaussian models"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print this help and exit");
    app.set_help_all_flag("--help-all", "expand help for every subcommand");

    ModelOptions model;
    Sampling sampling;
    Output output;
    PlanOptions plan;
    std::string method = "auto";
    int order = 2, kappa = 1;
    double w = 1.0;
    SpecfunOptions sf;
    SimulateOptions sim;
    FigureOptions fig;
    ValidateOptions val;

    auto* spectral = app.add_subcommand("spectral", "spectral density f(tau)");
    model.add(spectral);
    sampling.add(spectral, "tau", "frequency");
    output.add(spectral);

    auto* cov = app.add_subcommand("covariance", "covariance Cov(h)");
    model.add(cov);
    sampling.add(cov, "h", "lag");
    cov->add_option("--method", method, "auto, quadrature, closed or fourier")
        ->check(CLI::IsMember({"auto", "quadrature", "closed", "fourier"}))
        ->capture_default_str();
    plan.add(cov);
    output.add(cov);

    auto* kernel = app.add_subcommand("kernel", "higher-order heat kernel u(x, w)");
    kernel->add_option("--order", order, "derivative order >= 2")->capture_default_str();
    kernel->add_option("--kappa", kappa, "sign for odd orders, -1 or +1")->capture_default_str();
    kernel->add_option("--w", w, "time w > 0")->capture_default_str();
    sampling.add(kernel, "x", "point");
    output.add(kernel);

    auto* specfun = app.add_subcommand("specfun", "special functions");
    specfun->add_option("--function", sf.function, "function to tabulate")
        ->required()
        ->check(CLI::IsMember(
            {"bessel_k", "airy_ai", "airy_ai_prime", "gamma", "onesided_stable", "symmetric_stable"}));
    specfun->add_option("--nu", sf.nu, "Bessel order")->capture_default_str();
    specfun->add_option("--alpha", sf.alpha, "stable index")->capture_default_str();
    specfun->add_option("--s", sf.s, "subordinator time (onesided_stable)")->capture_default_str();
    specfun->add_option("--scale", sf.scale, "scale (symmetric_stable)")->capture_default_str();
    specfun->add_option("--w", sf.w, "time (symmetric_stable)")->capture_default_str();
    sampling.add(specfun, "x", "point");
    output.add(specfun);

    auto* simulate = app.add_subcommand("simulate", "Gaussian sample path by spectral synthesis");
    model.add(simulate);
    simulate->add_option("--count", sim.count, "number of samples (even, >= 256)")->capture_default_str();
    simulate->add_option("--dt", sim.dt, "sampling interval")->required();
    simulate->add_option("--seed", sim.seed, "random seed")->capture_default_str();
    simulate->add_option("--alias-tolerance", sim.alias_tolerance, "largest allowed f(pi/dt)/f(0)")
        ->capture_default_str();
    output.add(simulate);

    auto* validate = app.add_subcommand("validate", "run the validation suite");
    validate->add_flag("--quick", val.quick, "reduced panels");
    validate->add_flag("--statistical", val.statistical, "include the seeded synthesis checks");
    validate->add_flag("--include-printed-even-form", val.printed_even_form,
                       "report the printed n = 1 even-order closed form against the integral");
    validate->add_option("--only", val.only, "criterion numbers to run (repeatable)")->check(CLI::Range(1, 10));
    output.add(validate, "json");

    auto* figure = app.add_subcommand("figure", "Weyl spectral curves over an (alpha, beta) grid");
    figure->add_option("--alphas", fig.alphas, "alpha values")->delimiter(',')->capture_default_str();
    figure->add_option("--betas", fig.betas, "beta values")->delimiter(',')->capture_default_str();
    figure->add_option("--mu", fig.mu, "mu > 0")->capture_default_str();
    figure->add_option("--sigma2", fig.sigma2, "sigma^2 > 0")->capture_default_str();
    figure->add_option("--tau-max", fig.tau_max, "tau range [-tau_max, tau_max]")->capture_default_str();
    figure->add_option("--points-per-side", fig.half, "grid points on each side of 0")->capture_default_str();
    output.add(figure);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 2;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    if (output.format.empty()) output.format = name == "validate" ? "json" : "csv";
    try {
        std::string body;
        int code = 0;
        if (name == "spectral") body = cmd_spectral(model, sampling, output);
        else if (name == "covariance") body = cmd_covariance(model, sampling, method, plan, output);
        else if (name == "kernel") body = cmd_kernel(order, kappa, w, sampling, output);
        else if (name == "specfun") body = cmd_specfun(sf, sampling, output);
        else if (name == "simulate") body = cmd_simulate(model, sim, output);
        else if (name == "figure") body = cmd_figure(fig, output);
        else {
            bool all_pass = false;
            body = cmd_validate(val, output, err, all_pass);
            code = all_pass ? 0 : 1;
        }
        write_output(output, body, out);
        return code;
    } catch (const ValidationError& e) {
        err << "fracspec " << name << ": invalid arguments: " << e.what() << "\n";
        return 2;
    } catch (const AliasingError& e) {
        err << "fracspec " << name << ": " << e.what() << " (max_dt=" << format_double(e.max_dt()) << ")\n";
        return 2;
    } catch (const DivergentVarianceError& e) {
        err << "fracspec " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const MethodUnavailableError& e) {
        err << "fracspec " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "fracspec " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "fracspec " << name << ": " << e.what() << "\n";
        return 2;
    } catch (const Failure& e) {
        err << "fracspec " << name << ": numerical failure in " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "fracspec " << name << ": numerical failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace fracspec::cli
