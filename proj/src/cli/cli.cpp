#include "chromatic/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>
#include <variant>

#include "chromatic/basis_functions.hpp"
#include "chromatic/errors.hpp"
#include "chromatic/expansions.hpp"
#include "chromatic/fir_design.hpp"
#include "chromatic/io.hpp"
#include "chromatic/orthopoly.hpp"
#include "chromatic/power_spaces.hpp"

namespace chromatic {
namespace {

using Cell = std::variant<std::string, double>;

struct Sheet {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;
};

struct RunConfig {
    std::size_t threads = 1;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "csv";
};

std::string render(const Sheet& sheet, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json doc;
        doc["columns"] = sheet.header;
        auto rows = nlohmann::json::array();
        for (const auto& r : sheet.rows) {
            auto jr = nlohmann::json::array();
            for (const auto& c : r) {
                if (const auto* s = std::get_if<std::string>(&c)) jr.push_back(*s);
                else if (std::isfinite(std::get<double>(c))) jr.push_back(std::get<double>(c));
                else jr.push_back(nullptr);
            }
            rows.push_back(std::move(jr));
        }
        doc["rows"] = std::move(rows);
        os << doc.dump() << '\n';
        return os.str();
    }
    io::CsvWriter csv(os, sheet.header);
    for (const auto& r : sheet.rows) {
        std::vector<std::string> text;
        std::vector<double> nums;
        // text cells only ever lead a row
        for (const auto& c : r) {
            if (const auto* s = std::get_if<std::string>(&c)) text.push_back(*s);
            else nums.push_back(std::get<double>(c));
        }
        csv.row(text, nums);
    }
    return os.str();
}

void emit(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (cfg.output.empty()) out << text;
    else io::write_file(cfg.output, text);
}

std::vector<double> parse_grid(const std::string& spec) {
    double a = 0, b = 0, h = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> a >> c1 >> b >> c2 >> h) || c1 != ':' || c2 != ':' || !(is >> std::ws).eof())
        throw CLI::ValidationError("grid", "expected start:stop:step, got '" + spec + "'");
    if (!(h > 0) || b < a) throw CLI::ValidationError("grid", "need step > 0 and stop >= start");
    const auto count = static_cast<std::size_t>(std::floor((b - a) / h + 1e-9)) + 1;
    if (count > 10'000'000) throw CLI::ValidationError("grid", "more than 1e7 points");
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) g[i] = a + static_cast<double>(i) * h;
    return g;
}

// exp:w | cos:w | sinc | const:re[,im]
FunctionSpec parse_function(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size())
            throw CLI::ValidationError("function", "bad number '" + s + "' in '" + spec + "'");
        return v;
    };
    if (head == "sinc" && arg.empty()) return FunctionSpec::sinc();
    if (head == "exp") return FunctionSpec::exponential(number(arg));
    if (head == "cos") return FunctionSpec::cosine(number(arg));
    if (head == "const") {
        const auto comma = arg.find(',');
        if (comma == std::string::npos) return FunctionSpec::constant(number(arg));
        return FunctionSpec::constant(cplx(number(arg.substr(0, comma)), number(arg.substr(comma + 1))));
    }
    throw CLI::ValidationError("function", "unknown function '" + spec + "' (exp:w, cos:w, sinc, const:c)");
}

void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body) {
    threads = std::clamp<std::size_t>(threads, 1, 64);
    if (threads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += threads) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Shannon samples uniform in (-1, 1): top 53 bits of each mt19937_64 draw.
std::vector<double> shannon_samples(std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::vector<double> s(count);
    for (auto& v : s) v = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    return s;
}

struct Options {
    std::string family = "legendre";
    std::size_t n = 0, N = 40, K = 0, horizon = 10000, refine = 0, grid_density = 16, length = 64;
    double omega = 0.5, sigma = 1.0, u = 0.0, zr = 0.3, zi = 0.0, kappa = 3.0;
    double passband = 0.9, stopband = 0.98, weight_ratio = 10.0;
    std::string grid = "-5:5:0.01", function = "exp:1", kind = "exponential", sequence = "nu";
    std::string filter_path, signal_path, synthetic, cache_dir;
    std::size_t stride = 0;
    bool list = false, derivatives = false, derivative_target = false, closed = false, all_orders = false;
};

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chromatic derivatives and expansions toolkit", "chromatic"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    Options o;
    app.add_option("--threads", cfg.threads, "worker threads for grid evaluation")->check(CLI::Range(1, 64));
    app.add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)");
    app.add_option("--output,-o", cfg.output, "output file (default stdout)");
    app.add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    std::function<int()> action;
    auto family_opt = [&](CLI::App* sc) {
        sc->add_option("--family", o.family, "family, e.g. legendre or jacobi(0.5,-0.25)");
    };

    auto* fam = app.add_subcommand("families", "list the eight representative families");
    fam->add_flag("--list", o.list, "list families (default)");
    fam->callback([&] {
        action = [&] {
            Sheet s{{"family", "symmetric", "support", "growth_exponent", "weak_bound_M", "rho"}, {}};
            for (const auto& id : representative_families()) {
                const FamilySpec f(id);
                s.rows.push_back({f.name(), f.symmetric() ? "true" : "false", f.support_description(),
                                  f.growth_exponent(), f.weak_bound_M().value_or(NAN), f.rho()});
            }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* poly = app.add_subcommand("poly", "p_n(omega) for n = 0..N");
    family_opt(poly);
    poly->add_option("--N", o.N, "highest degree");
    poly->add_option("--omega", o.omega, "evaluation point");
    poly->add_flag("--derivatives", o.derivatives, "also emit p_n'(omega)");
    poly->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const auto ev = eval_all_p(f, o.N, o.omega, o.derivatives);
            Sheet s{{"n", "p"}, {}};
            if (o.derivatives) s.header.push_back("dp");
            for (std::size_t n = 0; n <= o.N; ++n) {
                std::vector<Cell> r{static_cast<double>(n), ev.values[n]};
                if (o.derivatives) r.push_back((*ev.derivative_values)[n]);
                s.rows.push_back(std::move(r));
            }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* basis = app.add_subcommand("basis", "basis functions K^n[m](t) on a grid");
    family_opt(basis);
    basis->add_option("--n", o.n, "order");
    basis->add_option("--t", o.grid, "grid start:stop:step");
    basis->add_flag("--all-orders", o.all_orders, "emit every order 0..n");
    basis->add_flag("--closed", o.closed, "use the closed form instead of the series");
    basis->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const auto grid = parse_grid(o.grid);
            const std::size_t n0 = o.all_orders ? 0 : o.n;
            const std::size_t orders = o.n - n0 + 1;
            if (o.closed && !has_closed_form(f))
                throw UnsupportedError("no closed form for " + f.name());
            std::vector<cplx> vals(grid.size() * orders);
            std::optional<BasisEvaluator> ev;
            if (!o.closed) ev.emplace(f, o.n);
            parallel_for(grid.size(), cfg.threads, [&](std::size_t i) {
                for (std::size_t j = 0; j < orders; ++j)
                    vals[i * orders + j] = o.closed ? kbasis_closed(f, n0 + j, grid[i]) : (*ev)(n0 + j, grid[i]);
            });
            Sheet s{{"t", "n", "value_re", "value_im"}, {}};
            for (std::size_t i = 0; i < grid.size(); ++i)
                for (std::size_t j = 0; j < orders; ++j) {
                    const cplx v = vals[i * orders + j];
                    s.rows.push_back({grid[i], static_cast<double>(n0 + j), v.real(), v.imag()});
                }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* tab = app.add_subcommand("table", "coefficient table b[n][k], cached on disk");
    family_opt(tab);
    tab->add_option("--N", o.N, "rows 0..N");
    tab->add_option("--K", o.K, "columns 0..K (default 2N+32)");
    tab->add_option("--cache-dir", o.cache_dir, "cache directory (default $CHROMATIC_CACHE_DIR)");
    tab->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const std::size_t K = o.K ? o.K : 2 * o.N + 32;
            const auto dir = o.cache_dir.empty() ? io::cache_directory() : std::filesystem::path(o.cache_dir);
            const auto cached = io::load_or_build_table(f, o.N, K, dir);
            err << (cached.from_cache ? "table read from " : "table built and cached in ")
                << io::table_cache_path(dir, f.id(), o.N, K).string() << '\n';
            Sheet s{{"n", "k", "b_re", "b_im"}, {}};
            for (std::size_t n = 0; n <= o.N; ++n)
                for (std::size_t k = 0; k <= K; ++k) {
                    const cplx v = cached.table(n, k);
                    s.rows.push_back({static_cast<double>(n), static_cast<double>(k), v.real(), v.imag()});
                }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* exp = app.add_subcommand("expand", "chromatic approximation CA[f,N,u](t) on a grid");
    family_opt(exp);
    exp->add_option("--function", o.function, "exp:w, cos:w, sinc or const:c");
    exp->add_option("--N", o.N, "expansion order");
    exp->add_option("--u", o.u, "expansion center");
    exp->add_option("--t", o.grid, "grid start:stop:step");
    exp->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const auto fn = parse_function(o.function);
            const auto grid = parse_grid(o.grid);
            std::vector<ApproximationResult> res(grid.size());
            parallel_for(grid.size(), cfg.threads,
                         [&](std::size_t i) { res[i] = chromatic_approximation(f, fn, o.u, o.N, grid[i]); });
            Sheet s{{"t", "exact_re", "exact_im", "approx_re", "approx_im", "residual", "tail_bound"}, {}};
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const cplx ex = fn.value(grid[i]);
                s.rows.push_back({grid[i], ex.real(), ex.imag(), res[i].value.real(), res[i].value.imag(),
                                  std::abs(res[i].value - ex), res[i].tail_bound.value_or(NAN)});
            }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* idn = app.add_subcommand("identity", "residual of an expansion identity for N = 1..N");
    family_opt(idn);
    idn->add_option("--kind", o.kind, "exponential, translation or constant-one")
        ->check(CLI::IsMember({"exponential", "translation", "constant-one"}));
    idn->add_option("--N", o.N, "largest order");
    idn->add_option("--omega", o.omega, "frequency (exponential)");
    idn->add_option("--u", o.u, "shift (translation)");
    idn->add_option("--z", o.zr, "Re z");
    idn->add_option("--zi", o.zi, "Im z");
    idn->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const cplx z(o.zr, o.zi);
            Sheet s{{"N", "residual"}, {}};
            for (std::size_t n = 1; n <= o.N; ++n) {
                double r = 0.0;
                if (o.kind == "exponential") r = identity_exponential(f, o.omega, z, n);
                else if (o.kind == "translation") r = identity_translation(f, o.u, z, n);
                else r = identity_constant_one(f, z, n);
                s.rows.push_back({static_cast<double>(n), r});
            }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* cmp = app.add_subcommand("compare", "chromatic vs Taylor approximation of a random band-limited signal");
    family_opt(cmp);
    cmp->add_option("--N", o.N, "approximation order (default 15)");
    cmp->add_option("--u", o.u, "expansion center");
    cmp->add_option("--t", o.grid, "grid start:stop:step (default -10:10:0.05)");
    cmp->callback([&] {
        action = [&] {
            if (!cmp->count("--N")) o.N = 15;
            if (!cmp->count("--t")) o.grid = "-10:10:0.05";
            const FamilySpec f(o.family);
            const auto fn = FunctionSpec::shannon_combo(shannon_samples(cfg.seed, 65), -32);
            const auto grid = parse_grid(o.grid);
            const auto rows = taylor_vs_chromatic_comparison(f, fn, o.u, o.N, grid);
            Sheet s{{"t", "exact", "chromatic", "taylor", "chromatic_error", "taylor_error"}, {}};
            for (const auto& r : rows)
                s.rows.push_back({r.t, r.exact.real(), r.chromatic.real(), r.taylor.real(),
                                  std::abs(r.chromatic - r.exact), std::abs(r.taylor - r.exact)});
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* dfir = app.add_subcommand("design-fir", "least-squares FIR filter for K^n");
    family_opt(dfir);
    dfir->add_option("--n", o.n, "derivative order (default 32)");
    dfir->add_option("--N", o.N, "half width, 2N+1 taps (default 64)");
    dfir->add_option("--passband", o.passband, "passband edge as a fraction of pi");
    dfir->add_option("--stopband", o.stopband, "stopband edge as a fraction of pi");
    dfir->add_option("--weight-ratio", o.weight_ratio, "stopband weight relative to passband");
    dfir->add_option("--grid-density", o.grid_density, "grid points per tap");
    dfir->add_option("--refine", o.refine, "Lawson reweighting iterations");
    dfir->add_flag("--derivative-target", o.derivative_target, "design for (w/pi)^n instead");
    dfir->callback([&] {
        action = [&] {
            if (!dfir->count("--n")) o.n = 32;
            if (!dfir->count("--N")) o.N = 64;
            FirDesignOptions opt;
            opt.passband_edge = o.passband * std::numbers::pi;
            opt.stopband_edge = o.stopband * std::numbers::pi;
            opt.weight_ratio = o.weight_ratio;
            opt.grid_density = o.grid_density;
            opt.refine_iterations = o.refine;
            const auto d = o.derivative_target ? design_derivative_ls(o.n, o.N, opt)
                                               : design_ls(FamilySpec(o.family), o.n, o.N, opt);
            err << "passband_max_error " << io::format_number(d.report.passband_max_error)
                << " stopband_max_magnitude " << io::format_number(d.report.stopband_max_magnitude) << '\n';
            if (cfg.format == "json") {
                emit(io::filter_to_json(d.filter, &d.report) + "\n", cfg, out);
            } else {
                Sheet s{{"k", "tap"}, {}};
                const long N = static_cast<long>(d.filter.half_width);
                for (long k = -N; k <= N; ++k) s.rows.push_back({static_cast<double>(k), d.filter.tap(k)});
                emit(render(s, "csv"), cfg, out);
            }
            return 0;
        };
    });

    auto* afir = app.add_subcommand("apply-fir", "apply a filter document to a sampled signal");
    afir->add_option("--filter", o.filter_path, "filter JSON from design-fir")->required();
    afir->add_option("--signal", o.signal_path, "CSV of samples at unit spacing");
    afir->add_option("--synthetic", o.synthetic, "generate samples of exp:w, cos:w, sinc or const:c");
    afir->add_option("--length", o.length, "synthetic sample count beyond the filter support");
    afir->callback([&] {
        action = [&] {
            const auto filter = io::filter_from_json(io::read_file(o.filter_path));
            if (o.signal_path.empty() == o.synthetic.empty())
                throw CLI::ValidationError("apply-fir", "give exactly one of --signal, --synthetic");
            std::vector<double> samples;
            std::optional<FunctionSpec> fn;
            if (!o.signal_path.empty()) {
                std::ifstream in(o.signal_path);
                if (!in) throw ArgumentError("cannot open " + o.signal_path);
                samples = io::read_signal_csv(in);
            } else {
                // the signal is real: exp:w is sampled as cos(w t)
                fn = parse_function(o.synthetic);
                if (fn->kind() == FunctionSpec::Kind::exponential) fn = FunctionSpec::cosine(fn->omega());
                if (fn->kind() == FunctionSpec::Kind::constant) fn = FunctionSpec::constant(fn->constant_value().real());
                const std::size_t count = o.length + 2 * filter.half_width;
                for (std::size_t j = 0; j < count; ++j) samples.push_back(fn->value(static_cast<double>(j)).real());
            }
            const long N = static_cast<long>(filter.half_width);
            Sheet s{{"t", "value"}, {}};
            if (fn) s.header.push_back("reference");
            const FamilySpec fam(filter.family);
            for (long t = N; t + N < static_cast<long>(samples.size()); ++t) {
                std::vector<Cell> r{static_cast<double>(t), apply(filter, samples, t).real()};
                if (fn) {
                    const auto jet = fn->chromatic_jet(fam, static_cast<double>(t), filter.order);
                    r.push_back(jet.values[filter.order].real());
                }
                s.rows.push_back(std::move(r));
            }
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* env = app.add_subcommand("envelope", "error envelope E_N(t) on a grid");
    family_opt(env);
    env->add_option("--N", o.N, "order");
    env->add_option("--t", o.grid, "grid start:stop:step");
    env->callback([&] {
        action = [&] {
            const FamilySpec f(o.family);
            const auto grid = parse_grid(o.grid);
            std::vector<double> e(grid.size());
            parallel_for(grid.size(), cfg.threads, [&](std::size_t i) { e[i] = error_envelope(f, o.N, grid[i]); });
            Sheet s{{"t", "envelope"}, {}};
            for (std::size_t i = 0; i < grid.size(); ++i) s.rows.push_back({grid[i], e[i]});
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* pn = app.add_subcommand("power-norm", "power seminorm sequences nu, beta or sigma");
    family_opt(pn);
    pn->add_option("--function", o.function, "exp:w, cos:w, sinc or const:c (nu, beta)");
    pn->add_option("--sequence", o.sequence, "nu, beta or sigma")->check(CLI::IsMember({"nu", "beta", "sigma"}));
    pn->add_option("--omega", o.omega, "first frequency (sigma)");
    pn->add_option("--sigma", o.sigma, "second frequency (sigma)");
    pn->add_option("--N", o.N, "horizon (default 100000)");
    pn->add_option("--t", o.u, "evaluation instant");
    pn->add_option("--stride", o.stride, "emit every stride-th n (default N/1000)");
    pn->callback([&] {
        action = [&] {
            if (!pn->count("--N")) o.N = 100000;
            const FamilySpec f(o.family);
            SequenceDiagnostics d;
            if (o.sequence == "sigma") d = sigma_sequence(f, o.omega, o.sigma, o.u, o.N);
            else if (o.sequence == "beta") d = beta_sequence(f, parse_function(o.function), o.u, o.N);
            else d = nu_sequence(f, parse_function(o.function), o.u, o.N);
            std::vector<double> prefix(d.values.size() + 1, 0.0);
            for (std::size_t n = 0; n < d.values.size(); ++n) prefix[n + 1] = prefix[n] + d.values[n];
            const std::size_t stride = o.stride ? o.stride : std::max<std::size_t>(1, o.N / 1000);
            Sheet s{{"n", "raw", "cesaro"}, {}};
            for (std::size_t n = 0; n <= o.N; n += stride) {
                const std::size_t a = n / 2;
                s.rows.push_back({static_cast<double>(n), d.values[n],
                                  (prefix[n + 1] - prefix[a]) / static_cast<double>(n + 1 - a)});
            }
            err << "cesaro mean over [N/2, N] " << io::format_number(d.averaged_tail) << ", oscillation "
                << io::format_number(d.oscillation) << '\n';
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* cond = app.add_subcommand("conditions", "finite-horizon evidence for conditions C1-C7");
    family_opt(cond);
    cond->add_option("--horizon", o.horizon, "horizon H");
    cond->add_option("--kappa", o.kappa, "exponent in C5");
    cond->callback([&] {
        action = [&] {
            const auto rep = check_conditions(FamilySpec(o.family), o.horizon, o.kappa);
            Sheet s{{"condition", "numeric", "analytic", "holds", "evidence", "block_ratio"}, {}};
            for (const auto& c : rep.conditions)
                s.rows.push_back({c.name, c.numeric ? "true" : "false",
                                  c.analytic ? (*c.analytic ? "true" : "false") : "unknown",
                                  c.holds() ? "true" : "false", c.evidence, c.block_ratio});
            err << rep.note << '\n';
            emit(render(s, cfg.format), cfg, out);
            return 0;
        };
    });

    auto* chk = app.add_subcommand("check", "run the invariant suite and print a pass/fail table");
    family_opt(chk);
    chk->add_option("--orders", o.N, "table order N");
    chk->callback([&] {
        action = [&] {
            const auto results = run_invariant_suite(FamilySpec(o.family), o.N);
            bool ok = true;
            std::size_t width = 0;
            for (const auto& r : results) width = std::max(width, r.name.size());
            out << "invariant suite for " << FamilySpec(o.family).name() << ", N = " << o.N << '\n';
            Sheet s{{"invariant", "status", "detail", "value", "tolerance"}, {}};
            for (const auto& r : results) {
                const char* status = r.skipped ? "SKIP" : (r.passed() ? "PASS" : "FAIL");
                ok = ok && r.passed();
                out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << status;
                if (!r.skipped) out << "  " << std::scientific << std::setprecision(2) << r.value << " <= " << r.tolerance;
                out << "  (" << r.detail << ")\n";
                s.rows.push_back({r.name, status, r.detail, r.skipped ? NAN : r.value, r.tolerance});
            }
            out << (ok ? "all invariants hold\n" : "some invariants FAILED\n");
            if (!cfg.output.empty()) io::write_file(cfg.output, render(s, cfg.format));
            return ok ? 0 : 1;
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        return action();
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ArgumentError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterDomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return cli_dispatch(args, out, err);
}

}  // namespace chromatic
