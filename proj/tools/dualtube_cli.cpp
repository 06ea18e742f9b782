// Command-line front end: every computation reachable with reproducible
// seeds and machine-readable output (CSV with comment headers, or JSON
// {meta, data}). Exit codes: 0 ok, 2 validation error, 3 numerical
// non-convergence, 4 cross-check mismatch.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualtube/bessel.hpp"
#include "dualtube/density.hpp"
#include "dualtube/exact.hpp"
#include "dualtube/lattice.hpp"
#include "dualtube/mgf.hpp"
#include "dualtube/moments.hpp"
#include "dualtube/numerics.hpp"
#include "dualtube/rng.hpp"
#include "dualtube/sampler.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;
using namespace dualtube;

// ordered key=value pairs echoed into every output header
using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct CommonOpts {
    std::string output;          // empty => stdout
    std::string format = "csv";  // csv | json
    std::uint64_t seed = 12345;
    bool allow_thin = false;
};

std::string resolve_output(const std::string& path) {
    if (path.empty()) return path;
    if (path.front() != '/') {
        if (const char* dir = std::getenv("DUALTUBE_OUT_DIR")) {
            return std::string(dir) + "/" + path;
        }
    }
    return path;
}

// open the resolved path, or fall back to stdout for an empty path
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::invalid_argument("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void write_csv_header(std::ostream& out, const std::string& command, const ConfigEcho& cfg,
                      std::uint64_t seed) {
    out << "# dualtube " << kVersion << "\n# command: " << command;
    for (const auto& [k, v] : cfg) out << ' ' << k << '=' << v;
    out << "\n# seed: " << seed << '\n';
}

json make_meta(const std::string& command, const ConfigEcho& cfg, std::uint64_t seed) {
    json meta;
    meta["tool"] = "dualtube";
    meta["version"] = kVersion;
    meta["command"] = command;
    json config = json::object();
    for (const auto& [k, v] : cfg) config[k] = v;
    meta["config"] = config;
    meta["seed"] = seed;
    return meta;
}

void emit_json(std::ostream& out, json meta, json data) {
    json doc;
    doc["meta"] = std::move(meta);
    doc["data"] = std::move(data);
    out << doc.dump(2) << '\n';
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

ChiralVector make_chiral(int p, int q, bool allow_thin) {
    const ChiralVector cv(p, q); // throws below p+q = 3
    if (!cv.physical() && !allow_thin)
        throw std::invalid_argument(
            "chiral vector with p+q < 5 is not physically realizable; pass --allow-thin to "
            "compute with it anyway");
    return cv;
}

// ---------------------------------------------------------------------------
// moments

MomentMethod parse_method(const std::string& name) {
    for (const MomentMethod m :
         {MomentMethod::indicator, MomentMethod::binomial_ratio, MomentMethod::seven_multinomial,
          MomentMethod::oracle, MomentMethod::triangular_sum}) {
        if (name == moment_method_name(m)) return m;
    }
    throw std::invalid_argument("unknown moment method: " + name);
}

int run_moments(const CommonOpts& common, int p, int q, bool triangular, int k_max,
                const std::string& methods_arg) {
    std::optional<ChiralVector> chiral;
    if (!triangular) chiral = make_chiral(p, q, common.allow_thin);

    std::vector<MomentMethod> methods;
    if (methods_arg != "all") {
        std::stringstream ss(methods_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) methods.push_back(parse_method(tok));
    }

    const auto table = moment_table(chiral, k_max, methods); // throws MomentMismatch
    ConfigEcho cfg;
    if (triangular) {
        cfg.emplace_back("lattice", "triangular");
    } else {
        cfg.emplace_back("p", std::to_string(chiral->p));
        cfg.emplace_back("q", std::to_string(chiral->q));
    }
    cfg.emplace_back("kmax", std::to_string(k_max));
    cfg.emplace_back("methods", methods_arg);

    OutputTarget target(resolve_output(common.output));
    if (common.format == "json") {
        json rows = json::array();
        for (const auto& seq : table)
            for (std::size_t k = 0; k < seq.values.size(); ++k)
                rows.push_back({{"k", k},
                                {"method", moment_method_name(seq.method)},
                                {"value", to_decimal(seq.values[k])}});
        json meta = make_meta("moments", cfg, common.seed);
        meta["cross_check"] = "ok";
        emit_json(target.stream(), std::move(meta), {{"rows", std::move(rows)}});
    } else {
        write_csv_header(target.stream(), "moments", cfg, common.seed);
        target.stream() << "# cross-check: ok (" << table.size() << " methods agree)\n";
        export_moments_csv(table, target.stream());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sample

std::vector<long> hist_counts(const std::vector<double>& samples, int bins) {
    std::vector<long> counts(bins, 0);
    for (const double s : samples) {
        int b = static_cast<int>(s / 9.0 * bins);
        if (b < 0) b = 0;
        if (b >= bins) b = bins - 1;
        ++counts[b];
    }
    return counts;
}

int run_sample(const CommonOpts& common, int p, int q, double limit_c, bool use_limit,
               std::size_t n, int bins) {
    if (bins < 1) throw std::invalid_argument("--bins must be >= 1");
    if (n < 1) throw std::invalid_argument("--n must be >= 1");

    SeededStream stream(common.seed);
    std::vector<double> samples;
    ConfigEcho cfg;
    if (use_limit) {
        if (limit_c < 0.0 || limit_c > 1.0)
            throw std::invalid_argument("--limit-c must lie in [0,1]");
        samples = sample_triangular_limit(limit_c, stream, n);
        cfg.emplace_back("limit-c", fmt(limit_c));
    } else {
        const ChiralVector cv = make_chiral(p, q, common.allow_thin);
        samples = sample_general(cv, stream, n);
        cfg.emplace_back("p", std::to_string(cv.p));
        cfg.emplace_back("q", std::to_string(cv.q));
    }
    cfg.emplace_back("n", std::to_string(n));
    cfg.emplace_back("bins", std::to_string(bins));

    const std::string out_path = resolve_output(common.output);
    if (common.format == "json") {
        OutputTarget target(out_path);
        json data;
        data["lambda"] = samples;
        const auto counts = hist_counts(samples, bins);
        json h;
        json lefts = json::array(), rights = json::array(), cnt = json::array();
        for (int b = 0; b < bins; ++b) {
            lefts.push_back(9.0 * b / bins);
            rights.push_back(9.0 * (b + 1) / bins);
            cnt.push_back(counts[b]);
        }
        h["bin_left"] = std::move(lefts);
        h["bin_right"] = std::move(rights);
        h["count"] = std::move(cnt);
        data["histogram"] = std::move(h);
        emit_json(target.stream(), make_meta("sample", cfg, common.seed), std::move(data));
        return 0;
    }

    OutputTarget target(out_path);
    write_csv_header(target.stream(), "sample", cfg, common.seed);
    export_samples_csv(samples, target.stream());
    if (out_path.empty()) {
        target.stream() << "# histogram\n";
        export_histogram_csv(samples, bins, target.stream());
    } else {
        OutputTarget hist_target(out_path + ".hist.csv");
        write_csv_header(hist_target.stream(), "sample", cfg, common.seed);
        export_histogram_csv(samples, bins, hist_target.stream());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// pdf

int run_pdf(const CommonOpts& common, int p, int q, bool triangular, int grid, int grid_size,
            int oscillations, double tol) {
    if (grid < 2) throw std::invalid_argument("--grid must be >= 2");

    ConfigEcho cfg;
    const std::string out_path = resolve_output(common.output);

    if (triangular) {
        cfg.emplace_back("lattice", "triangular");
        cfg.emplace_back("grid", std::to_string(grid));
        cfg.emplace_back("oscillations", std::to_string(oscillations));
        cfg.emplace_back("tol", fmt(tol));

        // midpoint grid over the spectrum support; cdf by midpoint-rule
        // accumulation of the pdf column
        const double h = 9.0 / grid;
        std::vector<double> xs(grid), fs(grid);
        int failed = 0;
        for (int i = 0; i < grid; ++i) {
            xs[i] = (i + 0.5) * h;
            try {
                fs[i] = pdf_triangular(xs[i], oscillations, 1, tol).value;
            } catch (const num::NoConvergence&) {
                fs[i] = std::numeric_limits<double>::quiet_NaN();
                ++failed;
            }
        }
        std::vector<double> cdf(grid);
        double acc = 0.0;
        for (int i = 0; i < grid; ++i) {
            if (!std::isnan(fs[i])) acc += fs[i] * h;
            cdf[i] = acc;
        }
        if (failed > 0)
            std::cerr << "warning: " << failed
                      << " grid point(s) did not converge (raise --oscillations); "
                         "pdf written as nan\n";

        OutputTarget target(out_path);
        if (common.format == "json") {
            json meta = make_meta("pdf", cfg, common.seed);
            meta["nonconverged_points"] = failed;
            json data;
            data["x"] = xs;
            data["pdf"] = fs;
            data["cdf"] = cdf;
            data["atoms"] = json::array();
            emit_json(target.stream(), std::move(meta), std::move(data));
        } else {
            write_csv_header(target.stream(), "pdf", cfg, common.seed);
            if (failed > 0) target.stream() << "# nonconverged points: " << failed << '\n';
            target.stream().precision(17);
            target.stream() << "x,pdf,cdf\n";
            for (int i = 0; i < grid; ++i)
                target.stream() << xs[i] << ',' << fs[i] << ',' << cdf[i] << '\n';
        }
        return failed > 0 ? 3 : 0;
    }

    const ChiralVector cv = make_chiral(p, q, common.allow_thin);
    cfg.emplace_back("p", std::to_string(cv.p));
    cfg.emplace_back("q", std::to_string(cv.q));
    cfg.emplace_back("grid", std::to_string(grid));

    PiecewiseDensity d;
    if (cv.zigzag()) {
        d = pdf_zigzag(cv.p);
    } else if (cv.armchair()) {
        d = pdf_armchair(cv.p);
    } else {
        cfg.emplace_back("grid-size", std::to_string(grid_size));
        d = pdf_chiral_numeric(cv, grid_size);
    }

    OutputTarget target(out_path);
    if (common.format == "json") {
        double lo = d.pieces.front().lo, hi = d.pieces.front().hi;
        for (const auto& pc : d.pieces) {
            lo = std::min(lo, pc.lo);
            hi = std::max(hi, pc.hi);
        }
        const double h = (hi - lo) / grid;
        json xs = json::array(), fs = json::array(), cs = json::array();
        for (int i = 0; i < grid; ++i) {
            const double x = lo + (i + 0.5) * h;
            xs.push_back(x);
            fs.push_back(d.pdf(x));
            cs.push_back(d.cdf(x));
        }
        json atoms = json::array();
        for (const auto& a : d.atoms)
            atoms.push_back({{"x", a.x}, {"mass", to_decimal(a.mass)}});
        json data;
        data["x"] = std::move(xs);
        data["pdf"] = std::move(fs);
        data["cdf"] = std::move(cs);
        data["atoms"] = std::move(atoms);
        emit_json(target.stream(), make_meta("pdf", cfg, common.seed), std::move(data));
    } else {
        write_csv_header(target.stream(), "pdf", cfg, common.seed);
        export_density_csv(d, grid, target.stream());
        if (out_path.empty()) {
            target.stream() << "# atoms\n";
            export_atoms_csv(d, target.stream());
        } else {
            OutputTarget atom_target(out_path + ".atoms.csv");
            write_csv_header(atom_target.stream(), "pdf", cfg, common.seed);
            export_atoms_csv(d, atom_target.stream());
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// mgf

int run_mgf(const CommonOpts& common, int p, int q, bool limit, double t_min, double t_max,
            int t_steps) {
    if (t_steps < 1) throw std::invalid_argument("--tsteps must be >= 1");
    if (!(t_min <= t_max)) throw std::invalid_argument("--tmin must be <= --tmax");

    std::vector<double> ts(t_steps);
    for (int i = 0; i < t_steps; ++i)
        ts[i] = (t_steps == 1) ? t_min
                               : t_min + (t_max - t_min) * i / (t_steps - 1);

    ConfigEcho cfg;
    std::function<num::QuadratureResult(double)> m;
    if (limit) {
        cfg.emplace_back("family", "limit");
        m = [](double t) { return mgf_limit(t); };
    } else {
        const ChiralVector cv = make_chiral(p, q, common.allow_thin);
        cfg.emplace_back("p", std::to_string(cv.p));
        cfg.emplace_back("q", std::to_string(cv.q));
        m = [cv](double t) { return mgf(cv, t); };
    }
    cfg.emplace_back("tmin", fmt(t_min));
    cfg.emplace_back("tmax", fmt(t_max));
    cfg.emplace_back("tsteps", std::to_string(t_steps));

    OutputTarget target(resolve_output(common.output));
    if (common.format == "json") {
        json tcol = json::array(), mcol = json::array(), ecol = json::array();
        for (const double t : ts) {
            const auto r = m(t);
            tcol.push_back(t);
            mcol.push_back(r.value);
            ecol.push_back(r.error_estimate);
        }
        json data;
        data["t"] = std::move(tcol);
        data["m"] = std::move(mcol);
        data["err"] = std::move(ecol);
        emit_json(target.stream(), make_meta("mgf", cfg, common.seed), std::move(data));
    } else {
        write_csv_header(target.stream(), "mgf", cfg, common.seed);
        export_mgf_csv(m, ts, target.stream());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// lattice

int run_lattice(const CommonOpts& common, int rings, int k_max) {
    if (rings < 0) throw std::invalid_argument("--rings must be >= 0");
    if (k_max < 0) throw std::invalid_argument("--kmax must be >= 0");

    const auto g = build_finite_armchair55_dual(rings);
    const auto m = half_loop_matrix(g);
    const auto traces = normalized_trace_moments(m, k_max);

    std::vector<std::vector<double>> md(g.n, std::vector<double>(g.n));
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) md[i][j] = to_double(m[i][j]);
    const auto spec = num::symmetric_eigenvalues(md);

    ConfigEcho cfg;
    cfg.emplace_back("rings", std::to_string(rings));
    cfg.emplace_back("kmax", std::to_string(k_max));

    const std::string out_path = resolve_output(common.output);
    if (common.format == "json") {
        OutputTarget target(out_path);
        json edges = json::array();
        for (const auto& [u, v] : g.edges) edges.push_back({u, v});
        json loops = json::array();
        for (int v = 0; v < g.n; ++v) loops.push_back(to_decimal(g.loop_weight(v)));
        json tm = json::array();
        for (const auto& t : traces) tm.push_back(to_decimal(t));
        json data;
        data["n"] = g.n;
        data["edges"] = std::move(edges);
        data["loops"] = std::move(loops);
        data["eigenvalues"] = spec.eigenvalues;
        data["trace_moments"] = std::move(tm);
        emit_json(target.stream(), make_meta("lattice", cfg, common.seed), std::move(data));
        return 0;
    }

    OutputTarget target(out_path);
    write_csv_header(target.stream(), "lattice", cfg, common.seed);
    export_edge_list(g, target.stream());

    const auto write_spectrum = [&](std::ostream& os) {
        os.precision(17);
        os << "i,eigenvalue\n";
        for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i)
            os << i << ',' << spec.eigenvalues[i] << '\n';
    };
    const auto write_moments = [&](std::ostream& os) {
        os << "k,value\n";
        for (std::size_t k = 0; k < traces.size(); ++k)
            os << k << ',' << to_decimal(traces[k]) << '\n';
    };
    if (out_path.empty()) {
        target.stream() << "# spectrum\n";
        write_spectrum(target.stream());
        target.stream() << "# trace moments\n";
        write_moments(target.stream());
    } else {
        OutputTarget spec_target(out_path + ".spectrum.csv");
        OutputTarget mom_target(out_path + ".moments.csv");
        write_csv_header(spec_target.stream(), "lattice", cfg, common.seed);
        write_csv_header(mom_target.stream(), "lattice", cfg, common.seed);
        write_spectrum(spec_target.stream());
        write_moments(mom_target.stream());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_verify(const CommonOpts& common, const std::string& suite) {
    if (suite != "quick" && suite != "full")
        throw std::invalid_argument("--suite must be quick or full");

    OutputTarget target(resolve_output(common.output));
    std::ostream& out = target.stream();
    int failures = 0;
    int worst_code = 0;

    const auto check = [&](const std::string& name, const std::function<void()>& body) {
        try {
            body();
            out << "ok   " << name << '\n';
        } catch (const MomentMismatch& e) {
            out << "FAIL " << name << ": " << e.what() << '\n';
            ++failures;
            worst_code = std::max(worst_code, 4);
        } catch (const num::NoConvergence& e) {
            out << "FAIL " << name << ": " << e.what() << '\n';
            ++failures;
            worst_code = std::max(worst_code, 3);
        } catch (const std::exception& e) {
            out << "FAIL " << name << ": " << e.what() << '\n';
            ++failures;
            worst_code = std::max(worst_code, 4);
        }
    };
    const auto require = [](bool ok, const std::string& msg) {
        if (!ok) throw CheckFailure(msg);
    };

    check("moment formulas agree, (5,1), k <= 8",
          [&] { moment_table(ChiralVector(5, 1), 8); });

    check("triangular moments k <= 6", [&] {
        const BigInt expect[] = {1, 3, 15, 93, 639, 4653, 35169};
        for (int k = 0; k <= 6; ++k)
            require(triangular_moments(k) == expect[k], "mismatch at k=" + std::to_string(k));
    });

    check("zigzag p=5 density mass", [&] {
        const double mass = pdf_zigzag(5).total_mass();
        require(std::abs(mass - 1.0) < 1e-6, "mass " + fmt(mass));
    });

    check("armchair p=5 density mass", [&] {
        const double mass = pdf_armchair(5).total_mass();
        require(std::abs(mass - 1.0) < 1e-6, "mass " + fmt(mass));
    });

    check("mgf normalization and moment series, (5,1)", [&] {
        require(std::abs(mgf(ChiralVector(5, 1), 0.0).value - 1.0) < 1e-12, "m(0) != 1");
        const auto seq = moment_table(ChiralVector(5, 1), moment_series_order(0.3),
                                      {MomentMethod::oracle});
        const double series = mgf_moment_series(seq.front(), 0.3);
        const double quad = mgf(ChiralVector(5, 1), 0.3).value;
        require(std::abs(series - quad) < 1e-8, "series " + fmt(series) + " vs " + fmt(quad));
    });

    check("integral identity at t=0.1", [&] {
        const auto r = verify_integral_identity(0.1);
        require(r.gap <= 1e-6, "gap " + fmt(r.gap));
    });

    check("sampler moments, (5,1), n=2e5", [&] {
        SeededStream stream(common.seed);
        const auto samples = sample_general(ChiralVector(5, 1), stream, 200000);
        const auto seq =
            moment_table(ChiralVector(5, 1), 4, {MomentMethod::oracle}).front();
        for (int k = 1; k <= 4; ++k) {
            double s1 = 0.0, s2 = 0.0;
            for (const double v : samples) {
                const double vk = std::pow(v, k);
                s1 += vk;
                s2 += vk * vk;
            }
            const double n = static_cast<double>(samples.size());
            const double mean = s1 / n;
            const double se = std::sqrt(std::max(s2 / n - mean * mean, 0.0) / n);
            const double exact = seq.values[k].convert_to<double>();
            require(std::abs(mean - exact) <= 5.0 * se + 1e-9,
                    "k=" + std::to_string(k) + " off by " + fmt(mean - exact));
        }
    });

    if (suite == "full") {
        check("moment formulas agree on the full grid, k <= 12", [&] {
            for (int s = 5; s <= 10; ++s)
                for (int q = 0; 2 * q <= s; ++q) moment_table(ChiralVector(s - q, q), 12);
        });

        check("chiral (5,1) density mass", [&] {
            const double mass = pdf_chiral_numeric(ChiralVector(5, 1)).total_mass();
            require(std::abs(mass - 1.0) < 1e-3, "mass " + fmt(mass));
        });

        check("finite (5,5) dual invariants, r in {0,3}", [&] {
            for (const int r : {0, 3}) {
                const auto g = build_finite_armchair55_dual(r);
                require(g.n == 32 + 10 * r, "vertex count");
                require(static_cast<int>(g.edges.size()) == 90 + 30 * r, "edge count");
                int deg5 = 0;
                for (const int d : g.degree) deg5 += (d == 5);
                require(deg5 == 12, "degree-5 count");
            }
        });

        check("armchair-limit mgf gap decreasing, p in {5,10,25}", [&] {
            double prev = std::numeric_limits<double>::infinity();
            for (const int p : {5, 10, 25}) {
                const double gap = mgf_armchair_limit_gap(p, 0.5).value;
                require(gap > 0.0 && gap < prev, "gap not decreasing at p=" + std::to_string(p));
                prev = gap;
            }
        });

        check("unrolled-limit density spot values", [&] {
            require(std::abs(pdf_triangular(0.5, 80, 1, 1e-3).value - 0.2284795113) < 1e-6, "x=0.5");
            require(std::abs(pdf_triangular(5.0, 80, 1, 1e-3).value - 0.07154240439) < 1e-6, "x=5");
        });
    }

    out << (failures == 0 ? "verify: all checks passed\n"
                          : "verify: " + std::to_string(failures) + " check(s) failed\n");
    return failures == 0 ? 0 : worst_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual nanotube spectral distributions: exact moments, samplers, densities, "
                 "generating functions"};
    app.require_subcommand(1);

    CommonOpts common;
    app.add_option("--seed", common.seed, "seed for all pseudorandom streams")
        ->capture_default_str();
    app.add_option("--output", common.output,
                   "output file (default stdout; relative paths resolve under "
                   "$DUALTUBE_OUT_DIR if set)");
    app.add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_flag("--allow-thin", common.allow_thin,
                 "permit chiral vectors with 3 <= p+q < 5");

    int p = 5, q = 0, k_max = 8, bins = 64, grid = 512, grid_size = 4096;
    int oscillations = 200, t_steps = 9, rings = 0;
    std::size_t n = 100000;
    double limit_c = 0.5, t_min = -1.0, t_max = 1.0, tri_tol = 1e-3;
    bool triangular = false, use_limit = false;
    std::string methods = "all", suite = "quick";

    auto* c_mom = app.add_subcommand("moments", "exact closed-walk moments, cross-checked");
    c_mom->add_option("--p", p, "chiral p")->capture_default_str();
    c_mom->add_option("--q", q, "chiral q")->capture_default_str();
    c_mom->add_flag("--triangular", triangular, "unrolled lattice instead of a tube");
    c_mom->add_option("--kmax", k_max, "largest moment order")
        ->check(CLI::Range(0, 100))
        ->capture_default_str();
    c_mom->add_option("--methods", methods,
                      "comma-separated method list, or 'all'")
        ->capture_default_str();

    auto* c_samp = app.add_subcommand("sample", "draw i.i.d. random-eigenvalue samples");
    c_samp->add_option("--p", p, "chiral p")->capture_default_str();
    c_samp->add_option("--q", q, "chiral q")->capture_default_str();
    c_samp->add_option("--limit-c", limit_c, "sample the unrolled-lattice limit with this c")
        ->capture_default_str();
    auto* limit_flag = c_samp->add_flag("--limit", use_limit, "use the unrolled-lattice limit");
    (void)limit_flag;
    c_samp->add_option("--n", n, "sample count")->capture_default_str();
    c_samp->add_option("--bins", bins, "histogram bin count")->capture_default_str();

    auto* c_pdf = app.add_subcommand("pdf", "probability density and CDF on a grid");
    c_pdf->add_option("--p", p, "chiral p")->capture_default_str();
    c_pdf->add_option("--q", q, "chiral q")->capture_default_str();
    c_pdf->add_flag("--triangular", triangular, "unrolled-lattice limit density");
    c_pdf->add_option("--grid", grid, "number of grid points")->capture_default_str();
    c_pdf->add_option("--grid-size", grid_size, "extremum scan resolution (chiral case)")
        ->capture_default_str();
    c_pdf->add_option("--oscillations", oscillations,
                      "oscillation cutoff for the unrolled-lattice integral")
        ->capture_default_str();
    c_pdf->add_option("--tol", tri_tol, "tail tolerance for the unrolled-lattice integral")
        ->capture_default_str();

    auto* c_mgf = app.add_subcommand("mgf", "moment generating function on a t-grid");
    c_mgf->add_option("--p", p, "chiral p")->capture_default_str();
    c_mgf->add_option("--q", q, "chiral q")->capture_default_str();
    c_mgf->add_flag("--limit", use_limit, "unrolled-lattice limit generating function");
    c_mgf->add_option("--tmin", t_min, "grid start")->capture_default_str();
    c_mgf->add_option("--tmax", t_max, "grid end")->capture_default_str();
    c_mgf->add_option("--tsteps", t_steps, "grid point count")->capture_default_str();

    auto* c_lat = app.add_subcommand("lattice", "finite capped-tube dual graph artifacts");
    c_lat->add_option("--rings", rings, "hexagon rings between the caps")
        ->capture_default_str();
    c_lat->add_option("--kmax", k_max, "largest normalized trace moment")
        ->capture_default_str();

    auto* c_ver = app.add_subcommand("verify", "run built-in cross-check suite");
    c_ver->add_option("--suite", suite, "quick or full")->capture_default_str();

    // let --seed/--output/--format/--allow-thin appear after the subcommand too
    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // help/version exit 0; any parse problem is a validation error
    }

    try {
        if (c_mom->parsed()) return run_moments(common, p, q, triangular, k_max, methods);
        if (c_samp->parsed())
            return run_sample(common, p, q, limit_c,
                              use_limit || c_samp->count("--limit-c") > 0, n, bins);
        if (c_pdf->parsed())
            return run_pdf(common, p, q, triangular, grid, grid_size, oscillations, tri_tol);
        if (c_mgf->parsed()) return run_mgf(common, p, q, use_limit, t_min, t_max, t_steps);
        if (c_lat->parsed()) return run_lattice(common, rings, k_max);
        if (c_ver->parsed()) return run_verify(common, suite);
    } catch (const MomentMismatch& e) {
        std::cerr << "cross-check mismatch: " << e.what() << '\n';
        return 4;
    } catch (const num::NoConvergence& e) {
        std::cerr << "numerical non-convergence: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
