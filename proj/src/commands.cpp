#include "steklov/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <sstream>
#include <thread>

#include "steklov/bounds.hpp"
#include "steklov/canonical_json.hpp"
#include "steklov/error.hpp"
#include "steklov/profile_io.hpp"
#include "steklov/profiles.hpp"
#include "steklov/solver.hpp"

namespace steklov::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json inputs_json(const RunConfig& c) {
    return {{"n", c.n}, {"r1", c.r1}, {"r2", c.r2}, {"length", c.length}};
}

json report_json(const BoundReport& r) {
    return {{"r1", r.r1},
            {"r2", r.r2},
            {"length", r.length},
            {"swapped", r.swapped},
            {"l1", r.l1},
            {"l2", r.length - r.l1},
            {"q1", r.q1},
            {"q2", r.q2},
            {"alpha", r.alpha},
            {"beta", r.beta},
            {"neumann_combo", r.neumann_combo},
            {"dirichlet_combo", finite_or_null(r.dirichlet_combo)},
            {"bound", r.bound},
            {"attained_by", to_string(r.attained_by)}};
}

}  // namespace

CommandResult cmd_bound(const RunConfig& cfg) {
    const BoundInputs in(Dimension(cfg.n), cfg.r1, cfg.r2, cfg.length);
    const auto rep = theorem2_bound(in);
    CommandResult res;
    res.document = {{"command", "bound"}, {"inputs", inputs_json(cfg)}, {"report", report_json(rep)}};
    std::ostringstream csv;
    csv << "l1,q1,q2,alpha,beta,neumann_combo,dirichlet_combo,bound,attained_by\n";
    csv << num(rep.l1) << ',' << num(rep.q1) << ',' << num(rep.q2) << ',' << num(rep.alpha) << ','
        << num(rep.beta) << ',' << num(rep.neumann_combo) << ',' << num(rep.dirichlet_combo) << ','
        << num(rep.bound) << ',' << to_string(rep.attained_by) << '\n';
    res.csv = csv.str();
    return res;
}

CommandResult cmd_spectrum(const RunConfig& cfg) {
    if (cfg.profile_path.empty()) throw InvalidInputError("spectrum needs --profile <file>");
    const Dimension n(cfg.n);
    const auto profile = read_profile_csv_file(cfg.profile_path);
    require_valid(profile);
    const int grid = cfg.grid_given ? cfg.grid : static_cast<int>(profile.size());
    const auto spec = steklov_spectrum(profile, n, cfg.modes, grid);

    CommandResult res;
    json eig = json::array();
    std::ostringstream csv;
    csv << "k,value,l,branch,multiplicity\n";
    for (std::size_t k = 0; k < spec.entries.size(); ++k) {
        const auto& e = spec.entries[k];
        eig.push_back({{"k", k}, {"value", e.value}, {"l", e.l}, {"branch", e.branch},
                       {"multiplicity", e.multiplicity}});
        csv << k << ',' << num(e.value) << ',' << e.l << ',' << e.branch << ',' << e.multiplicity
            << '\n';
    }
    json modes = json::array();
    for (const auto& [l, pair] : spec.per_mode) {
        modes.push_back({{"l", l}, {"lower", pair[0]}, {"upper", pair[1]}});
    }
    res.document = {{"command", "spectrum"},
                    {"n", cfg.n},
                    {"grid_size", spec.grid_size},
                    {"profile",
                     {{"path", cfg.profile_path},
                      {"r1", profile.r1()},
                      {"r2", profile.r2()},
                      {"length", profile.length()},
                      {"points", profile.size()}}},
                    {"eigenvalues", eig},
                    {"per_mode", modes}};
    res.csv = csv.str();
    return res;
}

namespace {

struct TrialOutcome {
    std::uint64_t seed;
    bool generated;
    double sigma1;
    int mode;
    std::string error;
};

TrialOutcome run_trial(const RunConfig& cfg, std::uint64_t seed) {
    TrialOutcome t{seed, false, 0.0, -1, {}};
    try {
        const auto p = random_profile(cfg.r1, cfg.r2, cfg.length, seed, cfg.grid);
        const auto spec = steklov_spectrum(p, Dimension(cfg.n), 1);
        t.generated = true;
        t.sigma1 = spec.eigenvalues.at(1);
        t.mode = spec.entries.at(1).l;
    } catch (const GenerationError& e) {
        t.error = e.what();
    }
    return t;
}

}  // namespace

CommandResult cmd_verify(const RunConfig& cfg) {
    if (cfg.trials < 1) throw InvalidInputError("--trials must be at least 1");
    const BoundInputs in(Dimension(cfg.n), cfg.r1, cfg.r2, cfg.length);
    const auto rep = theorem2_bound(in);

    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < outcomes.size(); start += workers) {
        std::vector<std::future<TrialOutcome>> batch;
        const std::size_t stop = std::min(outcomes.size(), start + workers);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, run_trial, std::cref(cfg), cfg.seed + i));
        }
        for (std::size_t i = start; i < stop; ++i) outcomes[i] = batch[i - start].get();
    }

    CommandResult res;
    json rows = json::array();
    json failures = json::array();
    std::ostringstream csv;
    csv << "seed,sigma1,bound,margin,mode\n";
    double min_margin = INFINITY;
    int violations = 0;
    int ok = 0;
    for (const auto& t : outcomes) {
        if (!t.generated) {
            failures.push_back({{"seed", t.seed}, {"error", t.error}});
            continue;
        }
        const double margin = rep.bound - t.sigma1;
        min_margin = std::min(min_margin, margin);
        if (margin > 0.0) {
            ++ok;
        } else {
            ++violations;
        }
        rows.push_back({{"seed", t.seed}, {"sigma1", t.sigma1}, {"bound", rep.bound},
                        {"margin", margin}, {"mode", t.mode}});
        csv << t.seed << ',' << num(t.sigma1) << ',' << num(rep.bound) << ',' << num(margin) << ','
            << t.mode << '\n';
    }
    csv << "summary,,," << num(min_margin) << ",\n";
    res.document = {{"command", "verify"},
                    {"inputs", inputs_json(cfg)},
                    {"grid_size", cfg.grid},
                    {"report", report_json(rep)},
                    {"trials", rows},
                    {"generation_failures", failures},
                    {"summary",
                     {{"min_margin", finite_or_null(min_margin)},
                      {"passed", ok},
                      {"violations", violations},
                      {"failed_generations", failures.size()}}}};
    res.csv = csv.str();
    if (violations > 0) {
        res.exit_code = kPropertyViolation;
        res.message = std::to_string(violations) + " trial(s) reached or exceeded the bound";
    }
    return res;
}

CommandResult cmd_sharpness(const RunConfig& cfg) {
    if (cfg.r1 != cfg.r2) {
        throw InvalidInputError(
            "sharpness experiment requires r1 = r2: the bound is only known to be sharp for equal "
            "boundary radii");
    }
    if (cfg.epsilon_list.empty()) throw InvalidInputError("--epsilon-list is empty");
    const Dimension n(cfg.n);

    CommandResult res;
    json rows = json::array();
    std::ostringstream csv;
    csv << "epsilon,corner_width,sigma1,tent_sigma1,mode,bound,raw_gap,gap\n";
    std::vector<double> gaps;
    for (double eps : cfg.epsilon_list) {
        const auto params = SharpnessFamilyParams::make(n, cfg.r1, cfg.length, eps);
        const auto g = sharpness_gap(params, cfg.grid);
        gaps.push_back(g.gap);
        rows.push_back({{"epsilon", eps},
                        {"corner_width", params.corner_width},
                        {"sigma1", g.sigma1},
                        {"tent_sigma1", g.tent_sigma1},
                        {"mode", g.mode},
                        {"bound", g.bound},
                        {"raw_gap", g.raw_gap},
                        {"gap", g.gap}});
        csv << num(eps) << ',' << num(params.corner_width) << ',' << num(g.sigma1) << ','
            << num(g.tent_sigma1) << ',' << g.mode << ',' << num(g.bound) << ',' << num(g.raw_gap)
            << ',' << num(g.gap) << '\n';
    }
    const bool positive = std::all_of(gaps.begin(), gaps.end(), [](double g) { return g > 0.0; });
    bool decreasing = true;
    for (std::size_t i = 1; i < gaps.size(); ++i) decreasing = decreasing && gaps[i] < gaps[i - 1];
    res.document = {{"command", "sharpness"},
                    {"inputs", inputs_json(cfg)},
                    {"grid_size", cfg.grid},
                    {"rows", rows},
                    {"checks", {{"gaps_positive", positive}, {"gaps_decreasing", decreasing}}}};
    res.csv = csv.str();
    if (!positive || !decreasing) {
        res.exit_code = kPropertyViolation;
        res.message = positive ? "gaps do not strictly shrink with epsilon" : "a gap is not positive";
    }
    return res;
}

CommandResult cmd_lstar(const RunConfig& cfg) {
    const Dimension n(cfg.n);
    const auto cross = lstar_crossing(n, cfg.r1, cfg.r2, cfg.tol);
    const double d = std::abs(cfg.r1 - cfg.r2);
    const double s = std::max(cfg.r1, cfg.r2);

    CommandResult res;
    json scan = json::array();
    std::ostringstream csv;
    csv << "length,f1,f2,min\n";
    bool below = true;
    constexpr int kScanPoints = 20;
    for (int j = 0; j < kScanPoints; ++j) {
        // Geometric grid of widths from 0.05 s to 100 s above |R1 - R2|.
        const double L = d + 0.05 * s * std::pow(2000.0, double(j) / (kScanPoints - 1));
        const BoundInputs in(n, cfg.r1, cfg.r2, L);
        const double f1 = dirichlet_combo(in);
        const double f2 = neumann_combo(in);
        const double m = std::min(f1, f2);
        below = below && m <= cross.b_n * (1.0 + cfg.tol) + 1e-12;
        scan.push_back({{"length", L}, {"f1", finite_or_null(f1)}, {"f2", f2}, {"min", m}});
        csv << num(L) << ',' << num(f1) << ',' << num(f2) << ',' << num(m) << '\n';
    }
    res.document = {{"command", "lstar"},
                    {"inputs", {{"n", cfg.n}, {"r1", cfg.r1}, {"r2", cfg.r2}, {"tol", cfg.tol}}},
                    {"lstar", cross.lstar},
                    {"f1", cross.f1},
                    {"f2", cross.f2},
                    {"b_n", cross.b_n},
                    {"scan", scan},
                    {"checks", {{"scan_min_below_b_n", below}}}};
    res.csv = csv.str();
    if (!below) {
        res.exit_code = kPropertyViolation;
        res.message = "a scanned min(f1, f2) exceeds B_n";
    }
    return res;
}

CommandResult cmd_profile(const RunConfig& cfg) {
    std::optional<RevolutionProfile> p;
    if (cfg.kind == "annulus") {
        p = annulus_profile(cfg.r1, cfg.length, cfg.grid);
    } else if (cfg.kind == "tent") {
        p = degenerate_profile(cfg.r1, cfg.r2, cfg.length, cfg.epsilon, cfg.grid);
    } else if (cfg.kind == "random") {
        p = random_profile(cfg.r1, cfg.r2, cfg.length, cfg.seed, cfg.grid);
    } else if (cfg.kind == "sharpness") {
        if (cfg.r1 != cfg.r2) throw InvalidInputError("sharpness profiles need r1 = r2");
        p = sharpness_profile(SharpnessFamilyParams::make(Dimension(cfg.n), cfg.r1, cfg.length,
                                                          cfg.epsilon),
                              cfg.grid);
    } else {
        throw InvalidInputError("unknown profile kind '" + cfg.kind +
                                "' (expected annulus, tent, random or sharpness)");
    }
    CommandResult res;
    std::ostringstream out;
    write_profile_csv(out, *p);
    res.csv = out.str();
    res.document = {{"command", "profile"},
                    {"kind", cfg.kind},
                    {"r1", p->r1()},
                    {"r2", p->r2()},
                    {"length", p->length()},
                    {"points", p->size()}};
    return res;
}

CommandResult run(const RunConfig& cfg) {
    try {
        if (cfg.command == "bound") return cmd_bound(cfg);
        if (cfg.command == "spectrum") return cmd_spectrum(cfg);
        if (cfg.command == "verify") return cmd_verify(cfg);
        if (cfg.command == "sharpness") return cmd_sharpness(cfg);
        if (cfg.command == "lstar") return cmd_lstar(cfg);
        if (cfg.command == "profile") return cmd_profile(cfg);
        throw InvalidInputError("unknown command '" + cfg.command + "'");
    } catch (const InvalidInputError& e) {
        CommandResult r;
        r.exit_code = kInvalidInput;
        r.message = e.what();
        return r;
    } catch (const NumericalError& e) {
        CommandResult r;
        r.exit_code = kNumericalFailure;
        r.message = e.what();
        return r;
    }
}

std::string render(const CommandResult& result, OutputFormat format) {
    if (result.document.is_null()) return {};
    if (format == OutputFormat::Csv) return result.csv;
    return canonical_json(result.document);
}

std::string resolve_output_path(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("STEKLOV_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            return (std::filesystem::path(dir) / p).string();
        }
    }
    return p.string();
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (item.empty() || end == item.c_str() || *end != '\0') {
            throw InvalidInputError("cannot parse '" + item + "' as a number");
        }
        out.push_back(v);
    }
    if (out.empty()) throw InvalidInputError("empty number list");
    return out;
}

}  // namespace steklov::cli
