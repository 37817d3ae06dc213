// Command-line front end: eval, battery, rayleigh, derivation.
// Exit codes: 0 clean, 1 violation found, 2 usage or input error.

#include "CLI11.hpp"

#include "lpm/battery.hpp"
#include "lpm/error.hpp"
#include "lpm/families.hpp"
#include "lpm/io.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/rayleigh.hpp"
#include "lpm/spectral.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

namespace {

using lpm::io::json;

std::string join(const std::vector<std::string>& xs) {
    std::string out;
    for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
    return out;
}

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw lpm::DomainError("cannot open " + path + " for writing");
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

int cmd_eval(const std::string& poly_path, const std::string& matrix_path, double cone_tol, const std::string& out) {
    const auto p = lpm::io::poly_from_json(lpm::io::load_file(poly_path));
    const auto a = lpm::io::matrix_from_json(lpm::io::load_file(matrix_path));
    lpm::require_dim(p.n() == a.n(), "polynomial has " + std::to_string(p.n()) + " variables but the matrix is " +
                                         std::to_string(a.n()) + " x " + std::to_string(a.n()));
    json j = {{"lift_value", lpm::minor_lift_eval(p, a)}, {"diag_value", p.evaluate(a.diag())}};
    try {
        j["matrix_cone"] = lpm::io::to_json(lpm::in_cone_matrix(p, a, cone_tol));
        j["diag_cone"] = lpm::io::to_json(lpm::in_cone_vector(p, a.diag(), cone_tol));
    } catch (const lpm::DomainError& e) {
        // p(1) = 0: membership is undefined, the values still are
        j["cone_error"] = e.what();
    }
    Sink sink(out);
    sink.stream() << j.dump() << '\n';
    return 0;
}

int cmd_battery(const lpm::BatteryConfig& cfg, const std::string& out) {
    Sink sink(out);
    const auto sum = lpm::run_battery(cfg, sink.stream());
    if (!out.empty()) {
        std::printf("samples=%d records=%d violations=%d preconditions_failed=%d min_rel_slack=%.3e\n", sum.samples,
                    sum.records, sum.violations, sum.preconditions_failed, sum.min_rel_slack);
    }
    return sum.violations > 0 ? 1 : 0;
}

int cmd_rayleigh(int trials, std::uint64_t seed, const std::string& out) {
    const auto rep = lpm::verify_w_identity();
    const auto p = lpm::build_p();
    const double lo = lpm::nonneg_sampling(rep.w, trials, seed);
    const auto hyp = lpm::hyperbolicity_spot_check(p, trials, seed);
    const bool sampling_ok = lo >= -1e-12;
    Sink sink(out);
    auto& os = sink.stream();
    char buf[64];
    os << "p = " << p.to_string() << '\n';
    os << "W = " << rep.w.to_string() << '\n';
    os << "W/4 = " << (lpm::Rational(1, 4) * rep.w).to_string() << '\n';
    os << "W/4 term count: " << rep.quarter_term_count << '\n';
    os << "identity: " << (rep.matches_closed_form ? "PASS" : "FAIL") << '\n';
    os << "free of x1, x3: " << (rep.free_of_x1_x3 ? "PASS" : "FAIL") << '\n';
    std::snprintf(buf, sizeof buf, "%.6e", lo);
    os << "sampling minimum (" << trials << " points, seed " << seed << "): " << buf << ' '
       << (sampling_ok ? "PASS" : "FAIL") << '\n';
    os << "hyperbolicity (" << hyp.trials << " lines, seed " << seed << "): " << (hyp.failures == 0 ? "PASS" : "FAIL")
       << " (" << hyp.failures << " failures)\n";
    return (rep.pass() && sampling_ok && hyp.failures == 0) ? 0 : 1;
}

int cmd_derivation(const std::string& matrix_path, std::optional<int> n, std::optional<std::uint64_t> seed, int k,
                   int d, double tol, const std::string& out) {
    lpm::SymMatrix x;
    if (!matrix_path.empty()) {
        x = lpm::io::matrix_from_json(lpm::io::load_file(matrix_path));
    } else {
        if (!n || !seed) throw CLI::ValidationError("derivation needs --matrix, or --n together with --seed");
        x = lpm::random_symmetric(*n, *seed);
    }
    const auto dm = lpm::derivation_matrix(x, k, d);
    const auto rep = lpm::check_derivation_spectrum(x, k, d, tol);
    json j = {{"derivation", lpm::io::to_json(dm)},
              {"spectrum_error", rep.spectrum_error},
              {"diagonal_error", rep.diagonal_error},
              {"pass", rep.pass()}};
    Sink sink(out);
    sink.stream() << j.dump() << '\n';
    return rep.pass() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minor-lift experiments on multiaffine stable polynomials and their lpm lifts"};
    app.require_subcommand(1);

    std::string out;
    std::string poly_path, matrix_path;
    double cone_tol = lpm::kConeTol;

    auto* eval = app.add_subcommand("eval", "Evaluate P(A) and p(diag A) with cone verdicts");
    eval->add_option("--poly", poly_path, "Polynomial JSON file")->required()->check(CLI::ExistingFile);
    eval->add_option("--matrix", matrix_path, "Matrix JSON file")->required()->check(CLI::ExistingFile);
    eval->add_option("--tol", cone_tol, "Cone tolerance, scaled by 1 + max|root|")->capture_default_str();
    eval->add_option("--out", out, "Write output here instead of stdout");

    lpm::BatteryConfig cfg;
    std::uint64_t seed = 0;
    auto* bat = app.add_subcommand("battery", "Run a randomized experiment battery (JSON lines)");
    bat->add_option("--family", cfg.family, "Polynomial family: " + join(lpm::family_names()))->capture_default_str();
    bat->add_option("--check", cfg.check, "Check: " + join(lpm::battery_checks()))->capture_default_str();
    bat->add_option("--trials", cfg.trials, "Number of samples")->capture_default_str()->check(CLI::NonNegativeNumber);
    bat->add_option("--seed", seed, "Master seed (required)")->required();
    bat->add_option("--n", cfg.n_max, "Largest variable count")->capture_default_str();
    bat->add_option("--tol", cfg.tol_rel, "Relative inequality tolerance (absolute part is 1e-10)")->capture_default_str();
    bat->add_option("--epsilon", cfg.epsilon, "Perturbation size for perturbed families")->capture_default_str();
    bat->add_flag("--all-records", cfg.all_records, "One line per inequality instead of the worst per sample");
    bat->add_option("--out", out, "Write JSON lines here instead of stdout");

    int trials = 10000;
    auto* ray = app.add_subcommand("rayleigh", "Exact Rayleigh difference of the K4 construction");
    ray->add_option("--seed", seed, "Seed for sampling (required)")->required();
    ray->add_option("--trials", trials, "Sampling points and lines")->capture_default_str()->check(CLI::PositiveNumber);
    ray->add_option("--out", out, "Write output here instead of stdout");

    int k = 1, d = 1;
    std::optional<int> dn;
    std::optional<std::uint64_t> dseed;
    double dtol = 1e-7;
    auto* der = app.add_subcommand("derivation", "Derivation matrix D^{k,d}X with spectrum check");
    der->add_option("--matrix", matrix_path, "Matrix JSON file")->check(CLI::ExistingFile);
    der->add_option("--n", dn, "Size of a random symmetric X (with --seed)");
    der->add_option("--seed", dseed, "Seed for the random X");
    der->add_option("--k", k, "Wedge degree")->required();
    der->add_option("--d", d, "Number of slots receiving X")->required();
    der->add_option("--tol", dtol, "Tolerance, scaled by 1 + max|value|")->capture_default_str();
    der->add_option("--out", out, "Write output here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*eval) return cmd_eval(poly_path, matrix_path, cone_tol, out);
        if (*bat) {
            cfg.seed = seed;
            return cmd_battery(cfg, out);
        }
        if (*ray) return cmd_rayleigh(trials, seed, out);
        if (*der) return cmd_derivation(matrix_path, dn, dseed, k, d, dtol, out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lpm::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
