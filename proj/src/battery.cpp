#include "lpm/battery.hpp"

#include "lpm/error.hpp"
#include "lpm/families.hpp"
#include "lpm/io.hpp"
#include "lpm/minorlift.hpp"
#include "lpm/permwalk.hpp"
#include "lpm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lpm {

const std::vector<std::string>& battery_checks() {
    static const std::vector<std::string> names{"fischer", "koteljanskii", "nlc",         "diag",    "monotone",
                                                "spectral", "schur-horn",  "majorization", "permwalk", "renegar"};
    return names;
}

bool is_battery_check(const std::string& name) {
    const auto& c = battery_checks();
    return std::find(c.begin(), c.end(), name) != c.end();
}

namespace {

using io::json;

double rel_slack(double slack, double lhs, double rhs) {
    return slack / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

struct Emitter {
    std::ostream& out;
    BatterySummary& sum;

    void record(int index, const FamilyMember& fm, const InequalityRecord& r) {
        json j = io::to_json(r);
        j["index"] = index;
        j["family"] = fm.family;
        j["label"] = fm.label;
        out << j.dump() << '\n';
        tally(r.status, r.slack, rel_slack(r.slack, r.lhs, r.rhs));
    }

    void line(int index, const FamilyMember& fm, const std::string& check, Status st, double slack, double rel,
              json extra) {
        extra["index"] = index;
        extra["family"] = fm.family;
        extra["label"] = fm.label;
        extra["check"] = check;
        extra["status"] = to_string(st);
        extra["slack"] = std::isfinite(slack) ? json(slack) : json(nullptr);
        out << extra.dump() << '\n';
        tally(st, slack, rel);
    }

    void tally(Status st, double slack, double rel) {
        ++sum.records;
        if (st == Status::violation) ++sum.violations;
        if (st == Status::precondition_failed) {
            ++sum.preconditions_failed;
            return;
        }
        if (std::isfinite(slack)) sum.min_slack = std::min(sum.min_slack, slack);
        if (std::isfinite(rel)) sum.min_rel_slack = std::min(sum.min_rel_slack, rel);
    }
};

// Worst record by relative slack, precondition failures first.
const InequalityRecord* worst(const std::vector<InequalityRecord>& recs) {
    const InequalityRecord* w = nullptr;
    for (const auto& r : recs) {
        if (r.status == Status::precondition_failed) return &r;
        if (!w || rel_slack(r.slack, r.lhs, r.rhs) < rel_slack(w->slack, w->lhs, w->rhs)) w = &r;
    }
    return w;
}

} // namespace

BatterySummary run_battery(const BatteryConfig& cfg, std::ostream& out) {
    require(is_family(cfg.family), "unknown family: " + cfg.family);
    require(is_battery_check(cfg.check), "unknown check: " + cfg.check);
    require(cfg.trials >= 0, "trials must be nonnegative");
    require(cfg.n_max >= 2 && cfg.n_max <= 8, "--n must be in [2, 8]");
    BatterySummary sum;
    sum.min_slack = sum.min_rel_slack = std::numeric_limits<double>::infinity();
    Emitter em{out, sum};
    Tolerances tol;
    tol.rel = cfg.tol_rel;

    for (int i = 0; i < cfg.trials; ++i) {
        Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        const FamilyMember fm = draw_family(cfg.family, rng, 2, cfg.n_max);
        const MultiAffinePoly& p = fm.p;
        ++sum.samples;
        const double margin = rng.coin() ? 0.0 : rng.uniform(0.01, 0.5);
        auto sample_matrix = [&] { return sample_in_cone_matrix(p, margin, rng); };
        const std::string& c = cfg.check;

        if (c == "fischer") {
            const SymMatrix a = sample_matrix();
            em.record(i, fm, check_fischer_hadamard(p, a, random_partition(p.n(), rng), tol));
        } else if (c == "diag") {
            const SymMatrix a = sample_matrix();
            em.record(i, fm, check_diag_corollary(p, a, tol).record);
        } else if (c == "monotone") {
            const SymMatrix a = sample_matrix();
            const auto r = check_monotone_segment(p, a, random_partition(p.n(), rng), 101, tol);
            const double scale = r.values.empty() ? 0.0 : std::abs(r.values.back());
            em.line(i, fm, c, r.status, r.min_difference, r.min_difference / (1.0 + scale),
                    {{"tolerance", r.tolerance}});
        } else if (c == "koteljanskii" || c == "nlc") {
            const SymMatrix a = sample_matrix();
            std::vector<InequalityRecord> recs;
            json extra = json::object();
            if (c == "koteljanskii") {
                recs = koteljanskii_battery(p, a, tol);
            } else {
                auto r = check_nlc_battery(p, a, tol);
                recs = std::move(r.records);
                if (r.status == Status::precondition_failed) recs = {precondition_record("nlc", "")};
                if (!r.coeffs_nonnegative) recs.push_back(make_record("nlc-coeff", r.min_coeff, 0.0, tol, "min coefficient of P_A"));
            }
            if (cfg.all_records) {
                for (const auto& r : recs) em.record(i, fm, r);
            } else if (const auto* w = worst(recs)) {
                int bad = 0;
                for (const auto& r : recs) bad += r.status == Status::violation;
                // the worst record stands for the whole sample; the other
                // violations still count
                em.record(i, fm, *w);
                sum.violations += bad - (w->status == Status::violation ? 1 : 0);
            }
        } else if (c == "spectral") {
            const SymMatrix a = sample_matrix();
            const auto r = spectral_containment_search(p, a);
            em.line(i, fm, c, r.found ? Status::pass : Status::violation, r.cone.min_root, r.cone.min_root,
                    {{"found", r.found}, {"permutations_tested", r.permutations_tested},
                     {"permutation", r.permutation.empty() ? "" : one_line(r.permutation)}});
        } else if (c == "schur-horn") {
            const SymMatrix x = random_symmetric(p.n(), rng);
            const auto r = schur_horn_gap(p, x, 5, 30, rng.engine()());
            const double gap = r.perm_max - r.orth_max_lower_bound;
            const double rel = gap / (1.0 + std::abs(r.perm_max));
            em.line(i, fm, c, rel >= -1e-6 ? Status::pass : Status::violation, gap, rel,
                    {{"perm_max", r.perm_max}, {"orth_max_lower_bound", r.orth_max_lower_bound}});
        } else if (c == "majorization") {
            const SymMatrix x = random_symmetric(p.n(), rng);
            std::vector<double> d(p.n());
            for (auto& v : d) v = rng.uniform(0.2, 3.0);
            const int k = rng.uniform_int(1, p.n());
            const auto r = check_majorization_rescaled_ek(x, d, k);
            em.line(i, fm, c, r.pass ? Status::pass : Status::violation, 0.0, 0.0,
                    {{"k", k}, {"roots_x", r.roots_x}, {"roots_diag", r.roots_diag}});
        } else if (c == "permwalk") {
            const int d = p.degree();
            const auto v = sample_in_cone_vector(elementary(p.n(), d), margin, rng);
            const auto w = permutation_walk(p, v);
            em.line(i, fm, c, w.success ? Status::pass : Status::violation, w.final_check.min_root,
                    w.final_check.min_root, io::to_json(w));
        } else if (c == "renegar") {
            const auto r = renegar_nesting_check(p, 20, rng.engine()());
            em.line(i, fm, c, r.violations == 0 ? Status::pass : Status::violation, r.min_slack, r.min_slack,
                    {{"samples", r.samples}, {"violations", r.violations}});
        }
    }
    json summary = {{"summary", true},
                    {"family", cfg.family},
                    {"check", cfg.check},
                    {"samples", sum.samples},
                    {"records", sum.records},
                    {"violations", sum.violations},
                    {"preconditions_failed", sum.preconditions_failed},
                    {"min_slack", std::isfinite(sum.min_slack) ? json(sum.min_slack) : json(nullptr)},
                    {"min_rel_slack", std::isfinite(sum.min_rel_slack) ? json(sum.min_rel_slack) : json(nullptr)}};
    out << summary.dump() << '\n';
    return sum;
}

} // namespace lpm
