#include "lpm/inequalities.hpp"

#include "lpm/error.hpp"
#include "lpm/minorlift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lpm {

const char* to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::violation: return "violation";
    case Status::precondition_failed: return "precondition_failed";
    }
    return "violation";
}

InequalityRecord make_record(std::string check, double lhs, double rhs, const Tolerances& tol, std::string context) {
    InequalityRecord r;
    r.check = std::move(check);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.verdict = r.slack >= -tol.abs - tol.rel * std::max(std::abs(lhs), std::abs(rhs));
    r.status = r.verdict ? Status::pass : Status::violation;
    r.context = std::move(context);
    return r;
}

InequalityRecord precondition_record(std::string check, std::string context) {
    InequalityRecord r;
    r.check = std::move(check);
    r.lhs = r.rhs = r.slack = std::numeric_limits<double>::quiet_NaN();
    r.verdict = false;
    r.status = Status::precondition_failed;
    r.context = std::move(context);
    return r;
}

bool in_closed_matrix_cone(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol) {
    return in_cone_matrix(p, a, tol.cone).in_closed_cone();
}

std::string describe(const SubsetMask& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : s.indices()) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string describe(const Partition& pi) {
    std::string out;
    for (const auto& b : pi.blocks()) {
        std::uint32_t bits = 0;
        for (int i : b) bits |= 1u << i;
        out += describe(SubsetMask(pi.n(), bits));
    }
    return out;
}

InequalityRecord check_fischer_hadamard(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                        const Tolerances& tol) {
    require_dim(a.n() == p.n() && pi.n() == p.n(), "check_fischer_hadamard: size mismatch");
    const std::string ctx = "partition=" + describe(pi);
    if (!in_closed_matrix_cone(p, a, tol)) return precondition_record("fischer", ctx);
    return make_record("fischer", minor_lift_eval(p, block_project(a, pi)), minor_lift_eval(p, a), tol, ctx);
}

ProjectionRecord check_projection_lemma(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                        const Tolerances& tol) {
    require_dim(a.n() == p.n() && pi.n() == p.n(), "check_projection_lemma: size mismatch");
    ProjectionRecord r;
    if (!in_closed_matrix_cone(p, a, tol)) {
        r.status = Status::precondition_failed;
        return r;
    }
    r.cone = in_cone_matrix(p, block_project(a, pi), tol.cone);
    r.status = r.cone.in_closed_cone() ? Status::pass : Status::violation;
    return r;
}

DiagRecord check_diag_corollary(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol) {
    require_dim(a.n() == p.n(), "check_diag_corollary: size mismatch");
    DiagRecord r;
    if (!in_closed_matrix_cone(p, a, tol)) {
        r.record = precondition_record("diag", "");
        return r;
    }
    const auto d = a.diag();
    r.record = make_record("diag", p.evaluate(d), minor_lift_eval(p, a), tol);
    r.diag_cone = in_cone_vector(p, d, tol.cone);
    if (!r.diag_cone.in_closed_cone()) {
        r.record.verdict = false;
        r.record.status = Status::violation;
        r.record.context = "diagonal outside H(p)";
    }
    return r;
}

MonotoneReport check_monotone_segment(const MultiAffinePoly& p, const SymMatrix& a, const Partition& pi,
                                      int grid_points, const Tolerances& tol) {
    require_dim(a.n() == p.n() && pi.n() == p.n(), "check_monotone_segment: size mismatch");
    require(grid_points >= 2, "check_monotone_segment: need at least 2 grid points");
    MonotoneReport r;
    if (!in_closed_matrix_cone(p, a, tol)) {
        r.status = Status::precondition_failed;
        return r;
    }
    const SymMatrix proj = block_project(a, pi);
    double scale = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = static_cast<double>(i) / (grid_points - 1);
        const double g = minor_lift_eval(p, (1.0 - t) * a + t * proj);
        r.values.push_back(g);
        scale = std::max(scale, std::abs(g));
    }
    r.tolerance = tol.abs + tol.rel * scale;
    r.min_difference = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < grid_points; ++i) r.min_difference = std::min(r.min_difference, r.values[i + 1] - r.values[i]);
    r.status = r.min_difference >= -r.tolerance ? Status::pass : Status::violation;
    return r;
}

InequalityRecord check_koteljanskii(const MultiAffinePoly& p, const SymMatrix& a, const SubsetMask& s,
                                    const SubsetMask& t, const Tolerances& tol) {
    require_dim(a.n() == p.n(), "check_koteljanskii: size mismatch");
    require((s & t).size() >= p.n() - p.degree(), "check_koteljanskii: |S n T| < n - deg p, restriction undefined");
    const std::string ctx = "S=" + describe(s) + " T=" + describe(t);
    if (!in_closed_matrix_cone(p, a, tol)) return precondition_record("koteljanskii", ctx);
    const double lhs = restriction_value(p, s, a) * restriction_value(p, t, a);
    const double rhs = restriction_value(p, s | t, a) * restriction_value(p, s & t, a);
    return make_record("koteljanskii", lhs, rhs, tol, ctx);
}

std::vector<InequalityRecord> koteljanskii_battery(const MultiAffinePoly& p, const SymMatrix& a,
                                                   const Tolerances& tol) {
    require_dim(a.n() == p.n(), "koteljanskii_battery: size mismatch");
    const int n = p.n();
    if (!in_closed_matrix_cone(p, a, tol)) return {precondition_record("koteljanskii", "")};
    // P|_T(A) for every T, NaN when undefined
    std::vector<double> value(std::size_t{1} << n, std::numeric_limits<double>::quiet_NaN());
    for (std::uint32_t bits = 0; bits < value.size(); ++bits) {
        const SubsetMask t(n, bits);
        if (t.size() >= n - p.degree()) value[bits] = restriction_value(p, t, a);
    }
    std::vector<InequalityRecord> out;
    for (std::uint32_t s = 0; s < value.size(); ++s)
        for (std::uint32_t t = s + 1; t < value.size(); ++t) {
            if ((s & t) == s || (s & t) == t) continue;
            if (std::isnan(value[s & t])) continue;
            out.push_back(make_record("koteljanskii", value[s] * value[t], value[s | t] * value[s & t], tol,
                                      "S=" + describe(SubsetMask(n, s)) + " T=" + describe(SubsetMask(n, t))));
        }
    return out;
}

MultiAffinePoly diagonal_shift_poly(const MultiAffinePoly& p, const SymMatrix& a) {
    require_dim(a.n() == p.n(), "diagonal_shift_poly: size mismatch");
    const int n = p.n();
    MultiAffinePoly::TermMap terms;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        const SubsetMask l(n, bits);
        if (l.size() > p.degree()) continue;
        terms[bits] = restriction_value(p, l.complement(), a);
    }
    return MultiAffinePoly(n, std::move(terms));
}

NlcReport check_nlc_battery(const MultiAffinePoly& p, const SymMatrix& a, const Tolerances& tol) {
    require_dim(a.n() == p.n(), "check_nlc_battery: size mismatch");
    require(p.n() <= 8, "check_nlc_battery: n must be at most 8");
    NlcReport r;
    if (!in_closed_matrix_cone(p, a, tol)) {
        r.status = Status::precondition_failed;
        return r;
    }
    const int n = p.n();
    // keep the raw values, the polynomial prunes tiny coefficients
    std::vector<double> c(std::size_t{1} << n, 0.0);
    double scale = 0.0;
    for (std::uint32_t bits = 0; bits < c.size(); ++bits) {
        const SubsetMask l(n, bits);
        if (l.size() <= p.degree()) c[bits] = restriction_value(p, l.complement(), a);
        scale = std::max(scale, std::abs(c[bits]));
    }
    MultiAffinePoly::TermMap terms;
    for (std::uint32_t bits = 0; bits < c.size(); ++bits)
        if (c[bits] != 0.0) terms[bits] = c[bits];
    r.pa = MultiAffinePoly(n, std::move(terms));
    r.min_coeff = *std::min_element(c.begin(), c.end());
    r.coeffs_nonnegative = r.min_coeff >= -tol.abs - tol.rel * scale;
    for (std::uint32_t s = 0; s < c.size(); ++s)
        for (std::uint32_t t = s + 1; t < c.size(); ++t) {
            if ((s & t) == s || (s & t) == t) continue;
            r.records.push_back(make_record("nlc", c[s] * c[t], c[s | t] * c[s & t], tol,
                                            "S=" + describe(SubsetMask(n, s)) + " T=" + describe(SubsetMask(n, t))));
        }
    const bool lattice_ok =
        std::all_of(r.records.begin(), r.records.end(), [](const InequalityRecord& x) { return x.verdict; });
    r.status = (lattice_ok && r.coeffs_nonnegative) ? Status::pass : Status::violation;
    return r;
}

} // namespace lpm
