#include "lpm/io.hpp"

#include "lpm/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace lpm::io {

namespace {

// JSON has no infinities or NaN; they become null.
json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json numbers(const std::vector<double>& xs) {
    json arr = json::array();
    for (double x : xs) arr.push_back(number(x));
    return arr;
}

double parse_coeff(const json& c) {
    if (c.is_number()) return c.get<double>();
    if (c.is_string()) {
        const auto s = c.get<std::string>();
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw DomainError("bad coefficient string: '" + s + "'");
        }
        if (used != s.size()) throw DomainError("bad coefficient string: '" + s + "'");
        return v;
    }
    throw DomainError("coefficient must be a number or a decimal string");
}

template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DomainError(std::string(what) + ": " + e.what());
    }
}

} // namespace

json to_json(const MultiAffinePoly& p) {
    json terms = json::array();
    for (const auto& [bits, c] : p.terms())
        terms.push_back({{"subset", SubsetMask(p.n(), bits).indices()}, {"coeff", c}});
    return {{"n", p.n()}, {"terms", terms}};
}

MultiAffinePoly poly_from_json(const json& j) {
    return guarded("polynomial JSON", [&] {
        require(j.is_object(), "polynomial JSON must be an object");
        const int n = j.at("n").get<int>();
        require(n >= 1 && n <= kMaxVars, "polynomial JSON: n must be in [1, 16]");
        MultiAffinePoly::TermMap terms;
        for (const auto& t : j.at("terms")) {
            const auto idx = t.at("subset").get<std::vector<int>>();
            for (std::size_t i = 1; i < idx.size(); ++i)
                require(idx[i - 1] < idx[i], "polynomial JSON: subsets must be sorted ascending");
            const auto bits = SubsetMask::from_indices(n, idx).bits();
            require(terms.count(bits) == 0, "polynomial JSON: repeated subset");
            terms[bits] = parse_coeff(t.at("coeff"));
        }
        return MultiAffinePoly(n, std::move(terms));
    });
}

json to_json(const SymMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.n(); ++j) row.push_back(a(i, j));
        rows.push_back(row);
    }
    return {{"n", a.n()}, {"rows", rows}};
}

SymMatrix matrix_from_json(const json& j) {
    return guarded("matrix JSON", [&] {
        require(j.is_object(), "matrix JSON must be an object");
        const auto rows = j.at("rows").get<std::vector<std::vector<double>>>();
        if (j.contains("n")) require_dim(j.at("n").get<int>() == static_cast<int>(rows.size()), "matrix JSON: n does not match row count");
        return SymMatrix::from_rows(rows);
    });
}

json to_json(const Partition& pi) {
    json blocks = json::array();
    for (const auto& b : pi.blocks()) {
        json blk = json::array();
        for (int i : b) blk.push_back(i + 1);
        blocks.push_back(blk);
    }
    return {{"blocks", blocks}};
}

Partition partition_from_json(const json& j, int n) {
    return guarded("partition JSON", [&] {
        return Partition::from_one_based(n, j.at("blocks").get<std::vector<std::vector<int>>>());
    });
}

json to_json(const ExactPoly& p) {
    json terms = json::array();
    for (const auto& [exps, c] : p.canonical_terms())
        terms.push_back({{"exponents", exps}, {"coeff", rational_to_string(c)}});
    return {{"vars", p.vars()}, {"terms", terms}};
}

ExactPoly exact_from_json(const json& j) {
    return guarded("exact polynomial JSON", [&] {
        const auto vars = j.at("vars").get<std::vector<std::string>>();
        ExactPoly::TermMap terms;
        for (const auto& t : j.at("terms")) {
            const auto exps = t.at("exponents").get<std::vector<int>>();
            require_dim(exps.size() == vars.size(), "exact polynomial JSON: exponent vector length mismatch");
            for (int e : exps) require(e >= 0, "exact polynomial JSON: negative exponent");
            terms[exps] += rational_from_string(t.at("coeff").get<std::string>());
        }
        return ExactPoly(vars, std::move(terms));
    });
}

json to_json(const ConeReport& r) {
    return {{"verdict", to_string(r.verdict)},   {"roots", numbers(r.roots)},
            {"min_root", number(r.min_root)},    {"slack", number(r.slack)},
            {"tolerance", number(r.tolerance)},  {"real_rooted", r.real_rooted},
            {"high_precision", r.high_precision}};
}

json to_json(const InequalityRecord& r) {
    return {{"check", r.check},       {"status", to_string(r.status)}, {"lhs", number(r.lhs)},
            {"rhs", number(r.rhs)},   {"slack", number(r.slack)},      {"verdict", r.verdict},
            {"context", r.context}};
}

json to_json(const SpectralResult& r) {
    json j = {{"eigenvalues", numbers(r.eigenvalues)},
              {"found", r.found},
              {"permutations_tested", r.permutations_tested},
              {"exhaustive", r.exhaustive},
              {"cone", to_json(r.cone)}};
    if (!r.permutation.empty()) {
        j["permutation"] = one_line(r.permutation);
        j["arrangement"] = numbers(r.arrangement);
    }
    if (!r.found) j["counterexample_confirmed"] = r.counterexample_confirmed;
    return j;
}

json to_json(const DerivationMatrix& d) {
    json labels = json::array();
    for (auto bits : d.basis) labels.push_back(SubsetMask(d.n, bits).indices());
    json j = to_json(d.entries);
    j["k"] = d.k;
    j["d"] = d.d;
    j["source_n"] = d.n;
    j["labels"] = labels;
    return j;
}

json to_json(const WalkResult& w) {
    json steps = json::array();
    for (const auto& s : w.trace.steps)
        steps.push_back({{"factor", s.factor_index}, {"swapped", s.swapped}, {"slack", number(s.slack)}});
    json j = {{"success", w.success}, {"tau", one_line(w.tau)}, {"image", numbers(w.image)}, {"steps", steps}};
    if (w.success) j["final"] = to_json(w.final_check);
    if (!w.failure.empty()) j["failure"] = w.failure;
    return j;
}

json parse(const std::string& text) {
    return guarded("JSON", [&] { return json::parse(text); });
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

} // namespace lpm::io
