#include "lpm/exact.hpp"

#include "lpm/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lpm {

std::string rational_to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational rational_from_string(const std::string& s) {
    using boost::multiprecision::cpp_int;
    try {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(cpp_int(s));
        const cpp_int num(s.substr(0, slash));
        const cpp_int den(s.substr(slash + 1));
        require(den != 0, "rational: zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("rational: cannot parse '" + s + "'");
    }
}

namespace {

void prune(ExactPoly::TermMap& terms) {
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
}

} // namespace

ExactPoly::ExactPoly(std::vector<std::string> vars) : ExactPoly(std::move(vars), {}) {}

ExactPoly::ExactPoly(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            require(vars_[i] != vars_[j], "ExactPoly: duplicate variable name " + vars_[i]);
    for (const auto& [exps, c] : terms_) {
        require(exps.size() == vars_.size(), "ExactPoly: exponent vector length mismatch");
        require(std::all_of(exps.begin(), exps.end(), [](int e) { return e >= 0; }),
                "ExactPoly: negative exponent");
    }
    prune(terms_);
}

ExactPoly ExactPoly::constant(std::vector<std::string> vars, const Rational& c) {
    Exponents zero(vars.size(), 0);
    return ExactPoly(std::move(vars), {{zero, c}});
}

ExactPoly ExactPoly::variable(std::vector<std::string> vars, const std::string& name) {
    Exponents e(vars.size(), 0);
    ExactPoly probe(vars);
    const int i = probe.var_index(name);
    require(i >= 0, "ExactPoly: unknown variable " + name);
    e[i] = 1;
    return ExactPoly(std::move(vars), {{e, Rational(1)}});
}

int ExactPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

int ExactPoly::total_degree() const {
    int d = -1;
    for (const auto& [exps, c] : terms_) d = std::max(d, std::accumulate(exps.begin(), exps.end(), 0));
    return d;
}

bool ExactPoly::is_homogeneous() const {
    const int d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
    });
}

bool ExactPoly::involves(const std::string& name) const {
    const int i = var_index(name);
    if (i < 0) return false;
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[i] > 0; });
}

ExactPoly ExactPoly::derivative(const std::string& name) const {
    const int i = var_index(name);
    require(i >= 0, "derivative: unknown variable " + name);
    TermMap out;
    for (const auto& [exps, c] : terms_) {
        if (exps[i] == 0) continue;
        Exponents e = exps;
        e[i] -= 1;
        out[e] += c * exps[i];
    }
    return ExactPoly(vars_, std::move(out));
}

ExactPoly ExactPoly::substitute(const std::string& name, const Rational& value) const {
    const int i = var_index(name);
    require(i >= 0, "substitute: unknown variable " + name);
    TermMap out;
    for (const auto& [exps, c] : terms_) {
        Exponents e = exps;
        Rational factor = 1;
        for (int k = 0; k < exps[i]; ++k) factor *= value;
        e[i] = 0;
        out[e] += c * factor;
    }
    return ExactPoly(vars_, std::move(out));
}

ExactPoly ExactPoly::with_vars(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> where(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            require(!involves(vars_[i]), "with_vars: variable " + vars_[i] + " is used but missing");
            where[i] = -1;
        } else {
            where[i] = static_cast<int>(it - vars.begin());
        }
    }
    TermMap out;
    for (const auto& [exps, c] : terms_) {
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (where[i] >= 0) e[where[i]] = exps[i];
        out[e] += c;
    }
    return ExactPoly(vars, std::move(out));
}

Rational ExactPoly::evaluate(const std::vector<Rational>& point) const {
    require_dim(point.size() == vars_.size(), "ExactPoly::evaluate: point dimension mismatch");
    Rational total = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) term *= point[i];
        total += term;
    }
    return total;
}

double ExactPoly::evaluate_double(const std::vector<double>& point) const {
    require_dim(point.size() == vars_.size(), "ExactPoly::evaluate: point dimension mismatch");
    return evaluate_as<double>(point);
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    // Shared names must keep their relative order.
    std::vector<std::string> shared_a, shared_b;
    for (const auto& v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) shared_a.push_back(v);
    for (const auto& v : b)
        if (std::find(a.begin(), a.end(), v) != a.end()) shared_b.push_back(v);
    if (shared_a != shared_b) throw DomainError("variable-name clash: shared variables ordered differently");
    std::vector<std::string> out = a;
    for (const auto& v : b)
        if (std::find(a.begin(), a.end(), v) == a.end()) out.push_back(v);
    return out;
}

ExactPoly ExactPoly::operator-() const {
    TermMap out = terms_;
    for (auto& [e, c] : out) c = -c;
    return ExactPoly(vars_, std::move(out));
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    ExactPoly x = a.with_vars(vars), y = b.with_vars(vars);
    for (const auto& [e, c] : y.terms_) x.terms_[e] += c;
    prune(x.terms_);
    return x;
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + (-b); }

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    const ExactPoly x = a.with_vars(vars), y = b.with_vars(vars);
    ExactPoly::TermMap out;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y.terms_) {
            ExactPoly::Exponents e(vars.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    }
    return ExactPoly(vars, std::move(out));
}

ExactPoly operator*(const Rational& s, const ExactPoly& p) {
    ExactPoly::TermMap out = p.terms_;
    for (auto& [e, c] : out) c *= s;
    return ExactPoly(p.vars_, std::move(out));
}

bool operator==(const ExactPoly& a, const ExactPoly& b) {
    const auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_vars(vars).terms_ == b.with_vars(vars).terms_;
}

std::vector<std::pair<ExactPoly::Exponents, Rational>> ExactPoly::canonical_terms() const {
    std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        const int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        const int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    return out;
}

std::string ExactPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : canonical_terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        const bool is_const = std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
        bool wrote = false;
        if (mag != 1 || is_const) {
            os << rational_to_string(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            os << (wrote ? "*" : "") << vars_[i];
            if (exps[i] > 1) os << "^" << exps[i];
            wrote = true;
        }
    }
    return os.str();
}

} // namespace lpm
