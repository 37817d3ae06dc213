#include "lpm/permutation.hpp"

#include "lpm/error.hpp"

#include <sstream>

namespace lpm {

Permutation identity_permutation(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

void validate_permutation(const Permutation& p, int n) {
    require(static_cast<int>(p.size()) == n, "permutation has wrong length");
    require(is_permutation(p), "not a bijection on [n]");
}

Permutation compose(const Permutation& a, const Permutation& b) {
    require(a.size() == b.size(), "compose: size mismatch");
    Permutation out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = static_cast<int>(i);
    return out;
}

Permutation transposition(int n, int i, int j) {
    require(i >= 0 && i < n && j >= 0 && j < n, "transposition: index out of range");
    Permutation p = identity_permutation(n);
    p[i] = j;
    p[j] = i;
    return p;
}

std::vector<double> permute_vector(const Permutation& p, const std::vector<double>& v) {
    require(p.size() == v.size(), "permute_vector: size mismatch");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[p[i]] = v[i];
    return out;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t lehmer_rank(const Permutation& p) {
    const int n = static_cast<int>(p.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
    }
    return rank;
}

Permutation lehmer_unrank(int n, std::uint64_t rank) {
    std::vector<int> pool = identity_permutation(n);
    Permutation p;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t f = factorial(n - 1 - i);
        const auto k = static_cast<std::size_t>(rank / f);
        rank %= f;
        p.push_back(pool[k]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return p;
}

std::string one_line(const Permutation& p) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? " " : "") << p[i] + 1;
    os << ']';
    return os.str();
}

} // namespace lpm
