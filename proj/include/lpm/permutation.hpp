#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpm {

// One-line notation, 0-based: perm[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& p);
void validate_permutation(const Permutation& p, int n);

// (a * b)(i) = a(b(i)): b acts first.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
Permutation transposition(int n, int i, int j);

// Coordinate action on vectors: out[p(i)] = v[i].
std::vector<double> permute_vector(const Permutation& p, const std::vector<double>& v);

// Lehmer-code rank in [0, n!) and its inverse.
std::uint64_t lehmer_rank(const Permutation& p);
Permutation lehmer_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

// "[2 3 1]" style, 1-based.
std::string one_line(const Permutation& p);

} // namespace lpm
