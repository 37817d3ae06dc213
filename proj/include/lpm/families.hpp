#pragma once

#include <string>
#include <vector>

#include "lpm/multiaffine.hpp"
#include "lpm/random.hpp"

namespace lpm {

struct FamilyMember {
    std::string family;
    std::string label;  // human-readable description of the draw
    MultiAffinePoly p;
};

// Stable homogeneous generators:
//   ek            e_k(x_1..x_n)
//   ek-rescaled   e_k(d_1 x_1, .., d_n x_n), d > 0
//   tree          spanning-tree polynomial of a random connected graph
//   derivative-ek partial^S e_k
//   x0-product    x_0 q with q drawn from ek or ek-rescaled
const std::vector<std::string>& family_names();
bool is_family(const std::string& name);

// n in [n_min, n_max] (tree graphs are sized so that the edge count stays
// within n_max).
FamilyMember draw_family(const std::string& family, Rng& rng, int n_min = 2, int n_max = 6);

// Classes with the spectral containment property:
//   ek            e_k
//   ek-perturbed  e_d(x_1..x_n) + eps e_d(x_1..x_k)
//   linear        positive linear form
//   corank-one    sum_i a_i prod_{j != i} x_j with a_i near 1
//   e2-minus      e_2(x_1..x_4) - eps (x_1 x_2 + x_1 x_3)
//   x0-times      x_0 q for q from the classes above
const std::vector<std::string>& containment_family_names();
FamilyMember draw_containment_family(const std::string& family, Rng& rng, double epsilon, int n_min = 2,
                                     int n_max = 6);

} // namespace lpm
