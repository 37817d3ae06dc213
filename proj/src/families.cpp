#include "lpm/families.hpp"

#include "lpm/error.hpp"
#include "lpm/graph.hpp"

#include <algorithm>
#include <sstream>

namespace lpm {

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names{"ek", "ek-rescaled", "tree", "derivative-ek", "x0-product"};
    return names;
}

bool is_family(const std::string& name) {
    const auto& f = family_names();
    return std::find(f.begin(), f.end(), name) != f.end();
}

namespace {

std::string fmt(const char* head, int n, int k) {
    std::ostringstream os;
    os << head << "(n=" << n << ",k=" << k << ")";
    return os.str();
}

MultiAffinePoly times_x0(const MultiAffinePoly& q) {
    return multiply_variable(shift_variables(q, q.n() + 1, 1), 0);
}

// Random connected graph on m vertices with at most max_edges edges: a random
// spanning tree plus extra random edges.
Graph random_connected_graph(int m, int max_edges, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i + 1;
    std::shuffle(order.begin(), order.end(), rng.engine());
    for (int i = 1; i < m; ++i) {
        const int j = rng.uniform_int(0, i - 1);
        edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    }
    std::vector<std::pair<int, int>> spare;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b)
            if (std::find(edges.begin(), edges.end(), std::pair{a, b}) == edges.end()) spare.emplace_back(a, b);
    std::shuffle(spare.begin(), spare.end(), rng.engine());
    const int room = std::max(0, max_edges - static_cast<int>(edges.size()));
    const int extra = rng.uniform_int(0, std::min(room, static_cast<int>(spare.size())));
    edges.insert(edges.end(), spare.begin(), spare.begin() + extra);
    std::sort(edges.begin(), edges.end());
    return Graph(m, edges);
}

} // namespace

FamilyMember draw_family(const std::string& family, Rng& rng, int n_min, int n_max) {
    require(n_min >= 1 && n_min <= n_max && n_max <= kMaxVars, "draw_family: bad size range");
    FamilyMember m;
    m.family = family;
    if (family == "ek") {
        const int n = rng.uniform_int(n_min, n_max);
        const int k = rng.uniform_int(1, n);
        m.p = elementary(n, k);
        m.label = fmt("e", n, k);
    } else if (family == "ek-rescaled") {
        const int n = rng.uniform_int(n_min, n_max);
        const int k = rng.uniform_int(1, n);
        std::vector<double> d(n);
        for (auto& x : d) x = rng.uniform(0.2, 3.0);
        m.p = rescale_variables(elementary(n, k), d);
        m.label = fmt("e(Dx)", n, k);
    } else if (family == "tree") {
        // m vertices need at least m - 1 <= n_max edges
        const int hi = std::clamp(n_max + 1, 2, 5);
        const int lo = std::clamp(n_min + 1, 2, hi);
        const int verts = rng.uniform_int(lo, hi);
        const Graph g = random_connected_graph(verts, n_max, rng);
        m.p = spanning_tree_poly(g);
        std::ostringstream os;
        os << "tree(m=" << verts << ",edges=" << g.edges().size() << ")";
        m.label = os.str();
    } else if (family == "derivative-ek") {
        const int n = rng.uniform_int(std::max(n_min, 2), std::max(n_max, 2));
        const int k = rng.uniform_int(2, n);
        const int s = rng.uniform_int(1, k - 1);
        std::vector<int> idx(n);
        for (int i = 0; i < n; ++i) idx[i] = i + 1;
        std::shuffle(idx.begin(), idx.end(), rng.engine());
        idx.resize(s);
        const SubsetMask sm = SubsetMask::from_indices(n, idx);
        m.p = partial_subset(elementary(n, k), sm);
        std::ostringstream os;
        os << "d^S e(n=" << n << ",k=" << k << ",|S|=" << s << ")";
        m.label = os.str();
    } else if (family == "x0-product") {
        const int n = rng.uniform_int(std::max(n_min - 1, 1), std::max(n_max - 1, 1));
        const int k = rng.uniform_int(1, n);
        std::vector<double> d(n, 1.0);
        if (rng.coin())
            for (auto& x : d) x = rng.uniform(0.2, 3.0);
        m.p = times_x0(rescale_variables(elementary(n, k), d));
        m.label = "x0*" + fmt("e(Dx)", n, k);
    } else {
        throw DomainError("unknown family: " + family);
    }
    return m;
}

const std::vector<std::string>& containment_family_names() {
    static const std::vector<std::string> names{"ek", "ek-perturbed", "linear", "corank-one", "e2-minus", "x0-times"};
    return names;
}

FamilyMember draw_containment_family(const std::string& family, Rng& rng, double epsilon, int n_min, int n_max) {
    require(n_min >= 1 && n_min <= n_max && n_max <= kMaxVars, "draw_containment_family: bad size range");
    FamilyMember m;
    m.family = family;
    std::ostringstream os;
    if (family == "ek") {
        const int n = rng.uniform_int(n_min, n_max);
        const int k = rng.uniform_int(1, n);
        m.p = elementary(n, k);
        os << "e(n=" << n << ",k=" << k << ")";
    } else if (family == "ek-perturbed") {
        const int n = rng.uniform_int(std::max(n_min, 2), n_max);
        const int k = rng.uniform_int(1, n);
        const int d = rng.uniform_int(1, k);
        const double eps = rng.coin() ? epsilon : -epsilon;
        m.p = elementary(n, d) + eps * shift_variables(elementary(k, d), n, 0);
        os << "e_" << d << "(n=" << n << ")+" << eps << "*e_" << d << "(x1..x" << k << ")";
    } else if (family == "linear") {
        const int n = rng.uniform_int(n_min, n_max);
        MultiAffinePoly::TermMap t;
        for (int i = 0; i < n; ++i) t[1u << i] = rng.uniform(0.1, 3.0);
        m.p = MultiAffinePoly(n, std::move(t));
        os << "linear(n=" << n << ")";
    } else if (family == "corank-one") {
        const int n = rng.uniform_int(std::max(n_min, 3), std::max(n_max, 3));
        MultiAffinePoly::TermMap t;
        const std::uint32_t full = SubsetMask::full_bits(n);
        for (int i = 0; i < n; ++i) t[full & ~(1u << i)] = 1.0 + epsilon * rng.uniform(-1.0, 1.0);
        m.p = MultiAffinePoly(n, std::move(t));
        os << "corank-one(n=" << n << ",eps=" << epsilon << ")";
    } else if (family == "e2-minus") {
        MultiAffinePoly::TermMap t = elementary(4, 2).terms();
        t[0b0011] -= epsilon;
        t[0b0101] -= epsilon;
        m.p = MultiAffinePoly(4, std::move(t));
        os << "e2(x1..x4)-" << epsilon << "(x1x2+x1x3)";
    } else if (family == "x0-times") {
        static const std::vector<std::string> inner{"ek", "ek-perturbed", "linear", "corank-one", "e2-minus"};
        const auto& pick = inner[rng.uniform_int(0, static_cast<int>(inner.size()) - 1)];
        const int hi = std::max(n_max - 1, 1);
        const auto q = draw_containment_family(pick, rng, epsilon, std::min(std::max(n_min - 1, 1), hi), hi);
        m.p = times_x0(q.p);
        os << "x0*" << q.label;
    } else {
        throw DomainError("unknown containment family: " + family);
    }
    m.label = os.str();
    return m;
}

} // namespace lpm
