#include "lpm/roots.hpp"

#include "lpm/detail/roots_impl.hpp"
#include "lpm/error.hpp"

namespace lpm {

RealRootsResult real_roots(const UniPoly& q, double tol_imag) {
    require(!q.is_zero(), "real_roots: zero polynomial");
    auto impl = detail::real_roots_impl<double>(q.coeffs(), tol_imag, kDoubleCoeffErr);
    return {impl.real_rooted, std::move(impl.roots), impl.max_imag};
}

} // namespace lpm
