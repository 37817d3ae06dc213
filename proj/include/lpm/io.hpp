#pragma once

#include <string>

#include "json.hpp"

#include "lpm/cones.hpp"
#include "lpm/exact.hpp"
#include "lpm/inequalities.hpp"
#include "lpm/multiaffine.hpp"
#include "lpm/permwalk.hpp"
#include "lpm/spectral.hpp"
#include "lpm/symmat.hpp"

namespace lpm::io {

using nlohmann::json;

// Every parser throws lpm::DomainError (or DimensionError) on malformed input.

// {"n": int, "terms": [{"subset": [1-based ints], "coeff": number | "decimal"}]}
json to_json(const MultiAffinePoly& p);
MultiAffinePoly poly_from_json(const json& j);

// {"n": int, "rows": [[numbers]]}
json to_json(const SymMatrix& a);
SymMatrix matrix_from_json(const json& j);

// {"blocks": [[1-based ints]]}
json to_json(const Partition& pi);
Partition partition_from_json(const json& j, int n);

// {"vars": [names], "terms": [{"exponents": [ints], "coeff": "p/q"}]}
json to_json(const ExactPoly& p);
ExactPoly exact_from_json(const json& j);

json to_json(const ConeReport& r);
json to_json(const InequalityRecord& r);
json to_json(const SpectralResult& r);
json to_json(const DerivationMatrix& d);
json to_json(const WalkResult& w);

json parse(const std::string& text);
json load_file(const std::string& path);

} // namespace lpm::io
