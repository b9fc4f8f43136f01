#pragma once

#include <string>
#include <vector>

#include "ltfg/copolygon.hpp"
#include "ltfg/series.hpp"

namespace ltfg::fixtures {

// 2 x1 x2 + x1^4 + x2^5 over Q_2.
Series ex1(int precision = kDefaultPrecision);

// The dynamical system for p = 2, (h1, h2) = (2, 3): (2 x1 + x2^4, 2 x2 + x1^8).
SeriesPair dyn23(int precision = kDefaultPrecision);

// The worked multiplication-by-p candidate for (h1, h2) = (4, 5), read
// literally from its diagonal coefficient matrices C^l_k acting on
// X^l_k = (x1^(l-k) x2^k, x1^k x2^(l-k)). Needs p^5 <= 511, so p in {2, 3}.
SeriesPair appendix_b45(int p, int precision = kDefaultPrecision);

// Names accepted by copolygon_fixture: "ex1", "dyn23", "appendixB45".
const std::vector<std::string>& names();

// The copolygons of a named fixture: one for ex1, one per component otherwise.
std::vector<Copolygon> copolygon_fixture(const std::string& name);

}  // namespace ltfg::fixtures
