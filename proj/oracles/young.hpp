#pragma once

// Test oracles: standard Young tableaux by direct enumeration, and the
// q,t-Catalan number as a sum over Dyck paths (area, bounce).

#include <vector>

#include "coxlink/polyalg.hpp"

namespace coxlink::oracles {

/// Every standard Young tableau with n cells, each as its list of rows.
std::vector<std::vector<std::vector<int>>> standard_young_tableaux(int n);

/// sum over Dyck paths of size n of q^area t^bounce, in variables (q, t).
polyalg::LaurentPoly qt_catalan(int n);

}  // namespace coxlink::oracles
