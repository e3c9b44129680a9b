#pragma once

#include <string>

namespace catg {

// Bundled generator file for the order-80 subgroup H = <a, b, c> of A80 and
// the connection elements x1, x2, x3 of the pentavalent graph on A79.
const std::string& a79_fixture_text();

}  // namespace catg
