#pragma once

#include <vector>

#include "uplogic/structure.hpp"

namespace uplogic {

// The bag-of-marbles structure: states s_r, s_b, s_y with propositions red,
// blue, yellow, and the three measures (3/10, a, 7/10 - a) for
// a in {0, 7/20, 7/10}. Its envelope gives red 3/10 and blue and yellow 7/10
// each; blue and yellow both have lower probability 0.
UPStructure marble_fixture();

// The four-measure family over {a, b, c, d} whose envelope, bumped at
// {a,b,c}, stops being an upper probability measure.
std::vector<Measure> counterexample_measures();

}  // namespace uplogic
