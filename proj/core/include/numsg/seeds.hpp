#pragma once

#include <vector>

#include "numsg/semigroup.hpp"

namespace numsg::seeds {

// Almost symmetric, type 53, H = [1,54,52,50,54,64,68 ->].
const std::vector<Int>& level2_generators();
// Almost symmetric, H = [1,28,28,27,27,29,30,31,32 ->].
const std::vector<Int>& level3_generators();

/// The seeds above, with their stated invariants re-checked on first use.
const NumericalSemigroup& level2_seed();
const NumericalSemigroup& level3_seed();

}  // namespace numsg::seeds
