#pragma once

// Umbrella header for the whole library.

#include "rivercross/budget.hpp"
#include "rivercross/category.hpp"
#include "rivercross/core.hpp"
#include "rivercross/dot.hpp"
#include "rivercross/graph.hpp"
#include "rivercross/json_io.hpp"
#include "rivercross/lift.hpp"
#include "rivercross/model.hpp"
#include "rivercross/path.hpp"
#include "rivercross/permutation.hpp"
#include "rivercross/solve.hpp"
#include "rivercross/symmetry.hpp"
