#pragma once

#include "packing/core.hpp"
#include "packing/errors.hpp"
#include "packing/generators.hpp"
#include "packing/graph.hpp"
#include "packing/io.hpp"
#include "packing/matching.hpp"
#include "packing/reductions.hpp"
#include "packing/selftest.hpp"
#include "packing/set_system.hpp"
#include "packing/solutions.hpp"
#include "packing/solvers.hpp"
