#pragma once

#include "semitotal/approx.hpp"
#include "semitotal/domination.hpp"
#include "semitotal/error.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph.hpp"
#include "semitotal/interval_solver.hpp"
#include "semitotal/intervals.hpp"
#include "semitotal/io.hpp"
#include "semitotal/reductions.hpp"
