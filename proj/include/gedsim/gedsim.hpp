#pragma once

#include "gedsim/assignment.hpp"
#include "gedsim/bb_solver.hpp"
#include "gedsim/bounds.hpp"
#include "gedsim/costs.hpp"
#include "gedsim/error.hpp"
#include "gedsim/graph.hpp"
#include "gedsim/ilp_model.hpp"
#include "gedsim/io.hpp"
#include "gedsim/lp_solver.hpp"
#include "gedsim/matrix.hpp"
#include "gedsim/oracle.hpp"
#include "gedsim/random.hpp"
#include "gedsim/rational.hpp"
#include "gedsim/search.hpp"
