#pragma once

#include "tropcomp/cells.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/io.hpp"
#include "tropcomp/linalg.hpp"
#include "tropcomp/lp.hpp"
#include "tropcomp/polynomial.hpp"
#include "tropcomp/rational.hpp"
#include "tropcomp/sat.hpp"
#include "tropcomp/svg.hpp"
#include "tropcomp/topology.hpp"
