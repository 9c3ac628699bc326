#pragma once

#include "tridecomp/bridge.hpp"
#include "tridecomp/cliques.hpp"
#include "tridecomp/decompose.hpp"
#include "tridecomp/edge_list.hpp"
#include "tridecomp/errors.hpp"
#include "tridecomp/gadget.hpp"
#include "tridecomp/generators.hpp"
#include "tridecomp/graph.hpp"
#include "tridecomp/parallel.hpp"
#include "tridecomp/program/clamp.hpp"
#include "tridecomp/program/domain.hpp"
#include "tridecomp/program/helpers.hpp"
#include "tridecomp/program/objective.hpp"
#include "tridecomp/program/point.hpp"
#include "tridecomp/program/search.hpp"
#include "tridecomp/program/threshold.hpp"
#include "tridecomp/quadratic_field.hpp"
#include "tridecomp/random.hpp"
#include "tridecomp/scalar.hpp"
#include "tridecomp/weights.hpp"
