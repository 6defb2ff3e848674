#pragma once

#include "garside/braid.hpp"
#include "garside/conjugacy.hpp"
#include "garside/export.hpp"
#include "garside/simple.hpp"
#include "garside/solver.hpp"
#include "garside/transport.hpp"
#include "garside/uss_graph.hpp"
#include "garside/word.hpp"
