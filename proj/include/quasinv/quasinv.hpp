#pragma once

#include "quasinv/classifier.hpp"
#include "quasinv/error.hpp"
#include "quasinv/oracle.hpp"
#include "quasinv/orbit.hpp"
#include "quasinv/p_solver.hpp"
#include "quasinv/quasi_invariance.hpp"
#include "quasinv/residue.hpp"
#include "quasinv/selfmap.hpp"
#include "quasinv/suite.hpp"
#include "quasinv/superset.hpp"
