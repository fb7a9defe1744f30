#pragma once

#include "mclab/certificate_json.hpp"
#include "mclab/coloring.hpp"
#include "mclab/coloring_json.hpp"
#include "mclab/constructions.hpp"
#include "mclab/enumerate.hpp"
#include "mclab/formulas.hpp"
#include "mclab/graph.hpp"
#include "mclab/graph6.hpp"
#include "mclab/harness.hpp"
#include "mclab/metrics.hpp"
#include "mclab/solver.hpp"
#include "mclab/union_find.hpp"
