#pragma once

#include "gint/binomial.hpp"
#include "gint/bounds.hpp"
#include "gint/cliques.hpp"
#include "gint/conflict_graph.hpp"
#include "gint/errors.hpp"
#include "gint/family.hpp"
#include "gint/graph.hpp"
#include "gint/hypergraph.hpp"
#include "gint/io.hpp"
#include "gint/solver.hpp"
#include "gint/subsets.hpp"
#include "gint/sweep.hpp"
#include "gint/vertex_set.hpp"
