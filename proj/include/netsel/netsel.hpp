#pragma once

#include "netsel/absorb.hpp"
#include "netsel/axioms.hpp"
#include "netsel/centrality.hpp"
#include "netsel/election.hpp"
#include "netsel/errors.hpp"
#include "netsel/experiment.hpp"
#include "netsel/generate.hpp"
#include "netsel/graph.hpp"
#include "netsel/io.hpp"
#include "netsel/registry.hpp"
#include "netsel/rng.hpp"
#include "netsel/rules.hpp"
