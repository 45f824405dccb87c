#pragma once

#include "nlflow/abelian_group.hpp"
#include "nlflow/arc_set.hpp"
#include "nlflow/catalog.hpp"
#include "nlflow/cut_lattice.hpp"
#include "nlflow/digraph.hpp"
#include "nlflow/digraph_io.hpp"
#include "nlflow/error.hpp"
#include "nlflow/nl_polynomial.hpp"
#include "nlflow/oracles.hpp"
#include "nlflow/polynomial.hpp"
#include "nlflow/poset.hpp"
#include "nlflow/rational_linalg.hpp"
#include "nlflow/regular_matroid.hpp"
#include "nlflow/tournaments.hpp"
#include "nlflow/verification.hpp"
