#pragma once

// Umbrella header for the whole library.

#include "kim/bounds.hpp"
#include "kim/coloring.hpp"
#include "kim/decomposition.hpp"
#include "kim/delayed_tree.hpp"
#include "kim/detection.hpp"
#include "kim/error.hpp"
#include "kim/generators.hpp"
#include "kim/graph.hpp"
#include "kim/io.hpp"
#include "kim/k3.hpp"
#include "kim/lca_index.hpp"
#include "kim/oracle.hpp"
#include "kim/ramsey.hpp"
#include "kim/range_index.hpp"
#include "kim/reduction.hpp"
#include "kim/refinement.hpp"
#include "kim/rng.hpp"
#include "kim/tree_lemma.hpp"
#include "kim/witness.hpp"
