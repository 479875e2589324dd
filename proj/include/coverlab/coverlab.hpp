// Umbrella header.

#ifndef COVERLAB_COVERLAB_HPP
#define COVERLAB_COVERLAB_HPP

#include "coverlab/bounds.hpp"
#include "coverlab/coloring.hpp"
#include "coverlab/constructive.hpp"
#include "coverlab/error.hpp"
#include "coverlab/generators.hpp"
#include "coverlab/graph.hpp"
#include "coverlab/invariant.hpp"
#include "coverlab/io.hpp"
#include "coverlab/isomorphism.hpp"
#include "coverlab/random_graphs.hpp"
#include "coverlab/reference.hpp"
#include "coverlab/set_cover.hpp"
#include "coverlab/solvers.hpp"
#include "coverlab/vertex_set.hpp"

#endif  // COVERLAB_COVERLAB_HPP
