#pragma once

// Umbrella header.

#include "veering/angles.hpp"
#include "veering/bundles.hpp"
#include "veering/coloring.hpp"
#include "veering/curves.hpp"
#include "veering/cusp.hpp"
#include "veering/deform.hpp"
#include "veering/errors.hpp"
#include "veering/holonomy.hpp"
#include "veering/homology.hpp"
#include "veering/io.hpp"
#include "veering/ladders.hpp"
#include "veering/perm4.hpp"
#include "veering/pipeline.hpp"
#include "veering/rational.hpp"
#include "veering/rescue.hpp"
#include "veering/svg.hpp"
#include "veering/triangulation.hpp"
