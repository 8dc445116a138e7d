#pragma once

// Umbrella header for the Bihom-Lie algebra workbench.

#include "bihom/errors.hpp"
#include "bihom/rational.hpp"
#include "bihom/matrix.hpp"
#include "bihom/subspace.hpp"
#include "bihom/algebra.hpp"
#include "bihom/derivations.hpp"
#include "bihom/representation.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/io.hpp"
