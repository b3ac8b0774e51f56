#pragma once

// Exact computation of one parameter fixed point invariants for fiber
// preserving maps of torus bundles over the circle: a twisted group ring,
// cellular models with transport data, the one parameter trace with per class
// indices, a geometric fixed circle enumeration, and the bundle classifier
// that routes input data to the models.

#include "ntb/int_types.hpp"
#include "ntb/monomial.hpp"
#include "ntb/ring_elt.hpp"
#include "ntb/int_linalg.hpp"
#include "ntb/semiconjugacy.hpp"
#include "ntb/chains.hpp"
#include "ntb/reduce.hpp"
#include "ntb/homotopy.hpp"
#include "ntb/cell_geometry.hpp"
#include "ntb/cell_model.hpp"
#include "ntb/oracle.hpp"
#include "ntb/trace.hpp"
#include "ntb/classifier.hpp"
#include "ntb/report.hpp"
