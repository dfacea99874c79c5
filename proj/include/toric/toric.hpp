#pragma once

// Umbrella header. The library decomposes as:
//   linalg       exact integer/rational vectors, kernels, unimodular inverses
//   lp           exact rational feasibility
//   polytope     hulls, facets, verified polytopes, projections, lattice points
//   charts       per-vertex coordinate atlas and monomial transition maps
//   subtorus     affine subtorus data and its defining binomials per chart
//   smoothness   stratumwise Jacobian-rank classification with exact witnesses
//   moment       fixed-point combinatorics and the projected moment polytope
//   scene/report/figure   file formats, serialization, SVG output

#include "toric/charts.hpp"
#include "toric/errors.hpp"
#include "toric/figure.hpp"
#include "toric/linalg.hpp"
#include "toric/lp.hpp"
#include "toric/moment.hpp"
#include "toric/numeric.hpp"
#include "toric/polytope.hpp"
#include "toric/report.hpp"
#include "toric/scene.hpp"
#include "toric/smoothness.hpp"
#include "toric/subtorus.hpp"
