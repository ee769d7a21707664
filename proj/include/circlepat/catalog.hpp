#pragma once

// Standard closed cell complexes used by the fixtures, tests and tools.

#include "circlepat/complex.hpp"

namespace circlepat::catalog {

/// n x n square grid on the torus: faces f_i_j, vertices v_i_j, vertical edges
/// ev_i_j (from v_i_j to v_i_j+1) and horizontal edges eh_i_j (v_i_j to v_i+1_j).
CellComplex torus_grid(int n);

/// Genus-2 surface from the octagon a b a^-1 b^-1 c d c^-1 d^-1 coned to its
/// centre: eight triangles t_k, spokes s_k, boundary edges a..d, vertices c, p.
CellComplex genus2_octagon_fan();

/// The bare octagon: one face, four loop edges, one vertex.
CellComplex genus2_octagon();

/// Uniform D and Phi on a complex.
PatternProblem uniform_problem(CellComplex complex, Geometry g, double intersection, double cone);

}  // namespace circlepat::catalog
