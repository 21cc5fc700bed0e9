#pragma once

#include "arlat/heights.hpp"
#include "arlat/lattice.hpp"
#include "arlat/rng.hpp"
#include "arlat/schemes.hpp"

namespace arlat {

// Seeded instance families used by the batch checkers and the acceptance
// runs. All deterministic in the stream.

ZVec random_primitive_point(int t, int coord_range, SplitStream& rng);

// distinct reduced points
SchemeSpec random_point_scheme(int t, int max_points, int coord_range, SplitStream& rng);

// reduced points with random orders <= max_order
SchemeSpec random_fat_point_scheme(int t, int max_points, int max_order, int coord_range,
                                   SplitStream& rng);

// points plus one random primitive hypersurface of degree <= max_degree
SchemeSpec random_mixed_scheme(int t, int max_points, int max_degree, int coord_range,
                               SplitStream& rng);

HomogeneousForm random_integral_form(int t, int d, int coeff_range, SplitStream& rng);

// saturation of random integer vectors; identity metric
MetrizedLattice random_saturated_lattice(int rank, int ambient, int entry_range,
                                         SplitStream& rng);

// pair of distinct primitive linear forms in P^2 together with their
// intersection point (primitive)
struct LinearBezoutInstance {
    HomogeneousForm f{2, 1};
    HomogeneousForm g{2, 1};
    ZVec intersection;
};
LinearBezoutInstance random_linear_bezout_instance(int coord_range, SplitStream& rng);

// split squarefree binary form with rational roots of bounded height
struct SplitFormInstance {
    HomogeneousForm f{1, 0};
    std::vector<ZVec> roots;
};
SplitFormInstance random_split_binary_form(int nroots, int coord_range, SplitStream& rng);

}  // namespace arlat
