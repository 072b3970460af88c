#pragma once

#include <vector>

#include "limitcones/limitmat.hpp"
#include "limitcones/partitions.hpp"
#include "limitcones/polycone.hpp"

namespace limitcones {

// Tropicalized monomial map: one integer exponent row per target partition.
struct TropMap {
    int source_dim = 0;
    std::vector<Partition> targets;
    std::vector<IVec> rows;
};

// trop of the even Hankel pair in R^d: -2z_1+z_2 >= 0 and
// z_k - 2z_{k+1} + z_{k+2} >= 0 for k = 1..d-2. Requires d >= 2.
Cone trop_even_hankel(int d);

// trop of the full Hankel spectrahedron in R^{2d} via all 2x2 principal
// minors with z_0 = 0: z_{2i} + z_{2j} - 2 z_{i+j} >= 0 over 0 <= i < j <= d.
Cone trop_full_hankel(int two_d);

// Exponent-count rows: coordinate j of a row counts parts equal to j
// (halved parts in even mode). Throws when a part exceeds source_dim.
TropMap trop_phi(int source_dim, const std::vector<Partition>& targets, bool even_mode);

// Tropical (max-plus) conical hull: intersection over i of p + V_i with
// V_i = cone{e_j : j != i} + line(1,...,1), the sector of vectors whose
// minimum sits at coordinate i.
Cone tropical_conical_hull(const Cone& p, int threads = 1);

// Cone cut out by the 2x2 principal minor inequalities of the tropicalized
// gram: z_ii + z_jj - 2 z_ij >= 0 for nonzero off-diagonal entries.
// Coordinates are the partitions of the gram degree (even partitions when the
// gram has structural zeros or only-even labels), in ascending order.
Cone trop_sos_cone(const SymbolicGram& g, bool even_coordinates);

// Same minors, kept only when all three labels lie in the coordinate list.
Cone trop_sos_cone_restricted(const SymbolicGram& g, const std::vector<Partition>& coords);

struct CompareReport {
    bool equal = false;
    // Facets of the moment cone invalid on the sos cone, paired with violating
    // sos generators.
    std::vector<IVec> witness_facets;
    std::vector<IVec> witness_rays;
};

// Verifies moment is contained in sos (throws otherwise), then reports
// equality or every separating facet.
CompareReport compare_cones(const Cone& moment, const Cone& sos);

// Full moment-side pipeline: trop of the Hankel set, tropicalized monomial
// map, then the tropical conical hull, with both representations attached.
Cone trop_moment_cone(int two_d, bool even, int threads = 1);

// SOS side from the partial symmetrization matrix of the full term list.
Cone trop_sos_pipeline(int two_d, bool even);

// Partitions of two_d in which every odd part occurs an even number of times.
std::vector<Partition> non_odd_partitions(int two_d);

// Degree-restricted pipeline over the non-odd coordinates.
Cone trop_moment_restricted(int two_d, int threads = 1);
Cone trop_sos_restricted(int two_d);

std::string facets_to_json(const Cone& c, const std::vector<Partition>& coords);
std::string compare_to_json(const CompareReport& r, const std::vector<Partition>& coords);

}  // namespace limitcones
