#ifndef BMT_FAMILIES_HPP
#define BMT_FAMILIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "bmt/matroid.hpp"

namespace bmt::families {

// Cycle matroid of a loopless multigraph. Vertices are 0-based; the
// incidence row of the highest-numbered vertex is dropped. Edge labels are
// supplied by the caller (parallel edges get distinct labels).
BinaryMatroid graphic(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const std::vector<std::string>& labels);
BinaryMatroid graphic(std::size_t num_vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Labeling conventions (see README):
//   wheel(n):    spokes x1..xn, rim y1..yn; {xi, yi, x(i+1)} are triangles.
//   m_n(n):      wheel(n) plus gamma whose fundamental circuit over the
//                spoke basis is all spokes plus gamma.
//   biwheel(n):  rim r1..rn (vi v(i+1)), hub spokes u1..un (u vi) and
//                w1..wn (w vi); the graph G_{n+2}.
//   biwheel_plus(n): biwheel(n) plus hub edge z.
//   triangular_mobius(r): Delta_r; biwheel_plus(r-1) with rim edge
//                r_{r-1} (v_{r-1} v_1 wrap) removed and new element q on
//                the line of w_{r-1} and u1.
//   cubic_ladder(n, false):  circular ladder, rims r1..rn / s1..sn,
//                rungs t1..tn.
//   cubic_ladder(n, true):   Moebius ladder on 2n vertices, cycle e1..e2n,
//                chords f1..fn.
//   quartic_ladder(r, false): square of an even cycle C_{2r}; edges
//                e0..e{2r-1} (distance 1) and f0..f{2r-1} (distance 2).
//   quartic_ladder(r, true):  square of an odd cycle C_{2r+1}.
//   terrahawk(): cube (top t1..t4, bottom b1..b4, verticals p1..p4) plus
//                apex edges a1..a4 to the top face.

BinaryMatroid wheel(std::size_t n);
BinaryMatroid m_n(std::size_t n);
BinaryMatroid biwheel(std::size_t n);
BinaryMatroid biwheel_plus(std::size_t n);
BinaryMatroid triangular_mobius(std::size_t r);          // Delta_r
BinaryMatroid triangular_mobius_no_z(std::size_t r);     // Delta_r \ z
BinaryMatroid cubic_ladder(std::size_t n, bool mobius);
BinaryMatroid quartic_ladder(std::size_t rungs, bool mobius);
BinaryMatroid terrahawk();

BinaryMatroid fano();       // F_7: the seven nonzero GF(2)^3 columns
BinaryMatroid k4();         // M(K_4)
BinaryMatroid k5();         // M(K_5)
BinaryMatroid k33();        // M(K_{3,3})

// The alternately-spoke-deleted minor of biwheel(n): walking the rim,
// delete the u-spoke at odd rim vertices and the w-spoke at even ones.
// n must be even for the alternation to close up.
BinaryMatroid biwheel_alternating_minor(std::size_t n);

}  // namespace bmt::families

#endif
