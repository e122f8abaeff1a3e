#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cardylab/bits.hpp"
#include "cardylab/hex_domain.hpp"
#include "cardylab/loops.hpp"

namespace cardylab {

/// Double cover of a domain ramified at a set of mid-edges, represented by a
/// deterministic cut: a half-edge set whose odd-adjacency set is the branch
/// points (plus absorbed boundary endpoints when the input parity is odd).
/// A half-edge crosses the sheets iff it lies in the cut.
struct DoubleCover {
  std::shared_ptr<const HexDomain> base;
  std::vector<MidId> branch_points;  // input, sorted
  std::vector<MidId> absorbed;       // boundary endpoints added for odd leftovers
  Bits cut;

  /// branch_points plus absorbed, sorted.
  std::vector<MidId> effective_branch() const;
};

/// Canonical shortest path between two mid-edges in the half-edge graph
/// (deterministic tie-breaks), returned as a half-edge set with odd
/// adjacency exactly at the two endpoints.
Bits half_edge_path(const HexDomain& d, MidId a, MidId b);

/// Builds the canonical cut: branch points are paired consecutively in index
/// order; an odd leftover is cut to the nearest boundary mid-edge, which is
/// recorded in `absorbed`.
DoubleCover build_cover(std::shared_ptr<const HexDomain> base, std::vector<MidId> branch_points);

/// Spinor coloring: sheet-1 colors of the base faces and of the outer
/// region; the sheet-2 preimages carry the opposite colors by construction.
struct SpinorColoring {
  Bits base_bits;
  bool outer_blue = false;

  SpinorColoring complement() const {
    SpinorColoring s{base_bits, !outer_blue};
    for (std::size_t i = 0; i < s.base_bits.size(); ++i) s.base_bits.flip(i);
    return s;
  }
};

/// Half-edge e belongs to the result iff the sheet colors on its two sides
/// differ, i.e. base-color difference XOR cut-crossing. The disorder set is
/// the cover's effective branch set; complementary spinor colorings map to
/// the same configuration.
LoopConfig spinor_to_loops(const DoubleCover& cover, const SpinorColoring& s);

struct SpinorCountReport {
  std::uint64_t spinor_colorings = 0;  // 2^(#faces + 1)
  std::uint64_t distinct_configs = 0;  // must be 2^#faces
  bool boundary_ok = false;            // every config has disorder set == branch set
  bool two_to_one = false;             // every config hit exactly twice
  bool pass() const;
};

/// Enumerates all spinor colorings and checks the induced configuration set.
SpinorCountReport count_spinor_configs(const DoubleCover& cover, int cap = kDefaultEnumCap);

/// With all branch points on the boundary (even count), the induced
/// configuration set must coincide with the loop-representation enumeration.
bool spinor_matches_loop_enumeration(const DoubleCover& cover, int cap = kDefaultEnumCap);

}  // namespace cardylab
