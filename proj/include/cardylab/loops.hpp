#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cardylab/bits.hpp"
#include "cardylab/hex_domain.hpp"
#include "cardylab/percolation.hpp"

namespace cardylab {

inline constexpr int kDefaultEnumCap = 24;

/// A set of half-edges together with its disorder set: the vertices and
/// mid-edges adjacent to an odd number of its half-edges.
struct LoopConfig {
  Bits half_edges;
  std::vector<MidId> odd_mids;        // sorted
  std::vector<VertexId> odd_vertices; // sorted; empty for all configs we build
};

/// Recomputes the disorder set of a half-edge set.
void half_edge_boundary(const HexDomain& d, const Bits& xi, std::vector<MidId>& odd_mids,
                        std::vector<VertexId>& odd_vertices);

LoopConfig make_loop_config(const HexDomain& d, Bits xi);

/// Symmetric difference; two configs with equal disorder sets XOR to a
/// disorder-free union of loops.
LoopConfig xor_configs(const HexDomain& d, const LoopConfig& a, const LoopConfig& b);

/// Color-difference half-edges of a coloring against an all-yellow outside:
/// the XOR of the hexagon boundaries of the blue faces.
Bits difference_half_edges(const HexDomain& d, const Coloring& c);

/// Reference configuration for an even number of boundary marks: the
/// boundary half-edges along the arcs u1->u2, u3->u4, ... Its disorder set
/// is exactly the marks.
Bits reference_config(const MarkedDomain& md);

/// The loop configuration of a coloring under the boundary convention (blue
/// outside along u1->u2 and u3->u4). Requires exactly 4 marks.
LoopConfig coloring_to_loops(const MarkedDomain& md, const Coloring& c);

/// Follows the interface from a disorder mid-edge to its linked mark.
/// is_mark must flag exactly the disorder mid-edges of xi.
MidId trace_to_mark(const HexDomain& d, const Bits& xi, MidId start, const std::vector<char>& is_mark);

/// Perfect matching of marked points induced by the interface part.
struct LinkPattern {
  std::vector<std::pair<MidId, MidId>> pairs;  // (min,max), sorted by first
  bool links(MidId a, MidId b) const {
    for (auto& p : pairs)
      if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) return true;
    return false;
  }
};

/// Traces the interface part of xi; throws BoundaryMismatch unless the
/// disorder set of xi is exactly `marks` (and contains no vertices).
LinkPattern link_pattern(const HexDomain& d, const Bits& xi, const std::vector<MidId>& marks);

/// Streams all 2^#faces configurations with disorders at the marks (which
/// must number 0 or be even), as xi0 XOR color-difference sets in Gray-code
/// order. Throws TooLarge above the cap.
void for_each_loop_config(const MarkedDomain& md, const std::function<void(const Bits&)>& fn,
                          int cap = kDefaultEnumCap);

std::vector<LoopConfig> enumerate_loop_configs(const MarkedDomain& md, int cap = kDefaultEnumCap);

/// Uniform sample from the configurations with disorders at the marks.
LoopConfig sample_loop_config(const MarkedDomain& md, CounterRng& rng);

struct CrossingEquivalenceReport {
  std::uint64_t total = 0;           // 2^#faces
  std::uint64_t crossing_count = 0;  // colorings with a blue arc crossing
  std::uint64_t pattern_count = 0;   // configs with link pattern u1-u4, u2-u3
  std::uint64_t mismatches = 0;      // configs where the two events differ
  bool per_config_equal() const { return mismatches == 0; }
};

/// Exhaustive per-configuration check of the crossing/link-pattern
/// correspondence on a 4-marked domain.
CrossingEquivalenceReport crossing_equivalence_check(const MarkedDomain& md, int cap = kDefaultEnumCap);

struct UniformityReport {
  std::uint64_t cells = 0;
  std::uint64_t trials = 0;
  double chi2 = 0;
  double threshold99 = 0;
  bool pass = false;
};

/// Chi-square test of sample_loop_config against the enumeration-uniform
/// distribution.
UniformityReport loop_uniformity_check(const MarkedDomain& md, std::uint64_t trials, std::uint64_t seed,
                                       int cap = kDefaultEnumCap);

}  // namespace cardylab
