#pragma once

#include <cstdint>
#include <vector>

#include "cardylab/bits.hpp"
#include "cardylab/hex_domain.hpp"
#include "cardylab/rng.hpp"
#include "cardylab/stats.hpp"

namespace cardylab {

/// Face two-coloring, one bit per face id (1 = blue, 0 = yellow). Operations
/// that convert colorings to loop configurations fix the outer-boundary
/// convention: blue along the arcs u1->u2 and u3->u4, yellow elsewhere.
struct Coloring {
  Bits bits;
  bool blue(FaceId f) const { return bits.test(static_cast<std::size_t>(f)); }
};

struct CrossingEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::uint64_t seed = 0;
  double wall_time_s = 0;
};

/// Each face independently blue with probability 1/2.
Coloring sample_coloring(const HexDomain& d, CounterRng& rng);

/// True iff a path of adjacent blue faces joins a face on the boundary arc
/// u1->u2 to a face on the arc u3->u4 (arcs include their endpoint
/// mid-edges). Requires exactly 4 marks.
bool crosses(const MarkedDomain& md, const Coloring& c);

/// Reusable union-find workspace for crossing tests.
class CrossingTester {
 public:
  explicit CrossingTester(const MarkedDomain& md);
  CrossingTester(const HexDomain& d, const std::vector<FaceId>& src, const std::vector<FaceId>& dst);
  bool operator()(const Coloring& c);

 private:
  const HexDomain& d_;
  std::vector<char> on_src_, on_dst_;
  std::vector<std::int32_t> parent_;
  std::vector<std::int32_t> size_;
};

/// Monte Carlo crossing probability over N independent samples; sample i is
/// drawn from a counter generator keyed by (seed, i), so results are
/// bit-identical for any worker count.
CrossingEstimate crossing_probability_mc(const MarkedDomain& md, std::uint64_t trials,
                                         std::uint64_t seed, int workers = 0);

/// Annulus crossing: blue path between the faces meeting the circle of
/// radius r and those meeting the circle of radius R, inside the lattice box
/// of half-width R + 2*mesh. r == R returns probability 1 by convention.
CrossingEstimate annulus_crossing_mc(double r, double R, double mesh, std::uint64_t trials,
                                     std::uint64_t seed, int workers = 0);

/// Effective worker count: explicit argument, else CARDYLAB_WORKERS, else
/// hardware concurrency.
int effective_workers(int requested);

}  // namespace cardylab
