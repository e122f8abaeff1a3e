#include "cardylab/loops.hpp"

#include <algorithm>
#include <unordered_map>

#include "cardylab/stats.hpp"

namespace cardylab {

void half_edge_boundary(const HexDomain& d, const Bits& xi, std::vector<MidId>& odd_mids,
                        std::vector<VertexId>& odd_vertices) {
  odd_mids.clear();
  odd_vertices.clear();
  const auto ne = static_cast<EdgeId>(d.num_edges());
  std::vector<char> vdeg(d.num_vertices(), 0);
  for (EdgeId e = 0; e < ne; ++e) {
    bool a = xi.test(static_cast<std::size_t>(2 * e));
    bool b = xi.test(static_cast<std::size_t>(2 * e + 1));
    if (a != b) odd_mids.push_back(e);
    if (a) vdeg[d.he_vertex(2 * e)] ^= 1;
    if (b) vdeg[d.he_vertex(2 * e + 1)] ^= 1;
  }
  for (VertexId v = 0; v < static_cast<VertexId>(d.num_vertices()); ++v)
    if (vdeg[v]) odd_vertices.push_back(v);
}

LoopConfig make_loop_config(const HexDomain& d, Bits xi) {
  LoopConfig cfg;
  cfg.half_edges = std::move(xi);
  half_edge_boundary(d, cfg.half_edges, cfg.odd_mids, cfg.odd_vertices);
  return cfg;
}

LoopConfig xor_configs(const HexDomain& d, const LoopConfig& a, const LoopConfig& b) {
  return make_loop_config(d, a.half_edges ^ b.half_edges);
}

Bits difference_half_edges(const HexDomain& d, const Coloring& c) {
  Bits out = d.empty_he_set();
  for (FaceId f = 0; f < static_cast<FaceId>(d.num_faces()); ++f)
    if (c.blue(f)) out ^= d.face_he_mask(f);
  return out;
}

Bits reference_config(const MarkedDomain& md) {
  const auto& d = md.domain();
  const auto k = md.num_marks();
  if (k % 2 != 0)
    throw Error(ErrorKind::WrongMarkCount, "reference configuration needs an even mark count");
  Bits out = d.empty_he_set();
  if (k == 0) return out;
  const auto& bhe = d.boundary_half_edges();
  const auto nb = static_cast<std::int64_t>(bhe.size());
  for (std::size_t j = 0; j + 1 < k + 1; j += 2) {
    // run from u_{j+1} to u_{j+2} (1-based): half-edge slots 2p+1 .. 2p' cyclic
    std::int64_t p = d.boundary_pos(md.marks()[j]);
    std::int64_t p2 = d.boundary_pos(md.marks()[(j + 1) % k]);
    for (std::int64_t s = 2 * p + 1;; s = (s + 1) % nb) {
      out.set(static_cast<std::size_t>(bhe[static_cast<std::size_t>(s % nb)]));
      if (s % nb == (2 * p2) % nb) break;
    }
  }
  return out;
}

LoopConfig coloring_to_loops(const MarkedDomain& md, const Coloring& c) {
  if (md.num_marks() != 4)
    throw Error(ErrorKind::WrongMarkCount, "coloring_to_loops needs 4 marks");
  Bits xi = reference_config(md);
  xi ^= difference_half_edges(md.domain(), c);
  return make_loop_config(md.domain(), std::move(xi));
}

MidId trace_to_mark(const HexDomain& d, const Bits& xi, MidId start, const std::vector<char>& is_mark) {
  HeId h;
  {
    bool a = xi.test(static_cast<std::size_t>(2 * start));
    bool b = xi.test(static_cast<std::size_t>(2 * start + 1));
    if (a == b) throw Error(ErrorKind::BoundaryMismatch, "start mid-edge is not a disorder");
    h = a ? 2 * start : 2 * start + 1;
  }
  const std::size_t limit = d.num_half_edges() + 1;
  for (std::size_t steps = 0; steps < limit; ++steps) {
    VertexId v = d.he_vertex(h);
    const auto& slots = d.vertex_half_edges(v);
    HeId h2 = -1;
    for (HeId g : slots)
      if (g >= 0 && g != h && xi.test(static_cast<std::size_t>(g))) {
        h2 = g;
        break;
      }
    if (h2 < 0) throw Error(ErrorKind::BoundaryMismatch, "dangling interface at a vertex");
    MidId m = HexDomain::he_mid(h2);
    if (is_mark[static_cast<std::size_t>(m)]) return m;
    h = HexDomain::he_mate(h2);
  }
  throw Error(ErrorKind::BoundaryMismatch, "interface trace did not terminate");
}

LinkPattern link_pattern(const HexDomain& d, const Bits& xi, const std::vector<MidId>& marks) {
  std::vector<MidId> om;
  std::vector<VertexId> ov;
  half_edge_boundary(d, xi, om, ov);
  std::vector<MidId> sorted = marks;
  std::sort(sorted.begin(), sorted.end());
  if (!ov.empty() || om != sorted)
    throw Error(ErrorKind::BoundaryMismatch, "disorder set differs from the marks");
  std::vector<char> is_mark(d.num_edges(), 0);
  for (MidId m : marks) is_mark[static_cast<std::size_t>(m)] = 1;
  LinkPattern lp;
  std::vector<char> done(d.num_edges(), 0);
  for (MidId u : marks) {
    if (done[static_cast<std::size_t>(u)]) continue;
    MidId w = trace_to_mark(d, xi, u, is_mark);
    done[static_cast<std::size_t>(u)] = done[static_cast<std::size_t>(w)] = 1;
    lp.pairs.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(lp.pairs.begin(), lp.pairs.end());
  return lp;
}

namespace {

void check_cap(const HexDomain& d, int cap) {
  if (static_cast<int>(d.num_faces()) > cap)
    throw Error(ErrorKind::TooLarge, "domain exceeds the enumeration cap of " + std::to_string(cap) +
                                         " faces");
}

}  // namespace

void for_each_loop_config(const MarkedDomain& md, const std::function<void(const Bits&)>& fn, int cap) {
  const auto& d = md.domain();
  check_cap(d, cap);
  Bits xi = reference_config(md);
  fn(xi);
  const std::uint64_t total = std::uint64_t(1) << d.num_faces();
  for (std::uint64_t i = 1; i < total; ++i) {
    int f = std::countr_zero(i);  // Gray-code neighbor: flip face f
    xi ^= d.face_he_mask(static_cast<FaceId>(f));
    fn(xi);
  }
}

std::vector<LoopConfig> enumerate_loop_configs(const MarkedDomain& md, int cap) {
  std::vector<LoopConfig> out;
  out.reserve(std::size_t(1) << md.domain().num_faces());
  for_each_loop_config(
      md, [&](const Bits& xi) { out.push_back(make_loop_config(md.domain(), xi)); }, cap);
  return out;
}

LoopConfig sample_loop_config(const MarkedDomain& md, CounterRng& rng) {
  Bits xi = reference_config(md);
  Coloring c = sample_coloring(md.domain(), rng);
  xi ^= difference_half_edges(md.domain(), c);
  return make_loop_config(md.domain(), std::move(xi));
}

CrossingEquivalenceReport crossing_equivalence_check(const MarkedDomain& md, int cap) {
  const auto& d = md.domain();
  if (md.num_marks() != 4) throw Error(ErrorKind::WrongMarkCount, "needs 4 marks");
  check_cap(d, cap);
  CrossingEquivalenceReport rep;
  rep.total = std::uint64_t(1) << d.num_faces();

  std::vector<char> is_mark(d.num_edges(), 0);
  for (MidId m : md.marks()) is_mark[static_cast<std::size_t>(m)] = 1;
  const MidId u1 = md.mark(1), u4 = md.mark(4);

  CrossingTester tester(md);
  Coloring c{Bits(d.num_faces())};
  Bits xi = reference_config(md);
  for (std::uint64_t i = 0; i < rep.total; ++i) {
    if (i) {
      int f = std::countr_zero(i);
      c.bits.flip(static_cast<std::size_t>(f));
      xi ^= d.face_he_mask(static_cast<FaceId>(f));
    }
    bool cross = tester(c);
    bool pattern = trace_to_mark(d, xi, u1, is_mark) == u4;
    rep.crossing_count += cross;
    rep.pattern_count += pattern;
    rep.mismatches += cross != pattern;
  }
  return rep;
}

UniformityReport loop_uniformity_check(const MarkedDomain& md, std::uint64_t trials, std::uint64_t seed,
                                       int cap) {
  const auto& d = md.domain();
  check_cap(d, std::min(cap, 20));  // counts table must fit comfortably
  UniformityReport rep;
  rep.cells = std::uint64_t(1) << d.num_faces();
  rep.trials = trials;
  std::unordered_map<Bits, std::uint64_t, BitsHash> index;
  index.reserve(rep.cells * 2);
  std::uint64_t next = 0;
  for_each_loop_config(md, [&](const Bits& xi) { index.emplace(xi, next++); }, cap);
  if (next != rep.cells) throw Error(ErrorKind::BoundaryMismatch, "enumeration produced duplicates");
  std::vector<std::uint64_t> counts(rep.cells, 0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    CounterRng rng(seed, i);
    LoopConfig cfg = sample_loop_config(md, rng);
    ++counts[index.at(cfg.half_edges)];
  }
  const double expect = static_cast<double>(trials) / static_cast<double>(rep.cells);
  double chi2 = 0;
  for (auto cnt : counts) {
    double dlt = static_cast<double>(cnt) - expect;
    chi2 += dlt * dlt / expect;
  }
  rep.chi2 = chi2;
  rep.threshold99 = chi2_quantile99(static_cast<int>(rep.cells) - 1);
  rep.pass = chi2 <= rep.threshold99;
  return rep;
}

}  // namespace cardylab
