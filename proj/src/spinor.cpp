#include "cardylab/spinor.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace cardylab {

std::vector<MidId> DoubleCover::effective_branch() const {
  std::vector<MidId> out = branch_points;
  out.insert(out.end(), absorbed.begin(), absorbed.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Node encoding for the half-edge graph: mids are [0, E), vertices E + v.
struct PathFinder {
  const HexDomain& d;
  std::vector<std::int32_t> prev_he;  // arriving half-edge per node, -1 unvisited

  explicit PathFinder(const HexDomain& dom)
      : d(dom), prev_he(dom.num_edges() + dom.num_vertices(), -1) {}

  std::int32_t mid_node(MidId m) const { return m; }
  std::int32_t vertex_node(VertexId v) const { return static_cast<std::int32_t>(d.num_edges()) + v; }

  /// BFS from mid a; stops at `goal` mid, or at the first boundary mid != a
  /// when goal < 0. Returns the stop mid.
  MidId search(MidId a, MidId goal) {
    std::fill(prev_he.begin(), prev_he.end(), -1);
    if (goal == a) throw Error(ErrorKind::InvalidBranchSet, "degenerate cut endpoint");
    std::deque<std::int32_t> q;
    prev_he[mid_node(a)] = -2;  // root
    q.push_back(mid_node(a));
    while (!q.empty()) {
      std::int32_t n = q.front();
      q.pop_front();
      if (n < static_cast<std::int32_t>(d.num_edges())) {
        MidId m = n;
        if (m != a && (m == goal || (goal < 0 && d.is_boundary_mid(m)))) return m;
        for (HeId h : {2 * m, 2 * m + 1}) {
          std::int32_t vn = vertex_node(d.he_vertex(h));
          if (prev_he[vn] == -1) {
            prev_he[vn] = h;
            q.push_back(vn);
          }
        }
      } else {
        VertexId v = n - static_cast<std::int32_t>(d.num_edges());
        for (HeId h : d.vertex_half_edges(v)) {
          if (h < 0) continue;
          std::int32_t mn = mid_node(HexDomain::he_mid(h));
          if (prev_he[mn] == -1) {
            prev_he[mn] = h;
            q.push_back(mn);
          }
        }
      }
    }
    throw Error(ErrorKind::InvalidBranchSet, "no path to the requested endpoint");
  }

  Bits path_from(MidId stop) const {
    Bits out = d.empty_he_set();
    std::int32_t n = mid_node(stop);
    while (prev_he[n] != -2) {
      HeId h = prev_he[n];
      out.flip(static_cast<std::size_t>(h));
      // step to the node on the other side of h
      if (n < static_cast<std::int32_t>(d.num_edges()))
        n = vertex_node(d.he_vertex(h));
      else
        n = mid_node(HexDomain::he_mid(h));
    }
    return out;
  }
};

}  // namespace

Bits half_edge_path(const HexDomain& d, MidId a, MidId b) {
  PathFinder pf(d);
  MidId stop = pf.search(a, b);
  return pf.path_from(stop);
}

DoubleCover build_cover(std::shared_ptr<const HexDomain> base, std::vector<MidId> branch_points) {
  const HexDomain& d = *base;
  std::sort(branch_points.begin(), branch_points.end());
  if (std::adjacent_find(branch_points.begin(), branch_points.end()) != branch_points.end())
    throw Error(ErrorKind::InvalidBranchSet, "duplicate branch points");
  for (MidId m : branch_points)
    if (m < 0 || m >= static_cast<MidId>(d.num_edges()))
      throw Error(ErrorKind::InvalidBranchSet, "branch point is not a mid-edge of the domain");

  DoubleCover cover;
  cover.base = std::move(base);
  cover.branch_points = branch_points;
  cover.cut = d.empty_he_set();

  PathFinder pf(d);
  std::size_t i = 0;
  for (; i + 1 < branch_points.size(); i += 2) {
    MidId stop = pf.search(branch_points[i], branch_points[i + 1]);
    cover.cut ^= pf.path_from(stop);
  }
  if (i < branch_points.size()) {
    MidId u = branch_points[i];
    MidId stop = pf.search(u, -1);
    cover.cut ^= pf.path_from(stop);
    cover.absorbed.push_back(stop);
  }
  return cover;
}

LoopConfig spinor_to_loops(const DoubleCover& cover, const SpinorColoring& s) {
  const HexDomain& d = *cover.base;
  Bits xi = difference_half_edges(d, Coloring{s.base_bits});
  if (s.outer_blue) xi ^= d.boundary_he_mask();
  xi ^= cover.cut;
  return make_loop_config(d, std::move(xi));
}

bool SpinorCountReport::pass() const {
  return boundary_ok && two_to_one && spinor_colorings == 2 * distinct_configs;
}

SpinorCountReport count_spinor_configs(const DoubleCover& cover, int cap) {
  const HexDomain& d = *cover.base;
  const auto nf = d.num_faces();
  if (static_cast<int>(nf) > cap)
    throw Error(ErrorKind::TooLarge, "domain exceeds the enumeration cap");
  SpinorCountReport rep;
  rep.spinor_colorings = std::uint64_t(1) << (nf + 1);
  rep.boundary_ok = true;

  auto branch = cover.effective_branch();
  std::unordered_map<Bits, std::uint32_t, BitsHash> seen;
  std::vector<MidId> om;
  std::vector<VertexId> ov;
  for (int outer = 0; outer < 2; ++outer) {
    Bits xi = d.empty_he_set();
    if (outer) xi ^= d.boundary_he_mask();
    xi ^= cover.cut;
    const std::uint64_t total = std::uint64_t(1) << nf;
    for (std::uint64_t iidx = 0; iidx < total; ++iidx) {
      if (iidx) xi ^= d.face_he_mask(static_cast<FaceId>(std::countr_zero(iidx)));
      ++seen[xi];
      half_edge_boundary(d, xi, om, ov);
      if (!ov.empty() || om != branch) rep.boundary_ok = false;
    }
  }
  rep.distinct_configs = seen.size();
  rep.two_to_one = std::all_of(seen.begin(), seen.end(), [](auto& kv) { return kv.second == 2; });
  return rep;
}

bool spinor_matches_loop_enumeration(const DoubleCover& cover, int cap) {
  const HexDomain& d = *cover.base;
  if (!cover.absorbed.empty()) return false;
  for (MidId m : cover.branch_points)
    if (!d.is_boundary_mid(m)) return false;

  std::unordered_set<Bits, BitsHash> from_spinor;
  {
    const std::uint64_t total = std::uint64_t(1) << d.num_faces();
    Bits xi = cover.cut;
    for (std::uint64_t i = 0; i < total; ++i) {
      if (i) xi ^= d.face_he_mask(static_cast<FaceId>(std::countr_zero(i)));
      from_spinor.insert(xi);
    }
  }
  MarkedDomain md(cover.base, cover.branch_points);
  bool equal = true;
  std::size_t n = 0;
  for_each_loop_config(
      md,
      [&](const Bits& xi) {
        ++n;
        if (!from_spinor.count(xi)) equal = false;
      },
      cap);
  return equal && n == from_spinor.size();
}

}  // namespace cardylab
