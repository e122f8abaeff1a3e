#include "cardylab/hex_domain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace cardylab {

namespace {

std::int64_t face_key(FaceCoord f) {
  return (static_cast<std::int64_t>(f.q) << 32) ^ static_cast<std::uint32_t>(f.r);
}

std::int64_t cross2(QPoint a, QPoint b, QPoint c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// Angle rank of the mid-edge direction seen from a vertex; the six possible
// quarter-unit offsets have angles 30,90,150,210,270,330 degrees.
int mid_angle_rank(QPoint v, QPoint m) {
  std::int64_t dx = m.x - v.x, dy = m.y - v.y;
  if (dx == 1 && dy == 1) return 0;    // 30
  if (dx == 0 && dy == 2) return 1;    // 90
  if (dx == -1 && dy == 1) return 2;   // 150
  if (dx == -1 && dy == -1) return 3;  // 210
  if (dx == 0 && dy == -2) return 4;   // 270
  if (dx == 1 && dy == -1) return 5;   // 330
  std::abort();                        // not an incident mid-edge
}

}  // namespace

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::EmptyFaceSet: return "EmptyFaceSet";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotSimplyConnected: return "NotSimplyConnected";
    case ErrorKind::MeshTooCoarse: return "MeshTooCoarse";
    case ErrorKind::MarksCollide: return "MarksCollide";
    case ErrorKind::SameMark: return "SameMark";
    case ErrorKind::BoundaryVertex: return "BoundaryVertex";
    case ErrorKind::WrongMarkCount: return "WrongMarkCount";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::InvalidBranchSet: return "InvalidBranchSet";
    case ErrorKind::MarkAtVertex: return "MarkAtVertex";
    case ErrorKind::NotAContour: return "NotAContour";
    case ErrorKind::MarkOnContour: return "MarkOnContour";
    case ErrorKind::DegenerateAnnulus: return "DegenerateAnnulus";
    case ErrorKind::NonPositiveAspect: return "NonPositiveAspect";
    case ErrorKind::NotDefined: return "NotDefined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IoError: return "IoError";
  }
  return "Error";
}

FaceId HexDomain::face_id(FaceCoord f) const {
  auto it = face_index_.find(face_key(f));
  return it == face_index_.end() ? -1 : it->second;
}

std::array<MidId, 3> HexDomain::vertex_midedges(VertexId v) const {
  const auto& hes = vertex_he_[v];
  if (hes[2] < 0) throw Error(ErrorKind::BoundaryVertex, "vertex has only two incident half-edges");
  std::array<MidId, 3> mids = {he_mid(hes[0]), he_mid(hes[1]), he_mid(hes[2])};
  QPoint vp = vertices_[v];
  std::sort(mids.begin(), mids.end(), [&](MidId a, MidId b) {
    return mid_angle_rank(vp, edges_[a].mid) < mid_angle_rank(vp, edges_[b].mid);
  });
  return mids;
}

HexDomain build_domain(const std::vector<FaceCoord>& faces_in, double mesh) {
  if (faces_in.empty()) throw Error(ErrorKind::EmptyFaceSet, "no faces");
  if (!(mesh > 0)) throw Error(ErrorKind::InvalidArgument, "mesh must be positive");

  HexDomain d;
  d.mesh_ = mesh;
  d.faces_ = faces_in;
  std::sort(d.faces_.begin(), d.faces_.end());
  d.faces_.erase(std::unique(d.faces_.begin(), d.faces_.end()), d.faces_.end());
  const auto nf = static_cast<FaceId>(d.faces_.size());
  for (FaceId i = 0; i < nf; ++i) d.face_index_[face_key(d.faces_[i])] = i;

  // Face adjacency and connectivity.
  d.face_nbr_.assign(nf, {-1, -1, -1, -1, -1, -1});
  for (FaceId i = 0; i < nf; ++i)
    for (int k = 0; k < 6; ++k)
      d.face_nbr_[i][k] =
          d.face_id({d.faces_[i].q + kNeighborOffsets[k].q, d.faces_[i].r + kNeighborOffsets[k].r});

  {
    std::vector<char> seen(nf, 0);
    std::vector<FaceId> stack = {0};
    seen[0] = 1;
    std::size_t n = 1;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (FaceId g : d.face_nbr_[f])
        if (g >= 0 && !seen[g]) {
          seen[g] = 1;
          ++n;
          stack.push_back(g);
        }
    }
    if (n != static_cast<std::size_t>(nf)) throw Error(ErrorKind::NotConnected, "face set is not connected");
  }

  // Simple connectivity: the complement within an enlarged bounding box must
  // be a single component reachable from the box border.
  {
    std::int32_t qlo = d.faces_[0].q, qhi = d.faces_[0].q, rlo = d.faces_[0].r, rhi = d.faces_[0].r;
    for (auto f : d.faces_) {
      qlo = std::min(qlo, f.q); qhi = std::max(qhi, f.q);
      rlo = std::min(rlo, f.r); rhi = std::max(rhi, f.r);
    }
    --qlo; ++qhi; --rlo; ++rhi;
    const std::int64_t W = qhi - qlo + 1, H = rhi - rlo + 1;
    auto cell = [&](std::int32_t q, std::int32_t r) { return (q - qlo) * H + (r - rlo); };
    std::vector<char> state(static_cast<std::size_t>(W * H), 0);  // 1 = domain, 2 = outside-seen
    for (auto f : d.faces_) state[cell(f.q, f.r)] = 1;
    std::size_t comp_total = static_cast<std::size_t>(W * H) - d.faces_.size();
    std::deque<FaceCoord> q;
    q.push_back({qlo, rlo});
    state[cell(qlo, rlo)] = 2;
    std::size_t reached = 1;
    while (!q.empty()) {
      auto c = q.front();
      q.pop_front();
      for (auto o : kNeighborOffsets) {
        std::int32_t nq = c.q + o.q, nr = c.r + o.r;
        if (nq < qlo || nq > qhi || nr < rlo || nr > rhi) continue;
        auto& s = state[cell(nq, nr)];
        if (s == 0) {
          s = 2;
          ++reached;
          q.push_back({nq, nr});
        }
      }
    }
    if (reached != comp_total)
      throw Error(ErrorKind::NotSimplyConnected, "face set encloses a hole");
  }

  // Vertices and edges in canonical scan order.
  std::map<QPoint, VertexId> vid;
  std::map<QPoint, EdgeId> eid;
  d.face_edge_.assign(nf, {-1, -1, -1, -1, -1, -1});
  for (FaceId i = 0; i < nf; ++i) {
    QPoint c = face_center_q(d.faces_[i]);
    for (int k = 0; k < 6; ++k) {
      QPoint vp1{c.x + kVertexOffsets[(k + 5) % 6].x, c.y + kVertexOffsets[(k + 5) % 6].y};
      QPoint vp2{c.x + kVertexOffsets[k].x, c.y + kVertexOffsets[k].y};
      QPoint mp{c.x + kMidOffsets[k].x, c.y + kMidOffsets[k].y};
      for (QPoint vp : {vp1, vp2})
        if (!vid.count(vp)) {
          vid.emplace(vp, static_cast<VertexId>(d.vertices_.size()));
          d.vertices_.push_back(vp);
        }
      auto it = eid.find(mp);
      if (it == eid.end()) {
        EdgeId e = static_cast<EdgeId>(d.edges_.size());
        eid.emplace(mp, e);
        HexDomain::Edge edge;
        edge.mid = mp;
        VertexId a = vid[vp1], b = vid[vp2];
        edge.va = std::min(a, b);
        edge.vb = std::max(a, b);
        edge.face_left = i;
        d.edges_.push_back(edge);
        d.face_edge_[i][k] = e;
      } else {
        d.edges_[it->second].face_right = i;
        d.face_edge_[i][k] = it->second;
      }
    }
  }

  const auto ne = static_cast<EdgeId>(d.edges_.size());
  d.he_vertex_.resize(2 * static_cast<std::size_t>(ne));
  d.vertex_he_.assign(d.vertices_.size(), {-1, -1, -1});
  for (EdgeId e = 0; e < ne; ++e) {
    d.he_vertex_[2 * e] = d.edges_[e].va;
    d.he_vertex_[2 * e + 1] = d.edges_[e].vb;
    for (HeId h : {2 * e, 2 * e + 1}) {
      auto& slots = d.vertex_he_[d.he_vertex_[h]];
      int s = 0;
      while (slots[s] >= 0) ++s;
      slots[s] = h;
    }
  }

  // Boundary cycle, counterclockwise (owner face kept on the left).
  {
    std::vector<std::array<EdgeId, 2>> vertex_bedges(d.vertices_.size(), {-1, -1});
    EdgeId start = -1;
    for (EdgeId e = 0; e < ne; ++e)
      if (d.edges_[e].boundary()) {
        if (start < 0) start = e;
        for (VertexId v : {d.edges_[e].va, d.edges_[e].vb}) {
          auto& s = vertex_bedges[v];
          s[s[0] < 0 ? 0 : 1] = e;
        }
      }
    d.bpos_.assign(ne, -1);
    if (start >= 0) {
      auto orient = [&](EdgeId e, VertexId from) -> std::pair<VertexId, VertexId> {
        const auto& ed = d.edges_[e];
        VertexId a = ed.va, b = ed.vb;
        if (from >= 0) return a == from ? std::pair{a, b} : std::pair{b, a};
        QPoint c = face_center_q(d.faces_[ed.face_left]);
        return cross2(d.vertices_[a], d.vertices_[b], c) > 0 ? std::pair{a, b} : std::pair{b, a};
      };
      auto [va, vb] = orient(start, -1);
      EdgeId e = start;
      while (true) {
        d.bpos_[e] = static_cast<std::int32_t>(d.bmids_.size());
        d.bmids_.push_back(e);
        d.bhe_.push_back(d.he_vertex_[2 * e] == va ? 2 * e : 2 * e + 1);
        d.bhe_.push_back(d.he_vertex_[2 * e] == vb ? 2 * e : 2 * e + 1);
        const auto& cand = vertex_bedges[vb];
        EdgeId next = cand[0] == e ? cand[1] : cand[0];
        if (next == start) break;
        auto [na, nb] = orient(next, vb);
        e = next;
        va = na;
        vb = nb;
      }
    }
  }

  d.face_mask_.reserve(nf);
  d.boundary_mask_ = Bits(2 * static_cast<std::size_t>(ne));
  for (FaceId i = 0; i < nf; ++i) {
    Bits m(2 * static_cast<std::size_t>(ne));
    for (EdgeId e : d.face_edge_[i]) {
      m.set(static_cast<std::size_t>(2 * e));
      m.set(static_cast<std::size_t>(2 * e + 1));
    }
    d.face_mask_.push_back(std::move(m));
    d.boundary_mask_ ^= d.face_mask_.back();
  }
  return d;
}

MarkedDomain::MarkedDomain(std::shared_ptr<const HexDomain> domain, std::vector<MidId> marks)
    : domain_(std::move(domain)), marks_(std::move(marks)) {
  const auto& d = *domain_;
  std::set<MidId> distinct(marks_.begin(), marks_.end());
  if (distinct.size() != marks_.size())
    throw Error(ErrorKind::MarksCollide, "duplicate marks");
  int descents = 0;
  for (std::size_t i = 0; i < marks_.size(); ++i) {
    MidId m = marks_[i];
    if (m < 0 || m >= static_cast<MidId>(d.num_edges()) || !d.is_boundary_mid(m))
      throw Error(ErrorKind::InvalidArgument, "mark is not a boundary mid-edge");
    if (marks_.size() > 1) {
      MidId next = marks_[(i + 1) % marks_.size()];
      if (d.boundary_pos(m) > d.boundary_pos(next)) ++descents;
    }
  }
  if (marks_.size() > 1 && descents != 1)
    throw Error(ErrorKind::InvalidArgument, "marks are not in counterclockwise cyclic order");
}

BoundaryArc boundary_arc(const MarkedDomain& md, int j, int j2) {
  const auto k = static_cast<int>(md.num_marks());
  if (k == 0) throw Error(ErrorKind::WrongMarkCount, "domain has no marks");
  if (((j - j2) % k + k) % k == 0) throw Error(ErrorKind::SameMark, "arc endpoints coincide");
  const auto& d = md.domain();
  const auto& bmids = d.boundary_mids();
  const auto B = static_cast<std::int32_t>(bmids.size());
  std::int32_t a = d.boundary_pos(md.mark(j));
  std::int32_t b = d.boundary_pos(md.mark(j2));
  BoundaryArc arc;
  for (std::int32_t i = a;; i = (i + 1) % B) {
    MidId m = bmids[i];
    arc.mids.push_back(m);
    FaceId f = d.edges()[m].face_left;
    if (arc.faces.empty() || arc.faces.back() != f) arc.faces.push_back(f);
    if (i == b) break;
  }
  // Owner faces can repeat non-consecutively on wiggly boundaries.
  std::vector<FaceId> seen;
  std::vector<FaceId> dedup;
  for (FaceId f : arc.faces)
    if (std::find(seen.begin(), seen.end(), f) == seen.end()) {
      seen.push_back(f);
      dedup.push_back(f);
    }
  arc.faces = std::move(dedup);
  return arc;
}

// ---------------------------------------------------------------------------
// Discretization.

namespace {

struct P2 {
  double x, y;
};

double dist2(P2 a, P2 b) {
  double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

double seg_point_dist2(P2 a, P2 b, P2 p) {
  double vx = b.x - a.x, vy = b.y - a.y;
  double t = ((p.x - a.x) * vx + (p.y - a.y) * vy) / (vx * vx + vy * vy);
  t = std::clamp(t, 0.0, 1.0);
  return dist2({a.x + t * vx, a.y + t * vy}, p);
}

int orient_eps(P2 a, P2 b, P2 c, double eps) {
  double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

bool proper_cross(P2 a, P2 b, P2 c, P2 d, double eps) {
  int o1 = orient_eps(a, b, c, eps), o2 = orient_eps(a, b, d, eps);
  int o3 = orient_eps(c, d, a, eps), o4 = orient_eps(c, d, b, eps);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

class PolyTester {
 public:
  PolyTester(const Polygon& poly, double eps) : pts_(), eps_(eps) {
    for (auto& p : poly.pts) pts_.push_back({p[0], p[1]});
  }

  bool contains(P2 p) const {
    const std::size_t n = pts_.size();
    double e2 = eps_ * eps_;
    for (std::size_t i = 0; i < n; ++i)
      if (seg_point_dist2(pts_[i], pts_[(i + 1) % n], p) <= e2) return true;  // on boundary
    bool in = false;
    for (std::size_t i = 0; i < n; ++i) {
      P2 a = pts_[i], b = pts_[(i + 1) % n];
      if ((a.y > p.y) != (b.y > p.y)) {
        double xi = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
        if (xi > p.x) in = !in;
      }
    }
    return in;
  }

  bool hexagon_inside(const std::array<P2, 6>& hex) const {
    for (auto& v : hex)
      if (!contains(v)) return false;
    const std::size_t n = pts_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < 6; ++k)
        if (proper_cross(pts_[i], pts_[(i + 1) % n], hex[k], hex[(k + 1) % 6], eps_ * eps_))
          return false;
    return true;
  }

 private:
  std::vector<P2> pts_;
  double eps_;
};

}  // namespace

MarkedDomain discretize(const Polygon& polygon, const std::vector<std::array<double, 2>>& prime_ends,
                        double mesh) {
  if (polygon.pts.size() < 3) throw Error(ErrorKind::InvalidArgument, "polygon needs >= 3 vertices");
  if (!(mesh > 0)) throw Error(ErrorKind::InvalidArgument, "mesh must be positive");
  const std::size_t n = polygon.pts.size();
  double area2 = 0, diam = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = polygon.pts[i], b = polygon.pts[(i + 1) % n];
    area2 += a[0] * b[1] - a[1] * b[0];
    for (std::size_t j = i + 1; j < n; ++j)
      diam = std::max(diam, dist2({a[0], a[1]}, {polygon.pts[j][0], polygon.pts[j][1]}));
  }
  if (area2 <= 0) throw Error(ErrorKind::InvalidArgument, "polygon must be counterclockwise");
  diam = std::sqrt(diam);
  const double eps = 1e-12 * std::max(diam, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      P2 a{polygon.pts[i][0], polygon.pts[i][1]}, b{polygon.pts[(i + 1) % n][0], polygon.pts[(i + 1) % n][1]};
      P2 c{polygon.pts[j][0], polygon.pts[j][1]}, d{polygon.pts[(j + 1) % n][0], polygon.pts[(j + 1) % n][1]};
      if (proper_cross(a, b, c, d, eps * eps))
        throw Error(ErrorKind::InvalidArgument, "polygon is not simple");
    }

  PolyTester tester(polygon, eps);

  double xlo = polygon.pts[0][0], xhi = xlo, ylo = polygon.pts[0][1], yhi = ylo;
  for (auto& p : polygon.pts) {
    xlo = std::min(xlo, p[0]); xhi = std::max(xhi, p[0]);
    ylo = std::min(ylo, p[1]); yhi = std::max(yhi, p[1]);
  }
  const double sx = mesh * std::sqrt(3.0);
  auto r_of = [&](double y) { return y / (1.5 * mesh); };
  auto q_of = [&](double x, double r) { return x / sx - r / 2; };
  std::int32_t rlo = static_cast<std::int32_t>(std::floor(r_of(ylo))) - 2;
  std::int32_t rhi = static_cast<std::int32_t>(std::ceil(r_of(yhi))) + 2;

  std::vector<FaceCoord> inside;
  for (std::int32_t r = rlo; r <= rhi; ++r) {
    std::int32_t qlo = static_cast<std::int32_t>(std::floor(q_of(xlo, r))) - 2;
    std::int32_t qhi = static_cast<std::int32_t>(std::ceil(q_of(xhi, r))) + 2;
    for (std::int32_t q = qlo; q <= qhi; ++q) {
      QPoint c = face_center_q({q, r});
      std::array<P2, 6> hex;
      for (int k = 0; k < 6; ++k) {
        QPoint v{c.x + kVertexOffsets[k].x, c.y + kVertexOffsets[k].y};
        hex[k] = {mesh * 0.43301270189221932338 * static_cast<double>(v.x),
                  mesh * 0.25 * static_cast<double>(v.y)};
      }
      if (tester.hexagon_inside(hex)) inside.push_back({q, r});
    }
  }
  if (inside.empty()) throw Error(ErrorKind::MeshTooCoarse, "no hexagon fits inside the polygon");

  // Component containing the centroid-nearest face.
  double cx = 0, cy = 0;
  {
    double acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto a = polygon.pts[i], b = polygon.pts[(i + 1) % n];
      double w = a[0] * b[1] - a[1] * b[0];
      acc += w;
      cx += (a[0] + b[0]) * w;
      cy += (a[1] + b[1]) * w;
    }
    cx /= 3 * acc;
    cy /= 3 * acc;
  }
  std::sort(inside.begin(), inside.end());
  std::size_t seed = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < inside.size(); ++i) {
    QPoint c = face_center_q(inside[i]);
    double dd = dist2({mesh * 0.43301270189221932338 * static_cast<double>(c.x),
                       mesh * 0.25 * static_cast<double>(c.y)},
                      {cx, cy});
    if (dd < best) {
      best = dd;
      seed = i;
    }
  }
  std::set<FaceCoord> in_set(inside.begin(), inside.end());
  std::vector<FaceCoord> comp;
  std::set<FaceCoord> seen;
  std::vector<FaceCoord> stack = {inside[seed]};
  seen.insert(inside[seed]);
  while (!stack.empty()) {
    FaceCoord f = stack.back();
    stack.pop_back();
    comp.push_back(f);
    for (auto o : kNeighborOffsets) {
      FaceCoord g{f.q + o.q, f.r + o.r};
      if (in_set.count(g) && !seen.count(g)) {
        seen.insert(g);
        stack.push_back(g);
      }
    }
  }

  std::shared_ptr<const HexDomain> dom;
  try {
    dom = std::make_shared<const HexDomain>(build_domain(comp, mesh));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotSimplyConnected)
      throw Error(ErrorKind::MeshTooCoarse, "maximal-area face set is not simply connected");
    throw;
  }

  std::vector<MidId> marks;
  for (auto& pe : prime_ends) {
    MidId best_m = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (MidId m : dom->boundary_mids()) {
      QPoint mp = dom->mid_point(m);
      double dd = dist2({dom->px(mp), dom->py(mp)}, {pe[0], pe[1]});
      if (best_m < 0 || dd < best_d - eps ||
          (std::abs(dd - best_d) <= eps && dom->boundary_pos(m) < dom->boundary_pos(best_m))) {
        best_d = std::min(dd, best_d);
        best_m = m;
      }
    }
    marks.push_back(best_m);
  }
  std::set<MidId> distinct(marks.begin(), marks.end());
  if (distinct.size() != marks.size())
    throw Error(ErrorKind::MarksCollide, "two prime ends map to the same mid-edge");
  return MarkedDomain(dom, marks);
}

}  // namespace cardylab
