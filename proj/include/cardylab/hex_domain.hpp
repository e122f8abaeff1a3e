#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cardylab/bits.hpp"
#include "cardylab/errors.hpp"

namespace cardylab {

using FaceId = std::int32_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using MidId = std::int32_t;  // mid-edge index; equals the edge index
using HeId = std::int32_t;   // half-edge index; edge e owns half-edges 2e and 2e+1

/// Axial coordinates of a hexagonal face. Center in the plane:
///   x = mesh * sqrt(3) * (q + r/2),  y = mesh * 1.5 * r.
struct FaceCoord {
  std::int32_t q = 0;
  std::int32_t r = 0;
  friend bool operator==(FaceCoord a, FaceCoord b) { return a.q == b.q && a.r == b.r; }
  friend auto operator<=>(FaceCoord a, FaceCoord b) = default;
};

/// Exact lattice point in quarter units: x in mesh*sqrt(3)/4, y in mesh/4.
/// Face centers, vertices and mid-edges all have integer quarter coordinates.
struct QPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(QPoint a, QPoint b) { return a.x == b.x && a.y == b.y; }
  friend auto operator<=>(QPoint a, QPoint b) = default;
};

inline QPoint face_center_q(FaceCoord f) { return {4ll * f.q + 2ll * f.r, 6ll * f.r}; }

/// The six axial neighbor offsets, direction k*60 degrees for k = 0..5.
inline constexpr std::array<FaceCoord, 6> kNeighborOffsets = {
    FaceCoord{1, 0}, FaceCoord{0, 1}, FaceCoord{-1, 1},
    FaceCoord{-1, 0}, FaceCoord{0, -1}, FaceCoord{1, -1}};

/// Vertex offsets from a face center (quarter units), angle 30 + 60k degrees.
inline constexpr std::array<QPoint, 6> kVertexOffsets = {
    QPoint{2, 2}, QPoint{0, 4}, QPoint{-2, 2}, QPoint{-2, -2}, QPoint{0, -4}, QPoint{2, -2}};

/// Mid-edge offsets from a face center (quarter units), angle 60k degrees.
inline constexpr std::array<QPoint, 6> kMidOffsets = {
    QPoint{2, 0}, QPoint{1, 3}, QPoint{-1, 3}, QPoint{-2, 0}, QPoint{-1, -3}, QPoint{1, -3}};

/// Immutable simply connected domain glued from hexagonal faces.
///
/// Index sets are dense and canonical: faces sorted lexicographically in
/// (q, r); vertices/edges numbered in order of first encounter while scanning
/// faces in that order and local directions counterclockwise from 0 degrees.
/// Edge e has half-edges 2e (at endpoint vertex_a) and 2e+1 (at vertex_b).
class HexDomain {
 public:
  struct Edge {
    QPoint mid;
    VertexId va = -1, vb = -1;    // va < vb as ids
    FaceId face_left = -1;        // owner faces (face_right = -1 on boundary)
    FaceId face_right = -1;
    bool boundary() const { return face_right < 0; }
  };

  double mesh() const { return mesh_; }
  std::size_t num_faces() const { return faces_.size(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_half_edges() const { return 2 * edges_.size(); }

  const std::vector<FaceCoord>& faces() const { return faces_; }
  const std::vector<QPoint>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  FaceId face_id(FaceCoord f) const;                      // -1 if absent
  const std::array<FaceId, 6>& face_neighbors(FaceId f) const { return face_nbr_[f]; }
  const std::array<EdgeId, 6>& face_edges(FaceId f) const { return face_edge_[f]; }

  VertexId he_vertex(HeId h) const { return he_vertex_[h]; }
  MidId he_mid(HeId h) const { return static_cast<MidId>(h >> 1); }
  /// The other half of the same edge.
  static HeId he_mate(HeId h) { return h ^ 1; }

  /// Incident half-edges of a vertex (-1 padded), 2 or 3 entries.
  const std::array<HeId, 3>& vertex_half_edges(VertexId v) const { return vertex_he_[v]; }
  int vertex_degree(VertexId v) const { return vertex_he_[v][2] >= 0 ? 3 : 2; }

  QPoint mid_point(MidId m) const { return edges_[m].mid; }
  QPoint vertex_point(VertexId v) const { return vertices_[v]; }

  bool is_boundary_mid(MidId m) const { return edges_[m].boundary(); }
  /// Position of a boundary mid-edge in the boundary cycle, -1 if interior.
  std::int32_t boundary_pos(MidId m) const { return bpos_[m]; }
  /// Boundary mid-edges in counterclockwise cycle order.
  const std::vector<MidId>& boundary_mids() const { return bmids_; }
  /// Boundary half-edges in counterclockwise traversal order; slots 2i and
  /// 2i+1 are the two halves of the boundary edge at cycle position i, in
  /// traversal order (tail half first).
  const std::vector<HeId>& boundary_half_edges() const { return bhe_; }

  /// Half-edge boundary mask of one face (its 12 half-edges).
  const Bits& face_he_mask(FaceId f) const { return face_mask_[f]; }
  Bits empty_he_set() const { return Bits(num_half_edges()); }
  /// All boundary half-edges (equals the XOR of every face mask).
  const Bits& boundary_he_mask() const { return boundary_mask_; }

  /// The three mid-edges around a trivalent vertex in counterclockwise
  /// geometric order starting from the smallest angle. Throws BoundaryVertex
  /// for vertices with only two incident half-edges.
  std::array<MidId, 3> vertex_midedges(VertexId v) const;

  /// Continuum coordinates of a lattice point.
  double px(QPoint p) const { return mesh_ * 0.43301270189221932338 * static_cast<double>(p.x); }
  double py(QPoint p) const { return mesh_ * 0.25 * static_cast<double>(p.y); }

 private:
  friend HexDomain build_domain(const std::vector<FaceCoord>&, double);

  double mesh_ = 1.0;
  std::vector<FaceCoord> faces_;
  std::unordered_map<std::int64_t, FaceId> face_index_;
  std::vector<QPoint> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::array<FaceId, 6>> face_nbr_;
  std::vector<std::array<EdgeId, 6>> face_edge_;
  std::vector<HeId> he_vertex_aux_;  // builder scratch
  std::vector<VertexId> he_vertex_;
  std::vector<std::array<HeId, 3>> vertex_he_;
  std::vector<MidId> bmids_;
  std::vector<HeId> bhe_;
  std::vector<std::int32_t> bpos_;
  std::vector<Bits> face_mask_;
  Bits boundary_mask_;
};

/// Builds a domain from a face set, validating connectivity and simple
/// connectivity. Throws EmptyFaceSet, NotConnected, NotSimplyConnected.
HexDomain build_domain(const std::vector<FaceCoord>& faces, double mesh);

/// A domain with marked boundary mid-edges u_1..u_k in counterclockwise
/// order (indexed cyclically by the operations that take mark indices).
class MarkedDomain {
 public:
  MarkedDomain(std::shared_ptr<const HexDomain> domain, std::vector<MidId> marks);

  const HexDomain& domain() const { return *domain_; }
  const std::shared_ptr<const HexDomain>& domain_ptr() const { return domain_; }
  const std::vector<MidId>& marks() const { return marks_; }
  std::size_t num_marks() const { return marks_.size(); }
  /// u_j with cyclic indexing, j is 1-based.
  MidId mark(int j) const {
    auto k = static_cast<std::int64_t>(marks_.size());
    return marks_[static_cast<std::size_t>(((j - 1) % k + k) % k)];
  }

 private:
  std::shared_ptr<const HexDomain> domain_;
  std::vector<MidId> marks_;
};

struct BoundaryArc {
  std::vector<MidId> mids;   // from u_j to u_j' inclusive, counterclockwise
  std::vector<FaceId> faces; // owner faces of those mid-edges, deduplicated
};

/// Counterclockwise boundary arc from mark j to mark j' (1-based, cyclic).
BoundaryArc boundary_arc(const MarkedDomain& md, int j, int j2);

/// Jordan polygon in continuum coordinates.
struct Polygon {
  std::vector<std::array<double, 2>> pts;  // counterclockwise
};

/// Discretizes a polygon: all faces whose closed hexagon lies inside it,
/// restricted to the connected component containing the face nearest the
/// centroid; fails with MeshTooCoarse if empty or not simply connected.
/// Marks are the boundary mid-edges nearest to each prime end (ties broken
/// by smallest boundary-cycle position).
MarkedDomain discretize(const Polygon& polygon, const std::vector<std::array<double, 2>>& prime_ends,
                        double mesh);

/// Domain-file (de)serialization; byte-stable for a fixed domain.
std::string domain_to_json(const MarkedDomain& md);
MarkedDomain domain_from_json(const std::string& text);
MarkedDomain load_domain_file(const std::string& path);
void save_domain_file(const MarkedDomain& md, const std::string& path);

}  // namespace cardylab
