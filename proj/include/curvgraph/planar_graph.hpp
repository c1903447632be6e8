#pragma once

#include "curvgraph/rational.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace curvgraph {

/// Marker for an unbounded vertex or face degree parameter (p or q = infinity).
inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// Degree of a face. Unbounded faces (infinigons, or the truncation face of a
/// finite ball) have reciprocal exactly zero.
class FaceDegree {
 public:
  static FaceDegree finite(int d) { return FaceDegree(d); }
  static FaceDegree unbounded() { return FaceDegree(-1); }

  bool is_unbounded() const { return value_ < 0; }
  int value() const;
  Rational reciprocal() const;

  friend bool operator==(const FaceDegree&, const FaceDegree&) = default;

 private:
  explicit FaceDegree(int v) : value_(v) {}
  int value_;
};

struct Face {
  std::vector<int> boundary_walk;
  FaceDegree degree = FaceDegree::unbounded();
};

/// How the unbounded outer face of a truncated ball is interpreted.
///  - Truncated: it stands for the (unknown) faces beyond the generated region;
///    vertices touching it are not interior for curvature purposes.
///  - Infinigon: it is a genuine union of infinigons (planar trees).
enum class OuterFaceModel { Truncated, Infinigon };

using RotationTable = std::vector<std::vector<int>>;

struct GraphOptions {
  std::optional<int> center;
  /// Up to which distance from the center the finite graph agrees with the
  /// infinite graph it approximates. Requires a center.
  std::optional<int> interior_radius;
  /// Defaults to Infinigon for acyclic balls and Truncated otherwise.
  std::optional<OuterFaceModel> outer_model;
  /// A directed edge (u, v) lying on the outer face. When absent the outer
  /// face is the face with the most visits to the farthest sphere.
  std::optional<std::pair<int, int>> outer_dart;
  /// Accept degree-one vertices and non-simple faces anywhere. Used for graphs
  /// derived by edge removal.
  bool relaxed = false;
};

/// A connected planar graph given by a rotation system (cyclic neighbour order
/// per vertex). Faces are traced from the rotation: after arriving at v along
/// (u, v), leave along the neighbour following u in v's cyclic order.
///
/// A graph carrying an interior radius is a finite ball around its center.
/// Its outer face is marked unbounded.
class PlanarGraph {
 public:
  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(adjacency_.size()) / 2;
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const int> rotation(int v) const {
    return {adjacency_.data() + offsets_[v], static_cast<size_t>(degree(v))};
  }
  /// Faces of the corners at v: entry i is the face of the directed edge
  /// v -> rotation(v)[i], which holds the corner between rotation(v)[i-1] and
  /// rotation(v)[i].
  std::span<const int> corner_faces(int v) const {
    return {dart_face_.data() + offsets_[v], static_cast<size_t>(degree(v))};
  }
  /// Position of w in rotation(v), or -1.
  int slot_of(int v, int w) const;
  bool adjacent(int v, int w) const { return slot_of(v, w) >= 0; }
  /// Face on the left of the directed edge v -> w (the face whose walk uses it).
  int face_of_dart(int v, int w) const;

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }

  std::optional<int> center() const { return options_.center; }
  std::optional<int> interior_radius() const { return options_.interior_radius; }
  bool is_ball() const { return options_.interior_radius.has_value(); }
  OuterFaceModel outer_model() const { return outer_model_; }
  std::optional<int> outer_face() const { return outer_face_; }
  bool is_outer_face(int f) const { return outer_face_ && *outer_face_ == f; }
  /// Distances from the center (empty when no center is set).
  const std::vector<int>& center_distances() const { return center_distances_; }
  int distance_from_center(int v) const { return center_distances_.at(v); }

  /// All incident faces are known: true for every vertex of a graph without
  /// interior radius; inside a ball the vertex must lie strictly inside the
  /// radius and, for truncated balls, avoid the outer face.
  bool is_interior(int v) const;
  std::vector<int> interior_vertices() const;

  std::vector<int> distances_from(int v0) const;
  RotationTable rotation_table() const;
  const GraphOptions& options() const { return options_; }

 private:
  friend PlanarGraph build_graph(const RotationTable&, const GraphOptions&);

  std::vector<int> offsets_;
  std::vector<int> adjacency_;
  std::vector<int> dart_face_;
  std::vector<Face> faces_;
  std::vector<int> center_distances_;
  GraphOptions options_;
  OuterFaceModel outer_model_ = OuterFaceModel::Truncated;
  std::optional<int> outer_face_;
};

/// Validates the rotation table and traces faces.
/// Errors: InvalidInput, LoopEdge, MultiEdge, AsymmetricAdjacency,
/// Disconnected, Leaf, InvalidFace.
PlanarGraph build_graph(const RotationTable& table, const GraphOptions& options = {});

/// A finite vertex subset of a host graph. Members are kept sorted and unique.
class VertexSet {
 public:
  VertexSet(const PlanarGraph& host, std::vector<int> members);

  const PlanarGraph& host() const { return *host_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const { return mask_[v] != 0; }

 private:
  const PlanarGraph* host_;
  std::vector<int> members_;
  std::vector<char> mask_;
};

struct SphereDecomposition {
  int center = 0;
  std::vector<std::vector<int>> layers;
  std::vector<std::int64_t> sigma;
};

/// Errors: InvalidInput (bad vertex), RadiusExceedsGraph.
SphereDecomposition bfs_layers(const PlanarGraph& g, int v0, int radius);

/// Local maxima of the distance to v0 among vertices strictly inside the
/// interior radius. Errors: NoInteriorMarked.
std::vector<int> cut_locus(const PlanarGraph& g, int v0);

struct BoundaryData {
  std::vector<std::pair<int, int>> edges;   ///< (inside, outside), sorted
  std::vector<int> faces;                   ///< faces containing a boundary edge
  std::vector<int> vertices;                ///< members with an outgoing edge
  std::map<int, int> inner_degrees;         ///< face -> |f ∩ W| over `faces`
  std::map<int, int> external_degrees;      ///< member -> boundary edges at it
};

/// Errors: EmptySet.
BoundaryData boundary_data(const VertexSet& w);

struct SubgraphCounts {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;        ///< faces of the induced subgraph, outer included
  std::int64_t enclosing = 0;    ///< c(W): induced faces that are not faces of G
  bool is_polygon = false;
};

/// Counts for the induced subgraph G_W, with Euler's formula asserted.
/// Errors: EmptySet, DisconnectedInducedSubgraph.
SubgraphCounts subgraph_counts(const VertexSet& w);

/// sum of degrees over W == 2|E_W| + |boundary edges|.
bool handshake_check(const VertexSet& w);

struct FaceIncidenceIdentity {
  Rational corner_sum;   ///< sum over v in W, f containing v, of 1/|f|
  Rational face_sum;     ///< |F_W| - c(W) + sum over boundary faces of |f ∩ W|/|f|
  bool holds() const { return corner_sum == face_sum; }
};

/// Both sides of the corner/face bookkeeping identity for a connected W.
FaceIncidenceIdentity face_incidence_identity(const VertexSet& w);

/// c_n^j = number of faces with exactly j vertices outside the ball B_n, for
/// 1 <= j <= q-1, on a q-face-regular ball.
/// Errors: NoInteriorMarked, NotFaceRegular, HorizonExceeded.
std::map<int, std::int64_t> c_counts(const PlanarGraph& g, int v0, int n);

/// Face degree q shared by all faces meeting B_n around the center.
/// Errors: NoInteriorMarked, NotFaceRegular, HorizonExceeded.
int regular_face_degree(const PlanarGraph& g, int n);

/// Deletes every edge joining two vertices at equal distance from v0.
PlanarGraph remove_intra_sphere_edges(const PlanarGraph& g, int v0);

}  // namespace curvgraph
