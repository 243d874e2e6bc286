#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylmon/faces.hpp"

namespace weylmon {

/// A face of a convex hull computed by brute force, identified by the sorted
/// ids of the input points it contains.  Every face except the hull itself
/// and the empty face stores a supporting-functional witness, expressed in
/// the lattice's internal affine coordinates: the functional attains its
/// maximum over the point set exactly on the face.
struct GeomFace {
  std::vector<int> vertex_ids;
  int dim = -1;
  RatVec functional;
  Rat offset;
};

struct GeomLattice {
  std::vector<RatVec> points;          // deduplicated, sorted, ambient coordinates
  RatMat internal_coords;              // one row per point, in the affine hull basis
  int hull_dim = 0;
  std::vector<GeomFace> faces;         // sorted by (dim, vertex_ids); faces[0] is empty

  int find(const std::vector<int>& vertex_ids) const;  // -1 if absent
  bool leq(int a, int b) const;
  int meet(int a, int b) const;
  int join(int a, int b) const;
};

/// Exact face lattice of the convex hull of few points in low dimension:
/// facets by exhaustive hyperplane enumeration over point subsets, faces as
/// intersections of facets, rational arithmetic throughout.  Guarded by
/// TooLarge (at most 200 points, hull dimension at most 4).
GeomLattice geometric_face_lattice(const std::vector<RatVec>& points);

struct OracleReport {
  bool ok = true;
  size_t combinatorial_faces = 0;
  size_t geometric_faces = 0;
  size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// Certifies the combinatorial face lattice against the geometric one for a
/// finite-type Weyl group: order isomorphism, dimensions, meets, joins, and
/// stabilizer fixed points.  Throws FiniteTypeRequired otherwise.
OracleReport compare_lattices(const DominantPoint& dp);

/// The same certification for the sublattice below F_I, where the standard
/// parabolic W_I is of finite type; usable when the whole group is infinite.
OracleReport compare_lattices_slice(const DominantPoint& dp, Subset I);

}  // namespace weylmon
