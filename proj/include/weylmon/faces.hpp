#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylmon/coxeter.hpp"

namespace weylmon {

/// A fundamental face of the orbit hull, keyed by its mu-connected subset I.
/// The empty face (dimension -1) carries lambda^* = {}, lambda_* = Pi.
struct FundamentalFace {
  bool is_empty = false;
  Subset I = 0;       // lambda^*: the mu-connected subset
  Subset i_star = 0;  // lambda_*: simple roots in J0 \ I separated from I
  Subset lambda = 0;  // I union I_*; Pi for the empty face
  int dim = -1;       // |I|, or -1 for the empty face
};

/// A dominant point with its cached fundamental-face lattice.  Immutable;
/// faces, weights and Renner elements are all interpreted relative to one of
/// these.  The referenced WeylGroup must outlive the DominantPoint.
class DominantPoint {
 public:
  DominantPoint(const WeylGroup& W, RatVec mu);  // throws DominanceViolated

  const WeylGroup& group() const { return *W_; }
  const RatVec& mu() const { return mu_; }
  Subset j0() const { return j0_; }
  Subset jgt() const { return jgt_; }
  Subset pi_star() const { return pi_star_; }

  bool is_mu_connected(Subset I) const;
  /// Union of the Dynkin components of I that intersect J_>.
  Subset mu_connected_part(Subset I) const;
  /// {alpha in J0 \ I | alpha separated from I}; I must be mu-connected.
  Subset i_star(Subset I) const;

  /// The empty face followed by one face per mu-connected subset, ordered by
  /// (|I|, I).  Meet and join of the subsets are (I1 & I2)^* and I1 | I2.
  const std::vector<FundamentalFace>& fundamental_faces() const { return fundamental_; }
  int face_index(Subset mu_connected_I) const;  // index into fundamental_faces()
  int empty_face_index() const { return 0; }
  int top_face_index() const;  // the hull H = F_{Pi^*}

 private:
  const WeylGroup* W_;
  RatVec mu_;
  Subset j0_ = 0, jgt_ = 0, pi_star_ = 0;
  std::vector<FundamentalFace> fundamental_;
  std::map<Subset, int> index_of_;
};

/// A face w F_I of the orbit hull, stored as (sigma, base) where sigma is the
/// minimal representative of sigma W_{lambda(F_I)} and base indexes the
/// fundamental face.  Equality of the pairs is equality of faces.
struct Face {
  WeylElement sigma;
  int base = 0;

  friend bool operator==(const Face&, const Face&) = default;
  friend bool operator<(const Face& a, const Face& b) {
    if (a.base != b.base) return a.base < b.base;
    return a.sigma < b.sigma;
  }
};

Face empty_face(const DominantPoint& dp);
Face hull_face(const DominantPoint& dp);
Face fundamental_face(const DominantPoint& dp, Subset mu_connected_I);

/// Replaces I by its mu-connected part and w by the minimal coset
/// representative modulo W_{lambda}.
Face canonicalize_face(const DominantPoint& dp, const WeylElement& w, Subset I);

bool face_leq(const DominantPoint& dp, const Face& f1, const Face& f2);
Face act_face(const DominantPoint& dp, const WeylElement& w, const Face& f);
Face face_meet(const DominantPoint& dp, const Face& f1, const Face& f2);
Face face_join(const DominantPoint& dp, const Face& f1, const Face& f2);

int dimension(const DominantPoint& dp, const Face& f);

/// Conjugated standard parabolic descriptor: sigma W_subset sigma^{-1}.
struct ParabolicDescriptor {
  WeylElement sigma;
  Subset subset = 0;
};

ParabolicDescriptor isotropy_type(const DominantPoint& dp, const Face& f);    // lambda(F)
ParabolicDescriptor stabilizer_type(const DominantPoint& dp, const Face& f);  // lambda_*(F)

struct FaceEnumeration {
  std::vector<Face> faces;            // ordered by (dim, sigma ShortLex, I)
  std::map<int, size_t> count_by_dim;
  bool complete;  // heuristic for infinite groups: no new face at the boundary length
};

FaceEnumeration enumerate_faces(const DominantPoint& dp, int max_sigma_length);

struct Stratum {
  Subset support = 0;   // K with eta in mu - R_> K, K mu-connected
  RatVec coefficients;  // length m, strictly positive exactly on K
};

/// Writes a dominant point as mu - sum of positive multiples of simple roots
/// and returns the stratum when the support is mu-connected; nullopt encodes
/// NotInChamberHull.  Throws DominanceViolated for non-dominant input.
std::optional<Stratum> stratify_point(const DominantPoint& dp, const RatVec& eta);

/// True iff every Dynkin component of Pi^* intersect J0 is of finite type,
/// equivalently iff the intersection of the hull with the closed fundamental
/// chamber is closed.
bool hull_chamber_closed(const DominantPoint& dp);

struct EdgeReport {
  bool finite;                 // same criterion as hull_chamber_closed
  std::vector<IntVec> roots;   // W_{J0} J_> up to the cap, sorted
  bool truncated;
};

EdgeReport edges_at_mu(const DominantPoint& dp, size_t cap);

}  // namespace weylmon
