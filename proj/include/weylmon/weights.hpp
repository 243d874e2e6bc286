#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylmon/faces.hpp"

namespace weylmon {

using DepthVector = std::vector<long long>;  // k with lambda = mu - sum k_i alpha_i

/// Weights of the irreducible integrable highest weight module L(mu) down to
/// a fixed depth (max sum of the k_i), presence only.  Generated by the
/// simple-root string recursion, which reaches every weight of the module
/// within the truncation.
class TruncatedWeightSet {
 public:
  static TruncatedWeightSet generate(const DominantPoint& dp, int depth);

  const DominantPoint& point() const { return *dp_; }
  int depth() const { return depth_; }
  const std::set<DepthVector>& weights() const { return present_; }
  bool contains(const DepthVector& k) const { return present_.count(k) != 0; }

  /// <lambda, alpha_i^vee> for lambda = mu - sum k_j alpha_j.
  Rat pairing(const DepthVector& k, int i) const;
  RatVec coords(const DepthVector& k) const;
  /// Depth vector of a weight given by realization coordinates, when the
  /// weight lies in mu - Z_+ Pi; nullopt otherwise.
  std::optional<DepthVector> depth_of(const RatVec& coords) const;

 private:
  TruncatedWeightSet(const DominantPoint& dp, int depth) : dp_(&dp), depth_(depth) {}
  const DominantPoint* dp_;
  int depth_;
  std::set<DepthVector> present_;
};

/// Position of a real root relative to a nonempty face: fixing the face
/// pointwise (Star), fixing it setwise only (UpperStar), or the two
/// complementary half-system positions (Positive / Negative).
enum class RootRegion { Star, UpperStar, Positive, Negative };

const char* root_region_name(RootRegion r);

RootRegion classify_root(const DominantPoint& dp, const Face& f, const IntVec& gamma);

struct FaceWeightSet {
  std::set<DepthVector> weights;
  bool complete;  // false when the sigma-translate left the truncation
};

FaceWeightSet face_weights(const TruncatedWeightSet& tws, const Face& f);

struct StringLawReport {
  size_t strings_checked = 0;
  size_t strings_skipped = 0;  // strings leaving the truncation are never judged
  size_t roots_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the weight-string laws through the F-weights for every real root up
/// to the height bound: full strings stay in the face for roots fixing it,
/// singleton strings for pointwise-fixing roots, one-sided strings with the
/// sign constraints for the half-system roots, plus the existence clauses.
StringLawReport verify_string_laws(const TruncatedWeightSet& tws, const Face& f,
                                   int root_height_bound);

struct CrosscheckReport {
  size_t checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// For every dominant integral weight within the truncation depth, membership
/// in the module equals mu-connectedness of its depth support.
CrosscheckReport dominant_membership_crosscheck(const TruncatedWeightSet& tws);

}  // namespace weylmon
