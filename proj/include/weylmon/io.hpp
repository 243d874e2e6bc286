#pragma once

#include <memory>
#include <string>

#include "weylmon/oracle.hpp"
#include "weylmon/renner.hpp"
#include "weylmon/weights.hpp"

namespace weylmon {

/// A parsed input document: { "cartan": [[...]], "mu": [...],
/// "completion": [[...]] (optional) }.  "mu" has length 2m-l, or m when the
/// matrix is nondegenerate.
struct ProblemSpec {
  CartanMatrix cartan;
  Realization realization;
  RatVec mu;

  static ProblemSpec parse(const std::string& json_text);
  static ProblemSpec load(const std::string& path);
};

/// Owns the group and the dominant point built from a problem document.
struct Problem {
  std::unique_ptr<WeylGroup> group;
  std::unique_ptr<DominantPoint> point;

  static Problem build(const ProblemSpec& spec);
};

std::string faces_to_json(const DominantPoint& dp, const FaceEnumeration& fe);
std::string faces_to_dot(const DominantPoint& dp, const FaceEnumeration& fe);
std::string face_label(const DominantPoint& dp, const Face& f);

std::string cross_section_to_json(const RennerMonoid& monoid);
std::string idempotent_order_to_dot(const RennerMonoid& monoid, int sigma_length_bound);

std::string weights_to_json(const TruncatedWeightSet& tws);

std::string renner_element_to_json(const RennerMonoid& monoid, const RennerElement& x);
RennerElement renner_element_from_json(const RennerMonoid& monoid, const std::string& text);

}  // namespace weylmon
