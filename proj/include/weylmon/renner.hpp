#pragma once

#include <string>
#include <vector>

#include "weylmon/faces.hpp"

namespace weylmon {

/// An element w e(F) of the Renner monoid, with the unit part stored as the
/// fixed canonical representative of its coset modulo the pointwise
/// stabilizer sigma W_{I_*} sigma^{-1} of the face.
struct RennerElement {
  WeylElement unit;
  Face face;

  friend bool operator==(const RennerElement&, const RennerElement&) = default;
  friend bool operator<(const RennerElement& a, const RennerElement& b) {
    if (!(a.face == b.face)) return a.face < b.face;
    return a.unit < b.unit;
  }
};

struct CrossSectionEntry {
  int face_base;        // index into DominantPoint::fundamental_faces()
  Subset lambda_upper;  // lambda^*: the mu-connected subset (empty for the zero)
  Subset lambda_lower;  // lambda_*
  Subset lambda;        // lambda_* union lambda^*
};

enum class Polarity { Positive, Negative };

/// Type data of an idempotent: the W-side parabolic descriptors and the
/// group-side shadow (the centralizers in the ambient monoid's unit group are
/// the parabolic of type lambda with the indicated polarity).
struct IdempotentType {
  ParabolicDescriptor centralizer;  // sigma W_lambda sigma^{-1}
  ParabolicDescriptor stabilizer;   // sigma W_{lambda_*} sigma^{-1}
  Polarity group_left = Polarity::Positive;    // left centralizer: P_{lambda}
  Polarity group_right = Polarity::Negative;   // right centralizer: P^-_{lambda}
};

struct RennerEnumeration {
  std::vector<RennerElement> elements;  // sorted
  bool complete;
};

struct AxiomReport {
  bool unit_regular_commuting = true;  // (a)
  bool cross_section = true;           // (c)
  bool conjugate_pairs = true;         // (d)
  bool parabolic_centralizers = true;  // (e)
  bool monotone_type_map = true;       // (f)
  std::vector<std::string> counterexamples;
  bool ok() const {
    return unit_regular_commuting && cross_section && conjugate_pairs &&
           parabolic_centralizers && monotone_type_map;
  }
};

/// The generalized Renner monoid of an orbit hull whose simple-root set is
/// mu-connected.  All operations are pure; elements are values tied to the
/// DominantPoint, which must outlive the monoid.
class RennerMonoid {
 public:
  explicit RennerMonoid(const DominantPoint& dp);  // throws PiNotMuConnected

  const DominantPoint& point() const { return *dp_; }

  RennerElement make_element(const WeylElement& w, const Face& f) const;
  RennerElement zero() const;
  RennerElement one() const;
  RennerElement unit(const WeylElement& w) const;
  RennerElement idempotent(const Face& f) const;

  RennerElement multiply(const RennerElement& x, const RennerElement& y) const;
  RennerElement inverse(const RennerElement& x) const;

  bool is_idempotent(const RennerElement& x) const;
  bool idempotents_leq(const RennerElement& e, const RennerElement& f) const;

  const std::vector<CrossSectionEntry>& cross_section_lattice() const { return lattice_; }
  /// Decomposes an idempotent uniquely as sigma f sigma^{-1}, f fundamental.
  std::pair<WeylElement, const CrossSectionEntry*> conjugacy_normal_form(
      const RennerElement& e) const;

  IdempotentType centralizer_type(const RennerElement& e) const;  // NotIdempotent
  /// The unique fundamental idempotent f with x in W f W.
  const CrossSectionEntry& cell_of(const RennerElement& x) const;

  RennerEnumeration enumerate(int unit_length_bound, int sigma_length_bound) const;

  AxiomReport verify_axioms(int unit_length_bound, int sigma_length_bound) const;

  std::string to_string(const RennerElement& x) const;

 private:
  const DominantPoint* dp_;
  std::vector<CrossSectionEntry> lattice_;  // zero first, then by (|I|, I)
};

}  // namespace weylmon
