#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylmon/cartan.hpp"

namespace weylmon {

using Gen = std::uint8_t;
using Word = std::vector<Gen>;

/// A Weyl group element in canonical normal form: the ShortLex-least reduced
/// word.  Two equal group elements always carry identical words, so value
/// comparison is group-element comparison.
class WeylElement {
 public:
  WeylElement() = default;

  const Word& word() const { return word_; }
  size_t length() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

  std::string to_string(int index_base = 1) const;  // "1 2 1", identity is "e"

 private:
  friend class WeylGroup;
  explicit WeylElement(Word w) : word_(std::move(w)) {}
  Word word_;
};

enum class Side { Left, Right };

struct DoubleCosetFactorization {
  WeylElement left;    // in W_I
  WeylElement middle;  // minimal representative of the (I, J) double coset
  WeylElement right;   // in W_J
};

struct OrbitResult {
  std::vector<RatVec> points;  // sorted lexicographically
  bool complete;               // closure reached within the cap
};

/// Word-level arithmetic valid for arbitrary (also infinite) Weyl groups,
/// built entirely on the exact integer action on roots.
class WeylGroup {
 public:
  WeylGroup(CartanMatrix A, Realization rz);

  const CartanMatrix& cartan() const { return A_; }
  const Realization& realization() const { return rz_; }
  int num_generators() const { return A_.size(); }
  int dim() const { return rz_.dim; }

  WeylElement identity() const { return WeylElement(); }
  WeylElement generator(int i) const;
  /// Normalizes an arbitrary word (0-based generator indices).
  WeylElement from_word(const std::vector<int>& letters) const;
  /// Parses "1 2 1" (1-based) or "e"; throws ElementParseError.
  WeylElement parse(const std::string& text) const;

  IntVec simple_root(int i) const;
  IntVec act_on_root(const WeylElement& w, IntVec v) const;
  RatVec act_on_weight(const WeylElement& w, RatVec coords) const;
  void reflect_root(int i, IntVec& v) const;
  void reflect_weight(int i, RatVec& coords) const;

  /// Pairing <weight, alpha_k^vee> is just coords[k]; this evaluates the
  /// pairing with the coroot of a real root gamma = w(alpha_i).
  Rat pairing_with_coroot(const RatVec& coords, const IntVec& real_root) const;

  bool is_right_descent(const WeylElement& w, int s) const;
  bool is_left_descent(const WeylElement& w, int s) const;

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;

  Subset support(const WeylElement& w) const;
  bool in_standard_parabolic(const WeylElement& w, Subset J) const;

  WeylElement min_coset_rep(WeylElement w, Subset J, Side side) const;
  DoubleCosetFactorization double_coset_factorize(const WeylElement& w, Subset I,
                                                  Subset J) const;

  OrbitResult orbit_enumerate(const RatVec& mu, Subset I, size_t cap = 100000) const;

  /// All elements of the standard parabolic W_J of length <= bound, in
  /// (length, ShortLex) order.  `exhausted` is set when the whole parabolic
  /// subgroup was enumerated within the bound.
  std::vector<WeylElement> elements_up_to_length(Subset J, int bound,
                                                 bool* exhausted = nullptr,
                                                 size_t cap = 1000000) const;

  /// Decomposes a real root as w(alpha_i) by a descent walk; nullopt when the
  /// input is not a real root.
  struct RealRootDecomposition {
    WeylElement w;
    int simple_index;
    bool positive;
  };
  std::optional<RealRootDecomposition> real_root_decompose(const IntVec& root) const;

  /// Positive real roots of height <= bound (height = sum of coefficients).
  std::vector<IntVec> positive_real_roots_up_to_height(int bound) const;

  /// Normalizes with a caller-supplied descent choice; used to confirm that
  /// the support of an element does not depend on the reduction order.
  Word reduce_with_choices(const std::vector<int>& letters, std::uint64_t seed) const;

 private:
  void right_multiply_reduced(Word& r, Gen s) const;
  Word shortlex(Word reduced) const;
  bool root_is_negative(const IntVec& v) const;

  CartanMatrix A_;
  Realization rz_;
};

}  // namespace weylmon
