#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylmon/error.hpp"
#include "weylmon/numeric.hpp"

namespace weylmon {

/// A subset of the simple roots {0, ..., m-1}, one bit per index.
using Subset = std::uint32_t;

constexpr int kMaxRank = 31;

int subset_size(Subset s);
bool subset_contains(Subset s, int i);
Subset subset_of(std::initializer_list<int> indices);
Subset full_subset(int m);
std::vector<int> subset_indices(Subset s);
std::string subset_to_string(Subset s, int index_base = 1);

/// A validated generalized Cartan matrix: 2 on the diagonal, nonpositive
/// off-diagonal entries with a symmetric zero pattern.
class CartanMatrix {
 public:
  static CartanMatrix validate(const std::vector<std::vector<long long>>& entries);

  int size() const { return m_; }
  int rank() const { return rank_; }
  long long entry(int i, int j) const { return a_[static_cast<size_t>(i) * m_ + j]; }
  bool adjacent(int i, int j) const { return i != j && entry(i, j) != 0; }
  Subset full_set() const { return full_subset(m_); }
  IntMat submatrix(Subset s) const;

 private:
  CartanMatrix(int m, int rank, std::vector<long long> a)
      : m_(m), rank_(rank), a_(std::move(a)) {}
  int m_;
  int rank_;
  std::vector<long long> a_;
};

/// Maximal connected subsets of I in the Dynkin diagram, ordered by least index.
std::vector<Subset> dynkin_components(const CartanMatrix& A, Subset I);

/// True iff <alpha, beta^vee> = 0 for all alpha in I, beta in J.
bool are_separated(const CartanMatrix& A, Subset I, Subset J);

enum class CartanKind { Finite, Affine, Indefinite };

const char* cartan_kind_name(CartanKind k);

struct ComponentType {
  Subset component;
  CartanKind kind;
  bool strongly_hyperbolic;  // meaningful only when kind == Indefinite
};

/// Per indecomposable component: Finite iff all principal minors are positive,
/// Affine iff the determinant vanishes and all proper principal minors are
/// positive, Indefinite otherwise.  A component of indefinite kind is strongly
/// hyperbolic when every proper nonempty indecomposable submatrix is of finite
/// type, equivalently when all proper principal minors are positive.
std::vector<ComponentType> classify_type(const CartanMatrix& A);

/// True iff every Dynkin component of I is of finite type.
bool subset_is_finite_type(const CartanMatrix& A, Subset I);

/// Integer coordinate frame for roots and weights.  Roots live in a space of
/// dimension 2m-l; the k-th coordinate of a root is its pairing with the k-th
/// coroot, where coroots m..2m-l-1 come from the completion matrix D.
struct Realization {
  int m = 0;
  int l = 0;
  int dim = 0;          // 2m - l
  IntMat pairings;      // dim rows, m columns; pairings[k][j] = <alpha_j, alpha_k^vee>
  IntMat completion;    // the (m-l) x m matrix D

  IntVec root_coords(int j) const;  // column j of `pairings`, length dim
};

/// Canonical deterministic completion: one standard basis row per non-pivot
/// column of the row echelon form of A.
Realization complete_realization(const CartanMatrix& A);

/// Realization with a caller-supplied completion; rejects completions for
/// which the stacked (2m-l) x m pairing matrix does not have rank m.
Realization make_realization(const CartanMatrix& A, const IntMat& completion);

/// True iff some positive multiple of the weight lies in the root lattice,
/// i.e. the weight is in the rational span of the simple roots.
bool q_sat_member(const Realization& rz, const RatVec& weight_coords);

}  // namespace weylmon
