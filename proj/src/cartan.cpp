#include "weylmon/cartan.hpp"

#include <bit>
#include <sstream>

namespace weylmon {

int subset_size(Subset s) { return std::popcount(s); }

bool subset_contains(Subset s, int i) { return (s >> i) & 1u; }

Subset subset_of(std::initializer_list<int> indices) {
  Subset s = 0;
  for (int i : indices) s |= (Subset{1} << i);
  return s;
}

Subset full_subset(int m) { return m == 0 ? 0 : (Subset{1} << m) - 1; }

std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  for (int i = 0; i < kMaxRank; ++i)
    if (subset_contains(s, i)) out.push_back(i);
  return out;
}

std::string subset_to_string(Subset s, int index_base) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : subset_indices(s)) {
    if (!first) os << ' ';
    os << i + index_base;
    first = false;
  }
  os << '}';
  return os.str();
}

CartanMatrix CartanMatrix::validate(const std::vector<std::vector<long long>>& entries) {
  const int m = static_cast<int>(entries.size());
  if (m == 0) fail(Errc::InvalidArgument, "empty matrix");
  if (m > kMaxRank) fail(Errc::TooLarge, "matrix size exceeds " + std::to_string(kMaxRank));
  std::vector<long long> a(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(entries[i].size()) != m)
      fail(Errc::InvalidArgument, "matrix is not square");
    for (int j = 0; j < m; ++j) a[static_cast<size_t>(i) * m + j] = entries[i][j];
  }
  auto at = [&](int i, int j) { return a[static_cast<size_t>(i) * m + j]; };
  for (int i = 0; i < m; ++i) {
    if (at(i, i) != 2)
      fail(Errc::DiagonalNotTwo, "a(" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                                     ") = " + std::to_string(at(i, i)));
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0)
        fail(Errc::PositiveOffDiagonal,
             "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") > 0");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        fail(Errc::AsymmetricZero,
             "a(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = 0 but a(" +
                 std::to_string(j + 1) + "," + std::to_string(i + 1) + ") != 0");
    }
  }
  RatMat ra(m, RatVec(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ra[i][j] = Rat(at(i, j));
  const int rank = rational_rank(ra);
  return CartanMatrix(m, rank, std::move(a));
}

IntMat CartanMatrix::submatrix(Subset s) const {
  const std::vector<int> idx = subset_indices(s);
  IntMat out(idx.size(), IntVec(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) out[i][j] = entry(idx[i], idx[j]);
  return out;
}

std::vector<Subset> dynkin_components(const CartanMatrix& A, Subset I) {
  std::vector<Subset> components;
  Subset seen = 0;
  for (int i = 0; i < A.size(); ++i) {
    if (!subset_contains(I, i) || subset_contains(seen, i)) continue;
    Subset comp = 0;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (subset_contains(comp, v)) continue;
      comp |= (Subset{1} << v);
      for (int w = 0; w < A.size(); ++w)
        if (subset_contains(I, w) && !subset_contains(comp, w) && A.adjacent(v, w))
          stack.push_back(w);
    }
    seen |= comp;
    components.push_back(comp);
  }
  return components;
}

bool are_separated(const CartanMatrix& A, Subset I, Subset J) {
  for (int i : subset_indices(I))
    for (int j : subset_indices(J))
      if (i != j && A.entry(i, j) != 0) return false;
  return true;
}

const char* cartan_kind_name(CartanKind k) {
  switch (k) {
    case CartanKind::Finite: return "Finite";
    case CartanKind::Affine: return "Affine";
    case CartanKind::Indefinite: return "Indefinite";
  }
  return "?";
}

namespace {

// Scans all principal minors of the submatrix on `component`.
struct MinorScan {
  bool all_positive = true;         // over all nonempty subsets
  bool proper_all_positive = true;  // over all proper nonempty subsets
  Int full_det = 1;
};

MinorScan scan_principal_minors(const CartanMatrix& A, Subset component) {
  MinorScan scan;
  const std::vector<int> idx = subset_indices(component);
  const size_t k = idx.size();
  for (Subset mask = 1; mask < (Subset{1} << k); ++mask) {
    Subset sub = 0;
    for (size_t t = 0; t < k; ++t)
      if (subset_contains(mask, static_cast<int>(t))) sub |= (Subset{1} << idx[t]);
    const Int det = determinant(A.submatrix(sub));
    if (mask == full_subset(static_cast<int>(k))) {
      scan.full_det = det;
      if (det <= 0) scan.all_positive = false;
    } else if (det <= 0) {
      scan.all_positive = false;
      scan.proper_all_positive = false;
    }
  }
  return scan;
}

}  // namespace

std::vector<ComponentType> classify_type(const CartanMatrix& A) {
  std::vector<ComponentType> out;
  for (Subset comp : dynkin_components(A, A.full_set())) {
    const MinorScan scan = scan_principal_minors(A, comp);
    ComponentType t{comp, CartanKind::Indefinite, false};
    if (scan.all_positive) {
      t.kind = CartanKind::Finite;
    } else if (scan.full_det == 0 && scan.proper_all_positive) {
      t.kind = CartanKind::Affine;
    } else {
      t.kind = CartanKind::Indefinite;
      t.strongly_hyperbolic = scan.proper_all_positive;
    }
    out.push_back(t);
  }
  return out;
}

bool subset_is_finite_type(const CartanMatrix& A, Subset I) {
  for (Subset comp : dynkin_components(A, I))
    if (!scan_principal_minors(A, comp).all_positive) return false;
  return true;
}

IntVec Realization::root_coords(int j) const {
  IntVec out(dim);
  for (int k = 0; k < dim; ++k) out[k] = pairings[k][j];
  return out;
}

namespace {

Realization assemble_realization(const CartanMatrix& A, IntMat completion) {
  Realization rz;
  rz.m = A.size();
  rz.l = A.rank();
  rz.dim = 2 * rz.m - rz.l;
  rz.completion = std::move(completion);
  if (static_cast<int>(rz.completion.size()) != rz.m - rz.l)
    fail(Errc::BadCompletion, "completion must have m - l rows");
  for (const auto& row : rz.completion)
    if (static_cast<int>(row.size()) != rz.m) fail(Errc::BadCompletion, "completion row length");
  rz.pairings.assign(rz.dim, IntVec(rz.m));
  for (int k = 0; k < rz.m; ++k)
    for (int j = 0; j < rz.m; ++j) rz.pairings[k][j] = A.entry(k, j);
  for (int k = rz.m; k < rz.dim; ++k) rz.pairings[k] = rz.completion[k - rz.m];
  if (rational_rank(to_rational(rz.pairings)) != rz.m)
    fail(Errc::BadCompletion, "stacked pairing matrix does not have full column rank");
  return rz;
}

}  // namespace

Realization complete_realization(const CartanMatrix& A) {
  const int m = A.size();
  RatMat ra(m, RatVec(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ra[i][j] = Rat(A.entry(i, j));
  const std::vector<int> pivots = pivot_columns(ra);
  Subset pivot_set = 0;
  for (int p : pivots) pivot_set |= (Subset{1} << p);
  IntMat completion;
  for (int j = 0; j < m; ++j) {
    if (subset_contains(pivot_set, j)) continue;
    IntVec row(m, Int(0));
    row[j] = 1;
    completion.push_back(std::move(row));
  }
  return assemble_realization(A, std::move(completion));
}

Realization make_realization(const CartanMatrix& A, const IntMat& completion) {
  return assemble_realization(A, completion);
}

bool q_sat_member(const Realization& rz, const RatVec& weight_coords) {
  if (static_cast<int>(weight_coords.size()) != rz.dim)
    fail(Errc::InvalidArgument, "weight has wrong dimension");
  RatMat columns(rz.dim, RatVec(rz.m));
  for (int k = 0; k < rz.dim; ++k)
    for (int j = 0; j < rz.m; ++j) columns[k][j] = Rat(rz.pairings[k][j]);
  return solve_exact(std::move(columns), weight_coords).has_value();
}

}  // namespace weylmon
