#include "weylmon/numeric.hpp"

#include <cassert>

#include "weylmon/error.hpp"

namespace weylmon {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DiagonalNotTwo: return "DiagonalNotTwo";
    case Errc::PositiveOffDiagonal: return "PositiveOffDiagonal";
    case Errc::AsymmetricZero: return "AsymmetricZero";
    case Errc::BadCompletion: return "BadCompletion";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotDominantIntegral: return "NotDominantIntegral";
    case Errc::DominanceViolated: return "DominanceViolated";
    case Errc::NotMuConnected: return "NotMuConnected";
    case Errc::PiNotMuConnected: return "PiNotMuConnected";
    case Errc::NotIdempotent: return "NotIdempotent";
    case Errc::NotARealRoot: return "NotARealRoot";
    case Errc::TooLarge: return "TooLarge";
    case Errc::FiniteTypeRequired: return "FiniteTypeRequired";
    case Errc::ElementParseError: return "ElementParseError";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

void fail(Errc code, const std::string& detail) {
  throw Error(code, std::string(errc_name(code)) + ": " + detail);
}

RatVec to_rational(const IntVec& v) {
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

RatMat to_rational(const IntMat& a) {
  RatMat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = to_rational(a[i]);
  return out;
}

bool is_integral(const RatVec& v) {
  for (const Rat& x : v)
    if (denominator(x) != 1) return false;
  return true;
}

IntVec to_integral(const RatVec& v) {
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (denominator(v[i]) != 1) fail(Errc::InvalidArgument, "vector entry is not an integer");
    out[i] = numerator(v[i]);
  }
  return out;
}

Int determinant(IntMat a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) fail(Errc::InvalidArgument, "determinant of a non-square matrix");
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

// Row echelon form in place; returns the pivot column list.
std::vector<int> echelonize(RatMat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Rat inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rational_rank(RatMat a) { return static_cast<int>(echelonize(a).size()); }

std::vector<int> pivot_columns(RatMat a) { return echelonize(a); }

std::optional<RatVec> solve_exact(RatMat a, RatVec b) {
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) fail(Errc::InvalidArgument, "solve_exact: size mismatch");
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<int> pivots = echelonize(a);
  // A pivot in the appended column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

Rat dot(const RatVec& x, const RatVec& y) {
  assert(x.size() == y.size());
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

}  // namespace weylmon
