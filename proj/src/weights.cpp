#include "weylmon/weights.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace weylmon {

namespace {

std::string depth_to_string(const DepthVector& k) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < k.size(); ++i) {
    if (i) os << ',';
    os << k[i];
  }
  os << ')';
  return os.str();
}

long long depth_sum(const DepthVector& k) {
  long long s = 0;
  for (long long v : k) s += v;
  return s;
}

Subset depth_support(const DepthVector& k) {
  Subset s = 0;
  for (size_t i = 0; i < k.size(); ++i)
    if (k[i] > 0) s |= (Subset{1} << i);
  return s;
}

}  // namespace

TruncatedWeightSet TruncatedWeightSet::generate(const DominantPoint& dp, int depth) {
  const WeylGroup& W = dp.group();
  if (depth < 0) fail(Errc::InvalidArgument, "depth must be nonnegative");
  if (!is_integral(dp.mu())) fail(Errc::NotDominantIntegral, "mu is not integral");
  TruncatedWeightSet tws(dp, depth);
  const int m = W.num_generators();
  std::vector<std::set<DepthVector>> by_depth(depth + 1);
  const DepthVector origin(m, 0);
  by_depth[0].insert(origin);
  tws.present_.insert(origin);
  // Simple-root string recursion, level by level: when a weight at depth d is
  // processed every weight above it is already known, so the top of each
  // string is exact.
  for (int d = 0; d <= depth; ++d) {
    for (const DepthVector& k : by_depth[d]) {
      for (int i = 0; i < m; ++i) {
        long long q = 0;
        DepthVector up = k;
        while (up[i] > 0) {
          --up[i];
          if (!tws.present_.count(up)) break;
          ++q;
        }
        const Rat pair = tws.pairing(k, i);
        assert(denominator(pair) == 1);
        const long long down = q + static_cast<long long>(numerator(pair));
        DepthVector low = k;
        for (long long j = 1; j <= down; ++j) {
          ++low[i];
          if (d + j > depth) break;
          if (tws.present_.insert(low).second) by_depth[d + j].insert(low);
        }
      }
    }
  }
  return tws;
}

Rat TruncatedWeightSet::pairing(const DepthVector& k, int i) const {
  const WeylGroup& W = dp_->group();
  Rat p = dp_->mu()[i];
  for (int j = 0; j < W.num_generators(); ++j)
    p -= Rat(W.cartan().entry(i, j)) * Rat(k[j]);
  return p;
}

RatVec TruncatedWeightSet::coords(const DepthVector& k) const {
  const WeylGroup& W = dp_->group();
  RatVec c = dp_->mu();
  for (int j = 0; j < W.num_generators(); ++j) {
    if (k[j] == 0) continue;
    const IntVec rc = W.realization().root_coords(j);
    for (int t = 0; t < W.dim(); ++t) c[t] -= Rat(k[j]) * Rat(rc[t]);
  }
  return c;
}

std::optional<DepthVector> TruncatedWeightSet::depth_of(const RatVec& coords) const {
  const WeylGroup& W = dp_->group();
  const int m = W.num_generators();
  RatMat columns(W.dim(), RatVec(m));
  for (int k = 0; k < W.dim(); ++k)
    for (int j = 0; j < m; ++j) columns[k][j] = Rat(W.realization().pairings[k][j]);
  RatVec rhs(W.dim());
  for (int k = 0; k < W.dim(); ++k) rhs[k] = dp_->mu()[k] - coords[k];
  auto sol = solve_exact(std::move(columns), std::move(rhs));
  if (!sol) return std::nullopt;
  DepthVector out(m);
  for (int j = 0; j < m; ++j) {
    if (denominator((*sol)[j]) != 1 || (*sol)[j] < 0) return std::nullopt;
    out[j] = static_cast<long long>(numerator((*sol)[j]));
  }
  return out;
}

const char* root_region_name(RootRegion r) {
  switch (r) {
    case RootRegion::Star: return "Star";
    case RootRegion::UpperStar: return "UpperStar";
    case RootRegion::Positive: return "Positive";
    case RootRegion::Negative: return "Negative";
  }
  return "?";
}

RootRegion classify_root(const DominantPoint& dp, const Face& f, const IntVec& gamma) {
  const WeylGroup& W = dp.group();
  if (!W.real_root_decompose(gamma)) fail(Errc::NotARealRoot, "classify_root");
  const FundamentalFace& base = dp.fundamental_faces()[f.base];
  if (base.is_empty) return RootRegion::Star;
  const IntVec moved = W.act_on_root(W.inverse(f.sigma), gamma);
  Subset supp = 0;
  bool negative = false;
  for (int j = 0; j < W.num_generators(); ++j) {
    if (moved[j] != 0) supp |= (Subset{1} << j);
    if (moved[j] < 0) negative = true;
  }
  if ((supp & ~base.lambda) == 0)
    return (supp & ~base.i_star) == 0 ? RootRegion::Star : RootRegion::UpperStar;
  return negative ? RootRegion::Negative : RootRegion::Positive;
}

FaceWeightSet face_weights(const TruncatedWeightSet& tws, const Face& f) {
  const DominantPoint& dp = tws.point();
  const FundamentalFace& base = dp.fundamental_faces()[f.base];
  FaceWeightSet out;
  out.complete = true;
  if (base.is_empty) return out;
  for (const DepthVector& k : tws.weights()) {
    if ((depth_support(k) & ~base.I) != 0) continue;
    if (f.sigma.is_identity()) {
      out.weights.insert(k);
      continue;
    }
    const RatVec moved = dp.group().act_on_weight(f.sigma, tws.coords(k));
    auto kd = tws.depth_of(moved);
    assert(kd.has_value());
    if (depth_sum(*kd) > tws.depth()) {
      out.complete = false;
      continue;
    }
    out.weights.insert(*kd);
  }
  return out;
}

namespace {

struct StringScan {
  bool boundary = false;  // left the truncation before the end was seen
  long long up = 0;       // q: steps with eta + t*gamma present
  long long down = 0;     // p
  std::vector<DepthVector> members;  // the whole string, top to bottom
};

StringScan scan_string(const TruncatedWeightSet& tws, const DepthVector& k,
                       const IntVec& gamma_coeffs) {
  StringScan scan;
  const int m = static_cast<int>(k.size());
  auto step = [&](long long t) {
    DepthVector d(m);
    for (int j = 0; j < m; ++j) {
      const Int v = Int(k[j]) - Int(t) * gamma_coeffs[j];
      d[j] = static_cast<long long>(v);
    }
    return d;
  };
  for (long long t = 1;; ++t) {
    DepthVector d = step(t);
    bool neg = false;
    for (long long v : d) neg = neg || v < 0;
    if (neg) break;
    if (depth_sum(d) > tws.depth()) {
      scan.boundary = true;
      break;
    }
    if (!tws.contains(d)) break;
    scan.up = t;
  }
  for (long long t = -1;; --t) {
    DepthVector d = step(t);
    bool neg = false;
    for (long long v : d) neg = neg || v < 0;
    if (neg) break;
    if (depth_sum(d) > tws.depth()) {
      scan.boundary = true;
      break;
    }
    if (!tws.contains(d)) break;
    scan.down = -t;
  }
  if (!scan.boundary)
    for (long long t = scan.up; t >= -scan.down; --t) scan.members.push_back(step(t));
  return scan;
}

}  // namespace

StringLawReport verify_string_laws(const TruncatedWeightSet& tws, const Face& f,
                                   int root_height_bound) {
  const DominantPoint& dp = tws.point();
  const WeylGroup& W = dp.group();
  StringLawReport report;
  const FaceWeightSet fw = face_weights(tws, f);
  if (dp.fundamental_faces()[f.base].is_empty) return report;

  std::vector<IntVec> roots = W.positive_real_roots_up_to_height(root_height_bound);
  const size_t npos = roots.size();
  for (size_t i = 0; i < npos; ++i) {
    IntVec neg = roots[i];
    for (Int& c : neg) c = -c;
    roots.push_back(std::move(neg));
  }

  for (const IntVec& gamma : roots) {
    ++report.roots_checked;
    const RootRegion region = classify_root(dp, f, gamma);
    bool found_multi = false, found_pos = false, found_neg = false;
    bool any_skip = !fw.complete;
    for (const DepthVector& k : fw.weights) {
      const StringScan scan = scan_string(tws, k, gamma);
      if (scan.boundary) {
        ++report.strings_skipped;
        any_skip = true;
        continue;
      }
      ++report.strings_checked;
      const Rat pair = W.pairing_with_coroot(tws.coords(k), gamma);
      auto blame = [&](const std::string& what) {
        report.violations.push_back(root_region_name(region) + std::string(" root, weight ") +
                                    depth_to_string(k) + ": " + what);
      };
      if (Rat(scan.down) - Rat(scan.up) != pair) blame("string ends violate p - q = <eta,gamma^vee>");
      switch (region) {
        case RootRegion::Star:
          if (scan.up != 0 || scan.down != 0) blame("string through a pointwise-fixed face is not a singleton");
          if (pair != 0) blame("nonzero pairing for a pointwise-fixing root");
          break;
        case RootRegion::UpperStar: {
          if (fw.complete)
            for (const DepthVector& d : scan.members)
              if (!fw.weights.count(d)) blame("string leaves the face at " + depth_to_string(d));
          if (scan.up + scan.down > 0) found_multi = true;
          break;
        }
        case RootRegion::Positive: {
          if (pair < 0) blame("negative pairing on the positive side");
          if (scan.up != 0) blame("eta + gamma is a weight");
          if (Rat(scan.down) != pair) blame("string does not end at the reflected weight");
          if (fw.complete)
            for (const DepthVector& d : scan.members)
              if (!(d == k) && fw.weights.count(d)) blame("extra face weight in the string");
          if (pair > 0) found_pos = true;
          break;
        }
        case RootRegion::Negative: {
          if (pair > 0) blame("positive pairing on the negative side");
          if (scan.down != 0) blame("eta - gamma is a weight");
          if (Rat(scan.up) != -pair) blame("string does not end at the reflected weight");
          if (fw.complete)
            for (const DepthVector& d : scan.members)
              if (!(d == k) && fw.weights.count(d)) blame("extra face weight in the string");
          if (pair < 0) found_neg = true;
          break;
        }
      }
    }
    auto blame_root = [&](const std::string& what) {
      report.violations.push_back(std::string(root_region_name(region)) + " root: " + what);
    };
    if (!any_skip) {
      if (region == RootRegion::UpperStar && !found_multi && !fw.weights.empty())
        blame_root("no string with more than one element");
      if (region == RootRegion::Positive && !found_pos && !fw.weights.empty())
        blame_root("no face weight with strictly positive pairing");
      if (region == RootRegion::Negative && !found_neg && !fw.weights.empty())
        blame_root("no face weight with strictly negative pairing");
    }
  }
  return report;
}

CrosscheckReport dominant_membership_crosscheck(const TruncatedWeightSet& tws) {
  const DominantPoint& dp = tws.point();
  const WeylGroup& W = dp.group();
  const int m = W.num_generators();
  CrosscheckReport report;
  DepthVector k(m, 0);
  for (;;) {
    if (depth_sum(k) <= tws.depth()) {
      bool dominant = true;
      const RatVec c = tws.coords(k);
      for (int i = 0; i < m && dominant; ++i)
        if (c[i] < 0) dominant = false;
      if (dominant) {
        ++report.checked;
        const bool in_module = tws.contains(k);
        const bool in_hull = stratify_point(dp, c).has_value();
        if (in_module != in_hull)
          report.mismatches.push_back(depth_to_string(k) + ": module=" +
                                      (in_module ? "yes" : "no") + " hull=" +
                                      (in_hull ? "yes" : "no"));
      }
    }
    // Odometer over depth vectors with entries bounded by the depth.
    int j = 0;
    while (j < m) {
      if (depth_sum(k) < tws.depth()) {
        ++k[j];
        break;
      }
      k[j] = 0;
      ++j;
    }
    if (j == m) break;
  }
  return report;
}

}  // namespace weylmon
