#include "weylmon/faces.hpp"

#include <algorithm>
#include <set>

namespace weylmon {

DominantPoint::DominantPoint(const WeylGroup& W, RatVec mu) : W_(&W), mu_(std::move(mu)) {
  const int m = W.num_generators();
  if (static_cast<int>(mu_.size()) != W.dim())
    fail(Errc::InvalidArgument, "mu has wrong dimension");
  for (int i = 0; i < m; ++i) {
    if (mu_[i] < 0) fail(Errc::DominanceViolated, "pairing with coroot " + std::to_string(i + 1));
    if (mu_[i] == 0)
      j0_ |= (Subset{1} << i);
    else
      jgt_ |= (Subset{1} << i);
  }
  pi_star_ = mu_connected_part(W.cartan().full_set());

  FundamentalFace empty;
  empty.is_empty = true;
  empty.lambda = W.cartan().full_set();
  empty.i_star = W.cartan().full_set();
  fundamental_.push_back(empty);
  std::vector<Subset> connected;
  for (Subset I = 0; I < (Subset{1} << m); ++I)
    if (is_mu_connected(I)) connected.push_back(I);
  std::sort(connected.begin(), connected.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return a < b;
  });
  for (Subset I : connected) {
    FundamentalFace f;
    f.I = I;
    f.i_star = i_star(I);
    f.lambda = I | f.i_star;
    f.dim = subset_size(I);
    index_of_[I] = static_cast<int>(fundamental_.size());
    fundamental_.push_back(f);
  }
}

bool DominantPoint::is_mu_connected(Subset I) const {
  for (Subset comp : dynkin_components(W_->cartan(), I))
    if ((comp & jgt_) == 0) return false;
  return true;
}

Subset DominantPoint::mu_connected_part(Subset I) const {
  Subset out = 0;
  for (Subset comp : dynkin_components(W_->cartan(), I))
    if ((comp & jgt_) != 0) out |= comp;
  return out;
}

Subset DominantPoint::i_star(Subset I) const {
  if (!is_mu_connected(I)) fail(Errc::NotMuConnected, subset_to_string(I));
  Subset out = 0;
  for (int a : subset_indices(j0_ & ~I)) {
    bool separated = true;
    for (int b : subset_indices(I))
      if (W_->cartan().entry(a, b) != 0) separated = false;
    if (separated) out |= (Subset{1} << a);
  }
  return out;
}

int DominantPoint::face_index(Subset I) const {
  auto it = index_of_.find(I);
  if (it == index_of_.end()) fail(Errc::NotMuConnected, subset_to_string(I));
  return it->second;
}

int DominantPoint::top_face_index() const { return face_index(pi_star_); }

Face empty_face(const DominantPoint& dp) { return Face{dp.group().identity(), 0}; }

Face hull_face(const DominantPoint& dp) {
  return Face{dp.group().identity(), dp.top_face_index()};
}

Face fundamental_face(const DominantPoint& dp, Subset I) {
  return Face{dp.group().identity(), dp.face_index(I)};
}

Face canonicalize_face(const DominantPoint& dp, const WeylElement& w, Subset I) {
  const Subset K = dp.mu_connected_part(I);
  const int base = dp.face_index(K);
  const FundamentalFace& f = dp.fundamental_faces()[base];
  return Face{dp.group().min_coset_rep(w, f.lambda, Side::Right), base};
}

Face act_face(const DominantPoint& dp, const WeylElement& w, const Face& f) {
  const FundamentalFace& base = dp.fundamental_faces()[f.base];
  const WeylElement moved = dp.group().multiply(w, f.sigma);
  if (base.is_empty) return empty_face(dp);
  return canonicalize_face(dp, moved, base.I);
}

bool face_leq(const DominantPoint& dp, const Face& f1, const Face& f2) {
  const FundamentalFace& b1 = dp.fundamental_faces()[f1.base];
  const FundamentalFace& b2 = dp.fundamental_faces()[f2.base];
  if (b1.is_empty) return true;
  if (b2.is_empty) return false;
  if ((b1.I & ~b2.I) != 0) return false;
  const WeylGroup& W = dp.group();
  const WeylElement v = W.multiply(W.inverse(f1.sigma), f2.sigma);
  // v in W_{I_*} W_{I'} iff the minimal double coset representative is 1.
  return W.double_coset_factorize(v, b1.i_star, b2.I).middle.is_identity();
}

Face face_meet(const DominantPoint& dp, const Face& f1, const Face& f2) {
  const FundamentalFace& b1 = dp.fundamental_faces()[f1.base];
  const FundamentalFace& b2 = dp.fundamental_faces()[f2.base];
  if (b1.is_empty || b2.is_empty) return empty_face(dp);
  const WeylGroup& W = dp.group();
  const WeylElement v = W.multiply(W.inverse(f1.sigma), f2.sigma);
  const DoubleCosetFactorization fac = W.double_coset_factorize(v, b1.lambda, b2.lambda);
  if (!W.in_standard_parabolic(fac.middle, dp.j0())) return empty_face(dp);
  // u(I2) in Pi: keep the simple roots of I2 whose u-image is again simple.
  Subset u_image = 0;
  for (int b : subset_indices(b2.I)) {
    const IntVec img = W.act_on_root(fac.middle, W.simple_root(b));
    for (int a = 0; a < W.num_generators(); ++a) {
      bool is_ea = img[a] == 1;
      if (is_ea) {
        for (int j = 0; j < W.num_generators(); ++j)
          if (j != a && img[j] != 0) is_ea = false;
      }
      if (is_ea) {
        u_image |= (Subset{1} << a);
        break;
      }
    }
  }
  const Subset K = dp.mu_connected_part(b1.I & u_image);
  return canonicalize_face(dp, W.multiply(f1.sigma, fac.left), K);
}

Face face_join(const DominantPoint& dp, const Face& f1, const Face& f2) {
  const FundamentalFace& b1 = dp.fundamental_faces()[f1.base];
  const FundamentalFace& b2 = dp.fundamental_faces()[f2.base];
  if (b1.is_empty) return f2;
  if (b2.is_empty) return f1;
  const WeylGroup& W = dp.group();
  const WeylElement v = W.multiply(W.inverse(f1.sigma), f2.sigma);
  const DoubleCosetFactorization fac = W.double_coset_factorize(v, b1.i_star, b2.i_star);
  const Subset K = b1.I | b2.I | W.support(fac.middle);
  return canonicalize_face(dp, W.multiply(f1.sigma, fac.left), K);
}

int dimension(const DominantPoint& dp, const Face& f) {
  return dp.fundamental_faces()[f.base].dim;
}

ParabolicDescriptor isotropy_type(const DominantPoint& dp, const Face& f) {
  return ParabolicDescriptor{f.sigma, dp.fundamental_faces()[f.base].lambda};
}

ParabolicDescriptor stabilizer_type(const DominantPoint& dp, const Face& f) {
  return ParabolicDescriptor{f.sigma, dp.fundamental_faces()[f.base].i_star};
}

FaceEnumeration enumerate_faces(const DominantPoint& dp, int max_sigma_length) {
  const WeylGroup& W = dp.group();
  FaceEnumeration out;
  std::set<Face> seen;
  size_t boundary_hits = 0;
  const std::vector<WeylElement> elements =
      W.elements_up_to_length(W.cartan().full_set(), max_sigma_length);
  for (const WeylElement& w : elements) {
    for (size_t b = 0; b < dp.fundamental_faces().size(); ++b) {
      const FundamentalFace& base = dp.fundamental_faces()[b];
      const Face f = base.is_empty ? empty_face(dp) : canonicalize_face(dp, w, base.I);
      if (seen.insert(f).second &&
          static_cast<int>(f.sigma.length()) == max_sigma_length)
        ++boundary_hits;
    }
  }
  out.complete = boundary_hits == 0;
  out.faces.assign(seen.begin(), seen.end());
  std::sort(out.faces.begin(), out.faces.end(), [&](const Face& a, const Face& b) {
    const int da = dimension(dp, a), db = dimension(dp, b);
    if (da != db) return da < db;
    if (!(a.sigma == b.sigma)) return a.sigma < b.sigma;
    return dp.fundamental_faces()[a.base].I < dp.fundamental_faces()[b.base].I;
  });
  for (const Face& f : out.faces) ++out.count_by_dim[dimension(dp, f)];
  return out;
}

std::optional<Stratum> stratify_point(const DominantPoint& dp, const RatVec& eta) {
  const WeylGroup& W = dp.group();
  if (static_cast<int>(eta.size()) != W.dim())
    fail(Errc::InvalidArgument, "point has wrong dimension");
  for (int i = 0; i < W.num_generators(); ++i)
    if (eta[i] < 0) fail(Errc::DominanceViolated, "pairing with coroot " + std::to_string(i + 1));
  const int m = W.num_generators();
  RatMat columns(W.dim(), RatVec(m));
  for (int k = 0; k < W.dim(); ++k)
    for (int j = 0; j < m; ++j) columns[k][j] = Rat(W.realization().pairings[k][j]);
  RatVec rhs(W.dim());
  for (int k = 0; k < W.dim(); ++k) rhs[k] = dp.mu()[k] - eta[k];
  auto sol = solve_exact(std::move(columns), std::move(rhs));
  if (!sol) return std::nullopt;
  Stratum st;
  st.coefficients = *sol;
  for (int j = 0; j < m; ++j) {
    if (st.coefficients[j] < 0) return std::nullopt;
    if (st.coefficients[j] > 0) st.support |= (Subset{1} << j);
  }
  if (!dp.is_mu_connected(st.support)) return std::nullopt;
  return st;
}

bool hull_chamber_closed(const DominantPoint& dp) {
  return subset_is_finite_type(dp.group().cartan(), dp.pi_star() & dp.j0());
}

EdgeReport edges_at_mu(const DominantPoint& dp, size_t cap) {
  if (cap < 1) fail(Errc::InvalidArgument, "cap must be positive");
  const WeylGroup& W = dp.group();
  EdgeReport report;
  report.finite = hull_chamber_closed(dp);
  report.truncated = false;
  std::set<IntVec> seen;
  std::vector<IntVec> work;
  for (int b : subset_indices(dp.jgt())) {
    if (seen.size() >= cap) break;
    IntVec v = W.simple_root(b);
    if (seen.insert(v).second) work.push_back(v);
  }
  while (!work.empty() && !report.truncated) {
    IntVec v = std::move(work.back());
    work.pop_back();
    for (int i : subset_indices(dp.j0())) {
      IntVec u = v;
      W.reflect_root(i, u);
      if (seen.count(u)) continue;
      if (seen.size() >= cap) {
        report.truncated = true;
        break;
      }
      seen.insert(u);
      work.push_back(std::move(u));
    }
  }
  report.roots.assign(seen.begin(), seen.end());
  return report;
}

}  // namespace weylmon
