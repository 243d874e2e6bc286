#include "weylmon/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace weylmon {

namespace {

std::string ids_to_string(const std::vector<int>& ids) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ' ';
    os << ids[i];
  }
  os << ']';
  return os.str();
}

int affine_rank(const RatMat& coords, const std::vector<int>& ids) {
  if (ids.size() <= 1) return 0;
  RatMat rows;
  for (size_t t = 1; t < ids.size(); ++t) {
    RatVec d = coords[ids[t]];
    for (size_t j = 0; j < d.size(); ++j) d[j] -= coords[ids[0]][j];
    rows.push_back(std::move(d));
  }
  return rational_rank(std::move(rows));
}

// Enumerates size-k subsets of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

int GeomLattice::find(const std::vector<int>& vertex_ids) const {
  for (size_t i = 0; i < faces.size(); ++i)
    if (faces[i].vertex_ids == vertex_ids) return static_cast<int>(i);
  return -1;
}

bool GeomLattice::leq(int a, int b) const {
  return std::includes(faces[b].vertex_ids.begin(), faces[b].vertex_ids.end(),
                       faces[a].vertex_ids.begin(), faces[a].vertex_ids.end());
}

int GeomLattice::meet(int a, int b) const {
  std::vector<int> common;
  std::set_intersection(faces[a].vertex_ids.begin(), faces[a].vertex_ids.end(),
                        faces[b].vertex_ids.begin(), faces[b].vertex_ids.end(),
                        std::back_inserter(common));
  return find(common);
}

int GeomLattice::join(int a, int b) const {
  // The faces above both are closed under intersection, so their common
  // vertex set is the least upper bound.
  std::vector<int> acc;
  bool first = true;
  for (size_t i = 0; i < faces.size(); ++i) {
    if (!leq(a, static_cast<int>(i)) || !leq(b, static_cast<int>(i))) continue;
    if (first) {
      acc = faces[i].vertex_ids;
      first = false;
    } else {
      std::vector<int> tmp;
      std::set_intersection(acc.begin(), acc.end(), faces[i].vertex_ids.begin(),
                            faces[i].vertex_ids.end(), std::back_inserter(tmp));
      acc = std::move(tmp);
    }
  }
  return first ? -1 : find(acc);
}

GeomLattice geometric_face_lattice(const std::vector<RatVec>& input_points) {
  GeomLattice lat;
  {
    std::set<RatVec> dedup(input_points.begin(), input_points.end());
    lat.points.assign(dedup.begin(), dedup.end());
  }
  const int n = static_cast<int>(lat.points.size());
  if (n == 0) fail(Errc::InvalidArgument, "no points");
  if (n > 200) fail(Errc::TooLarge, "more than 200 points");
  const size_t ambient = lat.points[0].size();

  // Affine coordinates inside the hull: pick a maximal independent set of
  // difference vectors as basis.
  RatMat diffs;
  for (int i = 1; i < n; ++i) {
    RatVec d(ambient);
    for (size_t j = 0; j < ambient; ++j) d[j] = lat.points[i][j] - lat.points[0][j];
    diffs.push_back(std::move(d));
  }
  RatMat basis;
  for (const RatVec& d : diffs) {
    RatMat probe = basis;
    probe.push_back(d);
    if (rational_rank(probe) > static_cast<int>(basis.size())) basis.push_back(d);
  }
  const int d = static_cast<int>(basis.size());
  if (d > 4) fail(Errc::TooLarge, "hull dimension exceeds 4");
  lat.hull_dim = d;

  lat.internal_coords.assign(n, RatVec(d, Rat(0)));
  if (d > 0) {
    RatMat columns(ambient, RatVec(d));
    for (size_t r = 0; r < ambient; ++r)
      for (int c = 0; c < d; ++c) columns[r][c] = basis[c][r];
    for (int i = 0; i < n; ++i) {
      RatVec rhs(ambient);
      for (size_t r = 0; r < ambient; ++r) rhs[r] = lat.points[i][r] - lat.points[0][r];
      auto sol = solve_exact(columns, rhs);
      assert(sol.has_value());
      lat.internal_coords[i] = *sol;
    }
  }

  std::vector<int> all_ids(n);
  for (int i = 0; i < n; ++i) all_ids[i] = i;

  // Facets by exhaustive hyperplane enumeration over d-subsets.
  std::map<std::vector<int>, std::pair<RatVec, Rat>> facets;
  if (d >= 1) {
    std::vector<int> combo(d);
    for (int i = 0; i < d; ++i) combo[i] = i;
    do {
      // Hyperplane h.q = c through the chosen points: kernel of the
      // homogeneous system with unknowns (h, c).
      RatMat sys(d, RatVec(d + 1));
      for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) sys[r][c] = lat.internal_coords[combo[r]][c];
        sys[r][d] = Rat(-1);
      }
      RatMat ech = sys;
      std::vector<int> pivots = pivot_columns(ech);
      if (static_cast<int>(pivots.size()) != d) continue;  // affinely dependent subset
      // Kernel vector: set the free unknown to 1 and back-substitute via RREF.
      int free_col = d;
      {
        Subset pset = 0;
        for (int p : pivots) pset |= (Subset{1} << p);
        for (int c = 0; c <= d; ++c)
          if (!subset_contains(pset, c)) free_col = c;
      }
      RatVec hc(d + 1, Rat(0));
      hc[free_col] = 1;
      {
        // Solve sys * x = 0 with x[free_col] = 1 by moving the free column to
        // the right-hand side.
        RatMat lhs(d, RatVec(d));
        RatVec rhs(d);
        for (int r = 0; r < d; ++r) {
          int cc = 0;
          for (int c = 0; c <= d; ++c) {
            if (c == free_col) continue;
            lhs[r][cc++] = sys[r][c];
          }
          rhs[r] = -sys[r][free_col];
        }
        auto sol = solve_exact(std::move(lhs), std::move(rhs));
        if (!sol) continue;
        int cc = 0;
        for (int c = 0; c <= d; ++c) {
          if (c == free_col) continue;
          hc[c] = (*sol)[cc++];
        }
      }
      RatVec h(hc.begin(), hc.begin() + d);
      Rat c0 = hc[d];
      bool h_zero = true;
      for (const Rat& x : h)
        if (x != 0) h_zero = false;
      if (h_zero) continue;
      int pos = 0, neg = 0;
      std::vector<int> on;
      for (int i = 0; i < n; ++i) {
        const Rat s = dot(h, lat.internal_coords[i]) - c0;
        if (s > 0) ++pos;
        else if (s < 0) ++neg;
        else on.push_back(i);
      }
      if (pos > 0 && neg > 0) continue;
      if (pos == 0 && neg == 0) continue;  // cannot happen when hull has dim d
      if (pos > 0) {  // orient so the hull is on the <= side
        for (Rat& x : h) x = -x;
        c0 = -c0;
      }
      facets.emplace(std::move(on), std::make_pair(std::move(h), std::move(c0)));
    } while (next_combination(combo, n));
  }

  // All faces: intersections of facets, plus the hull and the empty face.
  std::set<std::vector<int>> face_sets{all_ids, {}};
  std::vector<std::vector<int>> work{all_ids};
  while (!work.empty()) {
    std::vector<int> cur = std::move(work.back());
    work.pop_back();
    for (const auto& [fids, fn] : facets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fids.begin(), fids.end(),
                            std::back_inserter(inter));
      if (face_sets.insert(inter).second) work.push_back(std::move(inter));
    }
  }

  for (const std::vector<int>& ids : face_sets) {
    GeomFace f;
    f.vertex_ids = ids;
    f.dim = ids.empty() ? -1 : affine_rank(lat.internal_coords, ids);
    if (!ids.empty() && ids != all_ids) {
      // Supporting functional: sum of the facet functionals through the face.
      // Each facet has the hull on its <= side, so the face is the argmax.
      RatVec h(d, Rat(0));
      Rat c0 = 0;
      for (const auto& [fids, fn] : facets) {
        if (!std::includes(fids.begin(), fids.end(), ids.begin(), ids.end())) continue;
        for (int c = 0; c < d; ++c) h[c] += fn.first[c];
        c0 += fn.second;
      }
      f.functional = std::move(h);
      f.offset = std::move(c0);
      // Exactness witness: the argmax of the functional is the face.
      for (int i = 0; i < n; ++i) {
        const Rat s = dot(f.functional, lat.internal_coords[i]) - f.offset;
        const bool member = std::binary_search(ids.begin(), ids.end(), i);
        if (member ? s != 0 : s >= 0)
          fail(Errc::InvalidArgument, "supporting functional witness failed");
      }
    }
    lat.faces.push_back(std::move(f));
  }
  std::sort(lat.faces.begin(), lat.faces.end(), [](const GeomFace& a, const GeomFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertex_ids < b.vertex_ids;
  });
  return lat;
}

namespace {

struct ComparisonInput {
  std::vector<Face> comb_faces;
  GeomLattice geom;
  std::map<RatVec, int> point_id;
};

OracleReport run_comparison(const DominantPoint& dp, const ComparisonInput& in) {
  const WeylGroup& W = dp.group();
  OracleReport report;
  report.combinatorial_faces = in.comb_faces.size();
  report.geometric_faces = in.geom.faces.size();
  auto blame = [&](const std::string& msg) {
    report.ok = false;
    if (report.mismatches.size() < 32) report.mismatches.push_back(msg);
  };

  // Vertex sets of the combinatorial faces.
  std::vector<std::vector<int>> vertex_sets(in.comb_faces.size());
  std::vector<int> geom_index(in.comb_faces.size(), -1);
  std::set<std::vector<int>> used;
  for (size_t i = 0; i < in.comb_faces.size(); ++i) {
    const Face& f = in.comb_faces[i];
    const FundamentalFace& base = dp.fundamental_faces()[f.base];
    std::vector<int> ids;
    if (!base.is_empty) {
      const OrbitResult orbit = W.orbit_enumerate(dp.mu(), base.I, 100000);
      if (!orbit.complete) {
        blame("parabolic orbit did not close");
        continue;
      }
      for (const RatVec& p : orbit.points) {
        auto it = in.point_id.find(W.act_on_weight(f.sigma, p));
        if (it == in.point_id.end()) {
          blame("face vertex missing from the hull points");
          continue;
        }
        ids.push_back(it->second);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    }
    vertex_sets[i] = ids;
    geom_index[i] = in.geom.find(ids);
    if (geom_index[i] < 0) blame("no geometric face with vertices " + ids_to_string(ids));
    if (!used.insert(ids).second) blame("two faces share the vertex set " + ids_to_string(ids));
  }
  if (used.size() != in.geom.faces.size())
    blame("face counts differ: " + std::to_string(used.size()) + " combinatorial vs " +
          std::to_string(in.geom.faces.size()) + " geometric");
  if (!report.ok) return report;

  for (size_t i = 0; i < in.comb_faces.size(); ++i) {
    const Face& f = in.comb_faces[i];
    const int gdim = in.geom.faces[geom_index[i]].dim;
    if (dimension(dp, f) != gdim)
      blame("dimension mismatch at face " + ids_to_string(vertex_sets[i]));

    // Stabilizer generators fix the vertex set pointwise; isotropy generators
    // fix it setwise.
    const FundamentalFace& base = dp.fundamental_faces()[f.base];
    if (!base.is_empty) {
      const WeylElement sigma_inv = W.inverse(f.sigma);
      for (int b : subset_indices(base.i_star)) {
        const WeylElement g =
            W.multiply(f.sigma, W.multiply(W.generator(b), sigma_inv));
        for (int id : vertex_sets[i]) {
          if (W.act_on_weight(g, in.geom.points[id]) != in.geom.points[id])
            blame("stabilizer generator moves a vertex of " + ids_to_string(vertex_sets[i]));
        }
      }
      for (int b : subset_indices(base.lambda)) {
        const WeylElement g =
            W.multiply(f.sigma, W.multiply(W.generator(b), sigma_inv));
        std::set<RatVec> image;
        for (int id : vertex_sets[i]) image.insert(W.act_on_weight(g, in.geom.points[id]));
        for (int id : vertex_sets[i]) image.erase(in.geom.points[id]);
        if (!image.empty())
          blame("isotropy generator does not preserve " + ids_to_string(vertex_sets[i]));
      }
    }
  }

  for (size_t i = 0; i < in.comb_faces.size(); ++i) {
    for (size_t j = 0; j < in.comb_faces.size(); ++j) {
      ++report.pairs_checked;
      const bool comb_leq = face_leq(dp, in.comb_faces[i], in.comb_faces[j]);
      const bool geom_leq = in.geom.leq(geom_index[i], geom_index[j]);
      if (comb_leq != geom_leq) {
        blame("inclusion mismatch between " + ids_to_string(vertex_sets[i]) + " and " +
              ids_to_string(vertex_sets[j]));
        continue;
      }
      if (j < i) continue;  // meets and joins are symmetric
      const Face cm = face_meet(dp, in.comb_faces[i], in.comb_faces[j]);
      const Face cj = face_join(dp, in.comb_faces[i], in.comb_faces[j]);
      auto comb_pos = [&](const Face& f) -> int {
        for (size_t t = 0; t < in.comb_faces.size(); ++t)
          if (in.comb_faces[t] == f) return static_cast<int>(t);
        return -1;
      };
      const int mi = comb_pos(cm), ji = comb_pos(cj);
      if (mi < 0 || ji < 0) {
        blame("meet or join left the enumerated lattice");
        continue;
      }
      if (geom_index[mi] != in.geom.meet(geom_index[i], geom_index[j]))
        blame("meet mismatch between " + ids_to_string(vertex_sets[i]) + " and " +
              ids_to_string(vertex_sets[j]));
      if (geom_index[ji] != in.geom.join(geom_index[i], geom_index[j]))
        blame("join mismatch between " + ids_to_string(vertex_sets[i]) + " and " +
              ids_to_string(vertex_sets[j]));
    }
  }
  return report;
}

}  // namespace

OracleReport compare_lattices(const DominantPoint& dp) {
  const WeylGroup& W = dp.group();
  for (const ComponentType& t : classify_type(W.cartan()))
    if (t.kind != CartanKind::Finite)
      fail(Errc::FiniteTypeRequired, "component " + subset_to_string(t.component) + " is " +
                                         cartan_kind_name(t.kind));
  bool exhausted = false;
  const std::vector<WeylElement> elements =
      W.elements_up_to_length(W.cartan().full_set(), 1 << 20, &exhausted, 200000);
  assert(exhausted);
  int diameter = 0;
  for (const WeylElement& w : elements) diameter = std::max<int>(diameter, w.length());

  ComparisonInput in;
  const OrbitResult orbit = W.orbit_enumerate(dp.mu(), W.cartan().full_set(), 100000);
  assert(orbit.complete);
  in.geom = geometric_face_lattice(orbit.points);
  for (size_t i = 0; i < in.geom.points.size(); ++i)
    in.point_id[in.geom.points[i]] = static_cast<int>(i);
  in.comb_faces = enumerate_faces(dp, diameter).faces;
  return run_comparison(dp, in);
}

OracleReport compare_lattices_slice(const DominantPoint& dp, Subset I) {
  const WeylGroup& W = dp.group();
  const Subset K = dp.mu_connected_part(I);
  if (!subset_is_finite_type(W.cartan(), K))
    fail(Errc::FiniteTypeRequired, "slice " + subset_to_string(K) + " is not of finite type");
  bool exhausted = false;
  const std::vector<WeylElement> elements =
      W.elements_up_to_length(K, 1 << 20, &exhausted, 200000);
  assert(exhausted);

  ComparisonInput in;
  const OrbitResult orbit = W.orbit_enumerate(dp.mu(), K, 100000);
  assert(orbit.complete);
  in.geom = geometric_face_lattice(orbit.points);
  for (size_t i = 0; i < in.geom.points.size(); ++i)
    in.point_id[in.geom.points[i]] = static_cast<int>(i);
  std::set<Face> faces{empty_face(dp)};
  for (const WeylElement& w : elements)
    for (Subset J = 0; J < (Subset{1} << W.num_generators()); ++J) {
      if ((J & ~K) != 0) continue;
      if (!dp.is_mu_connected(J)) continue;
      faces.insert(canonicalize_face(dp, w, J));
    }
  in.comb_faces.assign(faces.begin(), faces.end());
  return run_comparison(dp, in);
}

}  // namespace weylmon
