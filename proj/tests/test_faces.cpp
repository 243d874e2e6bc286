#include <doctest.h>

#include <algorithm>
#include <memory>

#include "weylmon/faces.hpp"

using namespace weylmon;

namespace {

struct Fixture {
  std::unique_ptr<WeylGroup> W;
  std::unique_ptr<DominantPoint> dp;
};

Fixture make_fixture(const std::vector<std::vector<long long>>& entries, RatVec mu) {
  Fixture fx;
  CartanMatrix A = CartanMatrix::validate(entries);
  Realization rz = complete_realization(A);
  fx.W = std::make_unique<WeylGroup>(std::move(A), std::move(rz));
  fx.dp = std::make_unique<DominantPoint>(*fx.W, std::move(mu));
  return fx;
}

Fixture a2() { return make_fixture({{2, -1}, {-1, 2}}, {Rat(3), Rat(2)}); }
Fixture a1aff() { return make_fixture({{2, -2}, {-2, 2}}, {Rat(1), Rat(0), Rat(0)}); }
Fixture aab() { return make_fixture({{2, -2}, {-3, 2}}, {Rat(1), Rat(1)}); }

}  // namespace

TEST_CASE("mu-connected parts and I_*") {
  const Fixture f1 = a1aff();
  CHECK(f1.dp->j0() == subset_of({1}));
  CHECK(f1.dp->mu_connected_part(subset_of({1})) == 0);
  CHECK(f1.dp->mu_connected_part(subset_of({0, 1})) == subset_of({0, 1}));
  CHECK(f1.dp->i_star(0) == subset_of({1}));
  CHECK(f1.dp->i_star(subset_of({0})) == 0);
  CHECK_THROWS_AS(f1.dp->i_star(subset_of({1})), Error);

  const Fixture f2 = a2();
  CHECK(f2.dp->j0() == 0);
  CHECK(f2.dp->mu_connected_part(subset_of({0})) == subset_of({0}));
  CHECK(f2.dp->i_star(subset_of({0})) == 0);
}

TEST_CASE("fundamental face lattices of the worked examples") {
  CHECK(a2().dp->fundamental_faces().size() == 5);
  CHECK(a1aff().dp->fundamental_faces().size() == 4);
  CHECK(aab().dp->fundamental_faces().size() == 5);

  const Fixture f = a1aff();
  const auto& faces = f.dp->fundamental_faces();
  CHECK(faces[0].is_empty);
  CHECK(faces[0].lambda == subset_of({0, 1}));
  // vertex: I = {}, I_* = J0 = {2}
  CHECK(faces[1].I == 0);
  CHECK(faces[1].i_star == subset_of({1}));
  CHECK(faces[1].lambda == subset_of({1}));
  // edge: I = {1}, I_* = {} since a_21 != 0
  CHECK(faces[2].I == subset_of({0}));
  CHECK(faces[2].i_star == 0);
  // hull
  CHECK(faces[3].I == subset_of({0, 1}));
  CHECK(faces[3].dim == 2);
}

TEST_CASE("canonicalize_face strips the isotropy part") {
  const Fixture f = a2();
  const WeylGroup& W = *f.W;
  SUBCASE("r2 fixes the fundamental edge F_{alpha2}") {
    const Face face = canonicalize_face(*f.dp, W.generator(1), subset_of({1}));
    CHECK(face.sigma.is_identity());
    CHECK(f.dp->fundamental_faces()[face.base].I == subset_of({1}));
  }
  SUBCASE("the vertex face") {
    const Face face = canonicalize_face(*f.dp, W.identity(), 0);
    CHECK(face == fundamental_face(*f.dp, 0));
    CHECK(dimension(*f.dp, face) == 0);
  }
  SUBCASE("non mu-connected I is replaced by its mu-connected part") {
    const Fixture g = a1aff();
    const Face face = canonicalize_face(*g.dp, g.W->identity(), subset_of({1}));
    CHECK(face == fundamental_face(*g.dp, 0));  // the vertex
  }
}

TEST_CASE("face inclusion") {
  const Fixture f = a2();
  const WeylGroup& W = *f.W;
  const Face vertex = fundamental_face(*f.dp, 0);
  const Face e1 = fundamental_face(*f.dp, subset_of({0}));
  const Face e2 = fundamental_face(*f.dp, subset_of({1}));
  const Face hull = hull_face(*f.dp);
  const Face r2e2 = act_face(*f.dp, W.generator(1), e2);

  CHECK(face_leq(*f.dp, vertex, e1));
  CHECK(face_leq(*f.dp, vertex, e2));
  CHECK(face_leq(*f.dp, vertex, hull));
  CHECK(face_leq(*f.dp, e1, e1));
  CHECK(face_leq(*f.dp, empty_face(*f.dp), vertex));
  CHECK_FALSE(face_leq(*f.dp, e1, r2e2));
  CHECK_FALSE(face_leq(*f.dp, hull, e1));
}

TEST_CASE("face action") {
  const Fixture f = a2();
  const WeylGroup& W = *f.W;
  const Face e1 = fundamental_face(*f.dp, subset_of({0}));
  SUBCASE("isotropy fixes the face") {
    CHECK(act_face(*f.dp, W.generator(0), e1) == e1);
  }
  SUBCASE("r2 moves F_{alpha1} to the face with sigma = r2") {
    const Face moved = act_face(*f.dp, W.generator(1), e1);
    CHECK(moved.sigma == W.generator(1));
    CHECK(moved.base == e1.base);
  }
  SUBCASE("action is invertible on all enumerated faces") {
    const FaceEnumeration fe = enumerate_faces(*f.dp, 3);
    for (const Face& face : fe.faces)
      for (const WeylElement& w : W.elements_up_to_length(W.cartan().full_set(), 3)) {
        const Face back = act_face(*f.dp, w, act_face(*f.dp, W.inverse(w), face));
        CHECK(back == face);
      }
  }
}

TEST_CASE("meet and join on the A2 hexagon") {
  const Fixture f = a2();
  const WeylGroup& W = *f.W;
  const Face vertex = fundamental_face(*f.dp, 0);
  const Face e1 = fundamental_face(*f.dp, subset_of({0}));
  const Face e2 = fundamental_face(*f.dp, subset_of({1}));
  const Face hull = hull_face(*f.dp);
  const Face r2e2 = act_face(*f.dp, W.generator(1), e2);
  const Face far_edge = act_face(*f.dp, W.from_word({1, 0}), e1);

  CHECK(face_meet(*f.dp, e1, r2e2) == vertex);
  CHECK(face_meet(*f.dp, e1, far_edge) == empty_face(*f.dp));
  CHECK(face_meet(*f.dp, e1, e1) == e1);
  CHECK(face_meet(*f.dp, e1, hull) == e1);
  CHECK(face_meet(*f.dp, e1, empty_face(*f.dp)) == empty_face(*f.dp));

  CHECK(face_join(*f.dp, e1, r2e2) == hull);
  CHECK(face_join(*f.dp, e1, e1) == e1);
  CHECK(face_join(*f.dp, e1, empty_face(*f.dp)) == e1);
  CHECK(face_join(*f.dp, vertex, e2) == e2);
}

TEST_CASE("lattice laws on enumerated faces") {
  auto run = [](const Fixture& f, int bound) {
    const FaceEnumeration fe = enumerate_faces(*f.dp, bound);
    for (const Face& x : fe.faces) {
      for (const Face& y : fe.faces) {
        const Face m = face_meet(*f.dp, x, y);
        const Face j = face_join(*f.dp, x, y);
        CHECK(m == face_meet(*f.dp, y, x));
        CHECK(j == face_join(*f.dp, y, x));
        CHECK(face_leq(*f.dp, m, x));
        CHECK(face_leq(*f.dp, m, y));
        CHECK(face_leq(*f.dp, x, j));
        CHECK(face_leq(*f.dp, y, j));
        // Least upper bound / greatest lower bound among the enumerated faces.
        for (const Face& z : fe.faces) {
          if (face_leq(*f.dp, x, z) && face_leq(*f.dp, y, z)) CHECK(face_leq(*f.dp, j, z));
          if (face_leq(*f.dp, z, x) && face_leq(*f.dp, z, y)) CHECK(face_leq(*f.dp, z, m));
        }
      }
    }
  };
  run(a2(), 3);
  run(a1aff(), 3);
  run(aab(), 3);
}

TEST_CASE("isotropy and stabilizer types") {
  const Fixture f2 = a2();
  CHECK(isotropy_type(*f2.dp, hull_face(*f2.dp)).subset == subset_of({0, 1}));
  CHECK(stabilizer_type(*f2.dp, hull_face(*f2.dp)).subset == 0);
  CHECK(stabilizer_type(*f2.dp, empty_face(*f2.dp)).subset == subset_of({0, 1}));

  const Fixture f1 = a1aff();
  CHECK(stabilizer_type(*f1.dp, fundamental_face(*f1.dp, 0)).subset == subset_of({1}));
}

TEST_CASE("dimension") {
  const Fixture f = a2();
  CHECK(dimension(*f.dp, hull_face(*f.dp)) == 2);
  CHECK(dimension(*f.dp, fundamental_face(*f.dp, 0)) == 0);
  CHECK(dimension(*f.dp, fundamental_face(*f.dp, subset_of({0}))) == 1);
  CHECK(dimension(*f.dp, empty_face(*f.dp)) == -1);
}

TEST_CASE("face enumeration counts") {
  SUBCASE("A2 at bound 3: the full 14-face lattice") {
    const Fixture f = a2();
    const FaceEnumeration fe = enumerate_faces(*f.dp, 3);
    CHECK(fe.faces.size() == 14);
    CHECK(fe.count_by_dim.at(-1) == 1);
    CHECK(fe.count_by_dim.at(0) == 6);
    CHECK(fe.count_by_dim.at(1) == 6);
    CHECK(fe.count_by_dim.at(2) == 1);
    // A vertex needs sigma of length 3, so the heuristic flag stays false;
    // one step further nothing new appears.
    CHECK(enumerate_faces(*f.dp, 4).complete);
    CHECK(enumerate_faces(*f.dp, 4).faces.size() == 14);
  }
  SUBCASE("bound 0 gives exactly the fundamental faces") {
    const Fixture f = a2();
    const FaceEnumeration fe = enumerate_faces(*f.dp, 0);
    CHECK(fe.faces.size() == f.dp->fundamental_faces().size());
  }
  SUBCASE("affine A1, bound 4: truncation of the infinite lattice") {
    const Fixture f = a1aff();
    const FaceEnumeration fe = enumerate_faces(*f.dp, 4);
    // One coset representative per length on each side of the parabola:
    // 5 vertices and 5 edges within the bound, plus the hull and the empty
    // face.
    CHECK_FALSE(fe.complete);
    CHECK(fe.count_by_dim.at(-1) == 1);
    CHECK(fe.count_by_dim.at(0) == 5);
    CHECK(fe.count_by_dim.at(1) == 5);
    CHECK(fe.count_by_dim.at(2) == 1);
    CHECK(fe.faces.size() == 12);
    // Deterministic ordering by (dim, sigma, I).
    for (size_t i = 1; i < fe.faces.size(); ++i) {
      const int d0 = dimension(*f.dp, fe.faces[i - 1]);
      const int d1 = dimension(*f.dp, fe.faces[i]);
      CHECK(d0 <= d1);
    }
  }
}

TEST_CASE("cross-section property: fundamental bases partition enumerated faces") {
  const Fixture f = a2();
  const FaceEnumeration fe = enumerate_faces(*f.dp, 3);
  // Every face is a W-translate of exactly one fundamental face.
  for (const Face& face : fe.faces) {
    if (f.dp->fundamental_faces()[face.base].is_empty) continue;
    const Face fund = fundamental_face(*f.dp, f.dp->fundamental_faces()[face.base].I);
    CHECK(act_face(*f.dp, face.sigma, fund) == face);
    // No two distinct fundamental faces are W-equivalent.
    for (const auto& other : f.dp->fundamental_faces()) {
      if (other.is_empty || other.I == f.dp->fundamental_faces()[face.base].I) continue;
      for (const WeylElement& w : f.W->elements_up_to_length(f.W->cartan().full_set(), 3))
        CHECK_FALSE(act_face(*f.dp, w, fundamental_face(*f.dp, other.I)) == face);
    }
  }
}

TEST_CASE("mu-connected subsets form a lattice") {
  const Fixture f =
      make_fixture({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {Rat(1), Rat(0), Rat(2)});
  for (Subset a = 0; a < 8; ++a) {
    for (Subset b = 0; b < 8; ++b) {
      if (!f.dp->is_mu_connected(a) || !f.dp->is_mu_connected(b)) continue;
      CHECK(f.dp->is_mu_connected(a | b));  // join
      const Subset meet = f.dp->mu_connected_part(a & b);
      CHECK(f.dp->is_mu_connected(meet));
      // greatest mu-connected lower bound
      for (Subset c = 0; c < 8; ++c) {
        if (!f.dp->is_mu_connected(c)) continue;
        if ((c & ~a) == 0 && (c & ~b) == 0) CHECK((c & ~meet) == 0);
      }
    }
    // the mu-connected part is the biggest mu-connected subset inside a
    const Subset part = f.dp->mu_connected_part(a);
    CHECK((part & ~a) == 0);
    for (Subset c = 0; c < 8; ++c)
      if (f.dp->is_mu_connected(c) && (c & ~a) == 0) CHECK((c & ~part) == 0);
  }
}

TEST_CASE("point stratification") {
  const Fixture f2 = a2();
  SUBCASE("mu itself is the vertex stratum") {
    auto st = stratify_point(*f2.dp, f2.dp->mu());
    REQUIRE(st.has_value());
    CHECK(st->support == 0);
  }
  SUBCASE("an interior dominant point") {
    auto st = stratify_point(*f2.dp, {Rat(2), Rat(1)});  // mu - alpha1 - alpha2
    REQUIRE(st.has_value());
    CHECK(st->support == subset_of({0, 1}));
    CHECK(st->coefficients == RatVec{Rat(1), Rat(1)});
  }
  SUBCASE("support inside J0 is rejected") {
    const Fixture f1 = a1aff();
    RatVec eta = f1.dp->mu();
    const IntVec a2root = f1.W->realization().root_coords(1);
    for (int k = 0; k < 3; ++k) eta[k] -= Rat(a2root[k]);
    // eta = mu - alpha2 is dominant: pairings (2, -... ) check: must be
    // dominant to avoid the error path.
    bool dominant = eta[0] >= 0 && eta[1] >= 0;
    if (dominant) {
      CHECK_FALSE(stratify_point(*f1.dp, eta).has_value());
    } else {
      CHECK_THROWS_AS(stratify_point(*f1.dp, eta), Error);
    }
  }
  SUBCASE("non-dominant points throw") {
    CHECK_THROWS_AS(stratify_point(*f2.dp, {Rat(-1), Rat(0)}), Error);
  }
  SUBCASE("points outside mu - Q_+ are not in the hull") {
    CHECK_FALSE(stratify_point(*f2.dp, {Rat(4), Rat(3)}).has_value());
  }
}

TEST_CASE("chamber closeness criterion") {
  CHECK(hull_chamber_closed(*a2().dp));
  CHECK(hull_chamber_closed(*a1aff().dp));
  CHECK(hull_chamber_closed(*aab().dp));
  // Indefinite rank 3 with an affine 2x2 block inside J0.
  const Fixture bad =
      make_fixture({{2, -2, -1}, {-2, 2, 0}, {-1, 0, 2}}, {Rat(0), Rat(0), Rat(1)});
  CHECK(bad.dp->j0() == subset_of({0, 1}));
  CHECK(bad.dp->pi_star() == subset_of({0, 1, 2}));
  CHECK_FALSE(hull_chamber_closed(*bad.dp));
}

TEST_CASE("edges at mu") {
  SUBCASE("A2: exactly the simple roots") {
    const Fixture f = a2();
    const EdgeReport r = edges_at_mu(*f.dp, 100);
    CHECK(r.finite);
    CHECK_FALSE(r.truncated);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == IntVec{Int(0), Int(1)});
    CHECK(r.roots[1] == IntVec{Int(1), Int(0)});
  }
  SUBCASE("affine A1: alpha1 and alpha1 + 2 alpha2") {
    const Fixture f = a1aff();
    const EdgeReport r = edges_at_mu(*f.dp, 100);
    CHECK(r.finite);
    REQUIRE(r.roots.size() == 2);
    CHECK(r.roots[0] == IntVec{Int(1), Int(0)});
    CHECK(r.roots[1] == IntVec{Int(1), Int(2)});
  }
  SUBCASE("J0 empty gives exactly J_>") {
    const Fixture f = aab();
    const EdgeReport r = edges_at_mu(*f.dp, 100);
    CHECK(r.finite);
    CHECK(r.roots.size() == 2);
  }
}
