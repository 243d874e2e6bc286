#include "weylmon/renner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace weylmon {

RennerMonoid::RennerMonoid(const DominantPoint& dp) : dp_(&dp) {
  const CartanMatrix& A = dp.group().cartan();
  if (dp.mu_connected_part(A.full_set()) != A.full_set())
    fail(Errc::PiNotMuConnected, "a Dynkin component lies in the type of mu");
  for (size_t b = 0; b < dp.fundamental_faces().size(); ++b) {
    const FundamentalFace& f = dp.fundamental_faces()[b];
    CrossSectionEntry e;
    e.face_base = static_cast<int>(b);
    e.lambda_upper = f.is_empty ? 0 : f.I;
    e.lambda_lower = f.i_star;
    e.lambda = f.is_empty ? A.full_set() : f.lambda;
    lattice_.push_back(e);
  }
}

RennerElement RennerMonoid::make_element(const WeylElement& w, const Face& f) const {
  const WeylGroup& W = dp_->group();
  const FundamentalFace& base = dp_->fundamental_faces()[f.base];
  // Canonical representative of w sigma W_{I_*} sigma^{-1}.
  const WeylElement ws = W.multiply(w, f.sigma);
  const WeylElement rep = W.min_coset_rep(ws, base.i_star, Side::Right);
  return RennerElement{W.multiply(rep, W.inverse(f.sigma)), f};
}

RennerElement RennerMonoid::zero() const { return RennerElement{dp_->group().identity(), empty_face(*dp_)}; }

RennerElement RennerMonoid::one() const {
  return RennerElement{dp_->group().identity(), hull_face(*dp_)};
}

RennerElement RennerMonoid::unit(const WeylElement& w) const {
  return make_element(w, hull_face(*dp_));
}

RennerElement RennerMonoid::idempotent(const Face& f) const {
  return make_element(dp_->group().identity(), f);
}

RennerElement RennerMonoid::multiply(const RennerElement& x, const RennerElement& y) const {
  const WeylGroup& W = dp_->group();
  const Face moved = act_face(*dp_, W.inverse(y.unit), x.face);
  return make_element(W.multiply(x.unit, y.unit), face_meet(*dp_, moved, y.face));
}

RennerElement RennerMonoid::inverse(const RennerElement& x) const {
  const WeylGroup& W = dp_->group();
  return make_element(W.inverse(x.unit), act_face(*dp_, x.unit, x.face));
}

bool RennerMonoid::is_idempotent(const RennerElement& x) const {
  return x.unit == make_element(dp_->group().identity(), x.face).unit;
}

bool RennerMonoid::idempotents_leq(const RennerElement& e, const RennerElement& f) const {
  if (!is_idempotent(e) || !is_idempotent(f)) fail(Errc::NotIdempotent, "idempotents_leq");
  return face_leq(*dp_, e.face, f.face);
}

std::pair<WeylElement, const CrossSectionEntry*> RennerMonoid::conjugacy_normal_form(
    const RennerElement& e) const {
  if (!is_idempotent(e)) fail(Errc::NotIdempotent, "conjugacy_normal_form");
  return {e.face.sigma, &lattice_[e.face.base]};
}

IdempotentType RennerMonoid::centralizer_type(const RennerElement& e) const {
  if (!is_idempotent(e)) fail(Errc::NotIdempotent, "centralizer_type");
  IdempotentType t;
  t.centralizer = isotropy_type(*dp_, e.face);
  t.stabilizer = stabilizer_type(*dp_, e.face);
  if (dp_->fundamental_faces()[e.face.base].is_empty) {
    t.centralizer.subset = dp_->group().cartan().full_set();
    t.stabilizer.subset = dp_->group().cartan().full_set();
  }
  return t;
}

const CrossSectionEntry& RennerMonoid::cell_of(const RennerElement& x) const {
  return lattice_[x.face.base];
}

RennerEnumeration RennerMonoid::enumerate(int unit_length_bound, int sigma_length_bound) const {
  const WeylGroup& W = dp_->group();
  RennerEnumeration out;
  bool units_done = false, sigmas_done = false;
  const std::vector<WeylElement> units =
      W.elements_up_to_length(W.cartan().full_set(), unit_length_bound, &units_done);
  W.elements_up_to_length(W.cartan().full_set(), sigma_length_bound, &sigmas_done);
  const FaceEnumeration faces = enumerate_faces(*dp_, sigma_length_bound);
  std::set<RennerElement> seen;
  for (const Face& f : faces.faces)
    for (const WeylElement& w : units) seen.insert(make_element(w, f));
  out.elements.assign(seen.begin(), seen.end());
  // Exact when the whole group fit under both bounds; otherwise a truncation.
  out.complete = units_done && sigmas_done;
  return out;
}

std::string RennerMonoid::to_string(const RennerElement& x) const {
  const FundamentalFace& base = dp_->fundamental_faces()[x.face.base];
  std::ostringstream os;
  os << '(' << x.unit.to_string() << " | " << x.face.sigma.to_string() << ", "
     << (base.is_empty ? std::string("empty") : subset_to_string(base.I)) << ')';
  return os.str();
}

AxiomReport RennerMonoid::verify_axioms(int unit_length_bound, int sigma_length_bound) const {
  const WeylGroup& W = dp_->group();
  AxiomReport report;
  auto blame = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (report.counterexamples.size() < 32) report.counterexamples.push_back(msg);
  };

  const RennerEnumeration enumeration = enumerate(unit_length_bound, sigma_length_bound);
  const std::vector<RennerElement>& elements = enumeration.elements;
  std::vector<RennerElement> idems;
  for (const RennerElement& x : elements)
    if (is_idempotent(x)) idems.push_back(x);

  // (a) unit regularity is structural (every element is built as w e(F));
  // idempotents must commute.
  for (const RennerElement& e : idems)
    for (const RennerElement& f : idems)
      if (!(multiply(e, f) == multiply(f, e)))
        blame(report.unit_regular_commuting,
              "idempotents do not commute: " + to_string(e) + ", " + to_string(f));

  // (c) Lambda is a sub-semilattice and a cross-section of the conjugation
  // action on idempotents.
  for (const CrossSectionEntry& a : lattice_) {
    for (const CrossSectionEntry& b : lattice_) {
      const RennerElement p = multiply(idempotent(Face{W.identity(), a.face_base}),
                                       idempotent(Face{W.identity(), b.face_base}));
      if (!p.face.sigma.is_identity())
        blame(report.cross_section, "product of fundamental idempotents not fundamental");
    }
  }
  for (const RennerElement& e : idems) {
    auto [sigma, entry] = conjugacy_normal_form(e);
    const RennerElement back = multiply(
        multiply(unit(sigma), idempotent(Face{W.identity(), entry->face_base})),
        unit(W.inverse(sigma)));
    if (!(back == e))
      blame(report.cross_section, "conjugacy normal form does not recover " + to_string(e));
  }

  // (d) pairs e1 <= e2 are simultaneously conjugate to a fundamental pair.
  for (const RennerElement& e1 : idems) {
    for (const RennerElement& e2 : idems) {
      if (!face_leq(*dp_, e1.face, e2.face)) continue;
      const WeylElement sigma2 = e2.face.sigma;
      const Subset lambda2 = dp_->fundamental_faces()[e2.face.base].lambda;
      const Face moved1 = act_face(*dp_, W.inverse(sigma2), e1.face);
      const int slack =
          static_cast<int>(e1.face.sigma.length() + e2.face.sigma.length()) + 2;
      bool found = false;
      for (const WeylElement& v : W.elements_up_to_length(lambda2, slack)) {
        if (act_face(*dp_, v, moved1).sigma.is_identity()) {
          found = true;
          break;
        }
      }
      if (!found)
        blame(report.conjugate_pairs,
              "no simultaneous conjugation for " + to_string(e1) + " <= " + to_string(e2));
    }
  }

  // (e) centralizers and stabilizers of fundamental idempotents are the
  // standard parabolics named by the type maps.
  const std::vector<WeylElement> units =
      W.elements_up_to_length(W.cartan().full_set(), unit_length_bound, nullptr);
  for (const CrossSectionEntry& entry : lattice_) {
    const RennerElement e = idempotent(Face{W.identity(), entry.face_base});
    for (const WeylElement& w : units) {
      const RennerElement we = multiply(unit(w), e);
      const RennerElement ew = multiply(e, unit(w));
      const bool centralizes = we == ew;
      const bool in_lambda = W.in_standard_parabolic(w, entry.lambda);
      if (centralizes != in_lambda)
        blame(report.parabolic_centralizers,
              "centralizer mismatch at w=" + w.to_string() + ", e=" + to_string(e));
      const bool stabilizes = we == e && ew == e;
      const bool in_lambda_lower = W.in_standard_parabolic(w, entry.lambda_lower);
      if (stabilizes != in_lambda_lower)
        blame(report.parabolic_centralizers,
              "stabilizer mismatch at w=" + w.to_string() + ", e=" + to_string(e));
    }
  }

  // (f) lambda^* computed from commutation, and its monotonicity on Lambda.
  for (const CrossSectionEntry& entry : lattice_) {
    const RennerElement e = idempotent(Face{W.identity(), entry.face_base});
    Subset computed = 0;
    for (int s = 0; s < W.num_generators(); ++s) {
      const RennerElement se = multiply(unit(W.generator(s)), e);
      const RennerElement es = multiply(e, unit(W.generator(s)));
      if (se == es && !(se == e)) computed |= (Subset{1} << s);
    }
    if (computed != entry.lambda_upper)
      blame(report.monotone_type_map,
            "lambda^* mismatch on entry " + subset_to_string(entry.lambda_upper));
  }
  for (const CrossSectionEntry& a : lattice_)
    for (const CrossSectionEntry& b : lattice_) {
      const bool leq = face_leq(*dp_, Face{W.identity(), a.face_base},
                                Face{W.identity(), b.face_base});
      if (leq && (a.lambda_upper & ~b.lambda_upper) != 0)
        blame(report.monotone_type_map, "lambda^* not monotone");
    }

  return report;
}

}  // namespace weylmon
