#include "weylmon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace weylmon {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::ParseError, "invalid JSON");
  return doc;
}

RatVec json_to_ratvec(const json& arr) {
  if (!arr.is_array()) fail(Errc::ParseError, "expected an array of numbers");
  RatVec out;
  for (const json& v : arr) {
    if (v.is_number_integer())
      out.emplace_back(Int(v.get<long long>()));
    else if (v.is_string())
      out.emplace_back(Rat(v.get<std::string>()));  // exact "p/q" literals
    else
      fail(Errc::ParseError, "weight entries must be integers or \"p/q\" strings");
  }
  return out;
}

}  // namespace

ProblemSpec ProblemSpec::parse(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("cartan"))
    fail(Errc::ParseError, "missing \"cartan\"");
  std::vector<std::vector<long long>> entries;
  for (const json& row : doc.at("cartan")) {
    entries.emplace_back();
    for (const json& v : row) {
      if (!v.is_number_integer()) fail(Errc::ParseError, "cartan entries must be integers");
      entries.back().push_back(v.get<long long>());
    }
  }
  CartanMatrix A = CartanMatrix::validate(entries);
  Realization rz;
  if (doc.contains("completion")) {
    IntMat D;
    for (const json& row : doc.at("completion")) {
      D.emplace_back();
      for (const json& v : row) {
        if (!v.is_number_integer())
          fail(Errc::ParseError, "completion entries must be integers");
        D.back().emplace_back(v.get<long long>());
      }
    }
    rz = make_realization(A, D);
  } else {
    rz = complete_realization(A);
  }
  if (!doc.contains("mu")) fail(Errc::ParseError, "missing \"mu\"");
  RatVec mu = json_to_ratvec(doc.at("mu"));
  if (static_cast<int>(mu.size()) == A.size() && rz.dim != A.size())
    mu.resize(rz.dim, Rat(0));
  if (static_cast<int>(mu.size()) != rz.dim)
    fail(Errc::ParseError, "\"mu\" must have length " + std::to_string(rz.dim));
  return ProblemSpec{std::move(A), std::move(rz), std::move(mu)};
}

ProblemSpec ProblemSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Problem Problem::build(const ProblemSpec& spec) {
  Problem p;
  p.group = std::make_unique<WeylGroup>(spec.cartan, spec.realization);
  p.point = std::make_unique<DominantPoint>(*p.group, spec.mu);
  return p;
}

std::string face_label(const DominantPoint& dp, const Face& f) {
  const FundamentalFace& base = dp.fundamental_faces()[f.base];
  if (base.is_empty) return "empty";
  std::ostringstream os;
  os << f.sigma.to_string() << '|' << subset_to_string(base.I);
  return os.str();
}

std::string faces_to_json(const DominantPoint& dp, const FaceEnumeration& fe) {
  json out;
  out["complete"] = fe.complete;
  json counts = json::object();
  for (const auto& [dim, count] : fe.count_by_dim) counts[std::to_string(dim)] = count;
  out["count_by_dim"] = counts;
  json faces = json::array();
  for (const Face& f : fe.faces) {
    const FundamentalFace& base = dp.fundamental_faces()[f.base];
    json jf;
    jf["sigma"] = f.sigma.to_string();
    json I = json::array();
    for (int i : subset_indices(base.I)) I.push_back(i + 1);
    jf["I"] = I;
    jf["dim"] = dimension(dp, f);
    if (base.is_empty) jf["empty"] = true;
    faces.push_back(jf);
  }
  out["faces"] = faces;
  return out.dump(2);
}

std::string faces_to_dot(const DominantPoint& dp, const FaceEnumeration& fe) {
  // Hasse diagram of the enumerated faces: cover relations only.
  const size_t n = fe.faces.size();
  std::vector<std::vector<bool>> less(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) less[i][j] = face_leq(dp, fe.faces[i], fe.faces[j]);
  std::ostringstream os;
  os << "digraph faces {\n  rankdir=BT;\n";
  for (size_t i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"" << face_label(dp, fe.faces[i]) << "\"];\n";
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k)
        if (less[i][k] && less[k][j]) cover = false;
      if (cover) os << "  n" << i << " -> n" << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string cross_section_to_json(const RennerMonoid& monoid) {
  const DominantPoint& dp = monoid.point();
  json out = json::array();
  for (const CrossSectionEntry& e : monoid.cross_section_lattice()) {
    json je;
    const FundamentalFace& base = dp.fundamental_faces()[e.face_base];
    je["zero"] = base.is_empty;
    auto subset_json = [](Subset s) {
      json arr = json::array();
      for (int i : subset_indices(s)) arr.push_back(i + 1);
      return arr;
    };
    je["lambda_upper"] = subset_json(e.lambda_upper);
    je["lambda_lower"] = subset_json(e.lambda_lower);
    je["lambda"] = subset_json(e.lambda);
    out.push_back(je);
  }
  return out.dump(2);
}

std::string idempotent_order_to_dot(const RennerMonoid& monoid, int sigma_length_bound) {
  const DominantPoint& dp = monoid.point();
  const FaceEnumeration fe = enumerate_faces(dp, sigma_length_bound);
  return faces_to_dot(dp, fe);
}

std::string weights_to_json(const TruncatedWeightSet& tws) {
  json out;
  out["depth"] = tws.depth();
  json arr = json::array();
  for (const DepthVector& k : tws.weights()) {
    json jk = json::array();
    for (long long v : k) jk.push_back(v);
    arr.push_back(jk);
  }
  out["weights"] = arr;
  return out.dump(2);
}

std::string renner_element_to_json(const RennerMonoid& monoid, const RennerElement& x) {
  const DominantPoint& dp = monoid.point();
  const FundamentalFace& base = dp.fundamental_faces()[x.face.base];
  json out;
  out["unit"] = x.unit.to_string();
  out["sigma"] = x.face.sigma.to_string();
  json I = json::array();
  for (int i : subset_indices(base.I)) I.push_back(i + 1);
  out["I"] = I;
  if (base.is_empty) out["empty"] = true;
  return out.dump();
}

RennerElement renner_element_from_json(const RennerMonoid& monoid, const std::string& text) {
  const DominantPoint& dp = monoid.point();
  const WeylGroup& W = dp.group();
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    fail(Errc::ElementParseError, "element must be a JSON object");
  WeylElement unit = W.identity(), sigma = W.identity();
  try {
    if (doc.contains("unit")) unit = W.parse(doc.at("unit").get<std::string>());
    if (doc.contains("sigma")) sigma = W.parse(doc.at("sigma").get<std::string>());
  } catch (const json::exception&) {
    fail(Errc::ElementParseError, "\"unit\" and \"sigma\" must be strings");
  }
  Face face;
  if (doc.contains("empty") && doc.at("empty").get<bool>()) {
    face = empty_face(dp);
  } else {
    Subset I = 0;
    if (doc.contains("I"))
      for (const json& v : doc.at("I")) {
        const int idx = v.get<int>();
        if (idx < 1 || idx > W.num_generators())
          fail(Errc::ElementParseError, "face index out of range");
        I |= (Subset{1} << (idx - 1));
      }
    face = canonicalize_face(dp, sigma, I);
  }
  RennerElement x = monoid.make_element(unit, face);
  if (doc.contains("inv") && doc.at("inv").get<bool>()) x = monoid.inverse(x);
  return x;
}

}  // namespace weylmon
