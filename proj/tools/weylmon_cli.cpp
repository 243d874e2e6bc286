#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "weylmon/io.hpp"

using namespace weylmon;

namespace {

void write_out(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(Errc::ParseError, "cannot write " + out_path);
  out << text;
}

// Splits "{...};{...}" on top-level semicolons.
std::vector<std::string> split_elements(const std::string& text) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    if (c == ';' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

int cmd_classify(const std::string& file, bool as_json) {
  const ProblemSpec spec = ProblemSpec::load(file);
  const Problem problem = Problem::build(spec);
  const DominantPoint& dp = *problem.point;
  const bool in_qsat = q_sat_member(spec.realization, spec.mu);

  if (as_json) {
    std::ostringstream os;
    os << "{\n  \"components\": [";
    bool first = true;
    for (const ComponentType& t : classify_type(spec.cartan)) {
      if (!first) os << ", ";
      first = false;
      os << "{\"indices\": " << subset_to_string(t.component) << ", \"kind\": \""
         << cartan_kind_name(t.kind) << "\", \"strongly_hyperbolic\": "
         << (t.kind == CartanKind::Indefinite && t.strongly_hyperbolic ? "true" : "false")
         << "}";
    }
    os << "],\n  \"J0\": " << subset_to_string(dp.j0()) << ",\n  \"Jgt\": "
       << subset_to_string(dp.jgt()) << ",\n  \"mu_in_q_sat\": " << (in_qsat ? "true" : "false")
       << "\n}";
    std::cout << os.str() << "\n";
    return 0;
  }
  for (const ComponentType& t : classify_type(spec.cartan)) {
    std::cout << "component " << subset_to_string(t.component) << ": "
              << cartan_kind_name(t.kind);
    if (t.kind == CartanKind::Indefinite)
      std::cout << (t.strongly_hyperbolic ? ", strongly hyperbolic" : ", not strongly hyperbolic");
    std::cout << "\n";
  }
  std::cout << "J0 = " << subset_to_string(dp.j0()) << ", J> = " << subset_to_string(dp.jgt())
            << "\n";
  std::cout << "mu " << (in_qsat ? "in" : "not in") << " Q^sat\n";
  std::cout << "hull chamber closed: " << (hull_chamber_closed(dp) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_faces(const std::string& file, int bound, bool as_json, bool as_dot,
              const std::string& out_path) {
  const ProblemSpec spec = ProblemSpec::load(file);
  const Problem problem = Problem::build(spec);
  const DominantPoint& dp = *problem.point;
  const FaceEnumeration fe = enumerate_faces(dp, bound);
  std::ostringstream os;
  os << fe.faces.size() << " faces within sigma length " << bound
     << (fe.complete ? " (complete lattice)" : " (truncation)") << "\n";
  for (const auto& [dim, count] : fe.count_by_dim)
    os << "  dim " << dim << ": " << count << "\n";
  os << "fundamental faces: " << dp.fundamental_faces().size() << "\n";
  std::cout << os.str();
  if (as_json) write_out(out_path, faces_to_json(dp, fe));
  if (as_dot) write_out(out_path, faces_to_dot(dp, fe));
  return 0;
}

int cmd_weights(const std::string& file, int depth, bool as_json, bool verify, int height,
                const std::string& out_path) {
  const ProblemSpec spec = ProblemSpec::load(file);
  const Problem problem = Problem::build(spec);
  const DominantPoint& dp = *problem.point;
  const TruncatedWeightSet tws = TruncatedWeightSet::generate(dp, depth);
  std::cout << tws.weights().size() << " weights down to depth " << depth << "\n";
  if (as_json) write_out(out_path, weights_to_json(tws));
  if (!verify) return 0;
  size_t violations = 0;
  for (const FundamentalFace& base : dp.fundamental_faces()) {
    if (base.is_empty) continue;
    const StringLawReport report =
        verify_string_laws(tws, fundamental_face(dp, base.I), height);
    std::cout << "face " << subset_to_string(base.I) << ": " << report.strings_checked
              << " strings checked, " << report.strings_skipped << " skipped, "
              << report.violations.size() << " violations\n";
    for (const std::string& v : report.violations) std::cout << "  " << v << "\n";
    violations += report.violations.size();
  }
  const CrosscheckReport cross = dominant_membership_crosscheck(tws);
  std::cout << "dominant membership crosscheck: " << cross.checked << " points, "
            << cross.mismatches.size() << " mismatches\n";
  for (const std::string& v : cross.mismatches) std::cout << "  " << v << "\n";
  violations += cross.mismatches.size();
  return violations == 0 ? 0 : 1;
}

int cmd_renner(const std::string& file, const std::string& mul, bool table, bool verify_grm,
               int bound, bool as_dot, const std::string& out_path) {
  const ProblemSpec spec = ProblemSpec::load(file);
  const Problem problem = Problem::build(spec);
  const DominantPoint& dp = *problem.point;
  const RennerMonoid monoid(dp);

  if (!mul.empty()) {
    const std::vector<std::string> parts = split_elements(mul);
    if (parts.empty()) fail(Errc::ElementParseError, "no elements in --mul");
    RennerElement acc = monoid.one();
    for (const std::string& part : parts) {
      RennerElement x = renner_element_from_json(monoid, part);
      acc = monoid.multiply(acc, x);
    }
    std::cout << renner_element_to_json(monoid, acc) << "\n";
    return 0;
  }
  if (table) {
    const RennerEnumeration axis = monoid.enumerate(bound, bound);
    std::cout << axis.elements.size() << " elements within bound " << bound
              << (axis.complete ? " (complete)" : " (truncation)") << "\n";
    for (const RennerElement& x : axis.elements)
      std::cout << renner_element_to_json(monoid, x) << "\n";
    return 0;
  }
  if (verify_grm) {
    const AxiomReport report = monoid.verify_axioms(bound, bound);
    auto line = [](const char* name, bool okflag) {
      std::cout << (okflag ? "pass" : "FAIL") << "  " << name << "\n";
    };
    line("(a) unit regular, idempotents commute", report.unit_regular_commuting);
    line("(c) cross-section sub-semilattice", report.cross_section);
    line("(d) conjugate pairs", report.conjugate_pairs);
    line("(e) parabolic centralizers and stabilizers", report.parabolic_centralizers);
    line("(f) monotone type map", report.monotone_type_map);
    for (const std::string& c : report.counterexamples) std::cout << "  " << c << "\n";
    return report.ok() ? 0 : 1;
  }
  // Default: print the cross-section lattice.
  std::cout << "cross-section lattice: " << monoid.cross_section_lattice().size()
            << " idempotents\n";
  write_out(out_path,
            as_dot ? idempotent_order_to_dot(monoid, bound) : cross_section_to_json(monoid));
  return 0;
}

int cmd_oracle(const std::string& file, const std::string& slice) {
  const ProblemSpec spec = ProblemSpec::load(file);
  const Problem problem = Problem::build(spec);
  const DominantPoint& dp = *problem.point;
  OracleReport report;
  try {
    if (slice.empty()) {
      report = compare_lattices(dp);
    } else {
      Subset I = 0;
      std::istringstream is(slice);
      int idx;
      while (is >> idx) {
        if (idx < 1 || idx > spec.cartan.size()) fail(Errc::ParseError, "bad slice index");
        I |= (Subset{1} << (idx - 1));
      }
      report = compare_lattices_slice(dp, I);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::FiniteTypeRequired) throw;
    std::cout << e.what() << "\n";
    std::cout << "finite-type mu-connected slices available:";
    for (const FundamentalFace& f : dp.fundamental_faces()) {
      if (f.is_empty || f.I == 0) continue;
      if (subset_is_finite_type(dp.group().cartan(), f.I))
        std::cout << ' ' << subset_to_string(f.I);
    }
    std::cout << "\n";
    return 2;
  }
  std::cout << "combinatorial faces: " << report.combinatorial_faces
            << ", geometric faces: " << report.geometric_faces << ", pairs checked: "
            << report.pairs_checked << "\n";
  for (const std::string& m : report.mismatches) std::cout << "  " << m << "\n";
  std::cout << (report.ok ? "lattices isomorphic" : "MISMATCH") << "\n";
  return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weyl-orbit face lattices and Renner monoids"};
  app.require_subcommand(1);

  std::string file, out_path, mul, slice;
  int bound = 3, depth = 6, height = 4;
  bool as_json = false, as_dot = false, table = false, verify_grm = false, verify = false;

  CLI::App* classify = app.add_subcommand("classify", "matrix type, J0, Q^sat verdict");
  classify->add_option("file", file)->required();
  classify->add_flag("--json", as_json);

  CLI::App* faces = app.add_subcommand("faces", "enumerate the face lattice");
  faces->add_option("file", file)->required();
  faces->add_option("--bound", bound, "sigma length bound");
  faces->add_flag("--json", as_json);
  faces->add_flag("--dot", as_dot);
  faces->add_option("--out", out_path);

  CLI::App* weights = app.add_subcommand("weights", "truncated weight system");
  weights->add_option("file", file)->required();
  weights->add_option("--depth", depth);
  weights->add_option("--height", height, "root height bound for --verify");
  weights->add_flag("--json", as_json);
  weights->add_flag("--verify", verify, "check string laws and the membership crosscheck");
  weights->add_option("--out", out_path);

  CLI::App* renner = app.add_subcommand("renner", "Renner monoid computations");
  renner->add_option("file", file)->required();
  renner->add_option("--mul", mul, "semicolon-separated JSON elements to multiply");
  renner->add_flag("--table", table, "enumerate elements");
  renner->add_flag("--verify-grm", verify_grm, "run the axiom suite");
  renner->add_option("--bound", bound, "word length bound");
  renner->add_flag("--dot", as_dot, "export the idempotent order");
  renner->add_option("--out", out_path);

  CLI::App* oracle = app.add_subcommand("oracle", "certify against the geometric hull");
  oracle->add_option("file", file)->required();
  oracle->add_option("--slice", slice, "parabolic slice indices, e.g. \"1 2\"");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(file, as_json);
    if (faces->parsed()) return cmd_faces(file, bound, as_json, as_dot, out_path);
    if (weights->parsed()) return cmd_weights(file, depth, as_json, verify, height, out_path);
    if (renner->parsed()) return cmd_renner(file, mul, table, verify_grm, bound, as_dot, out_path);
    if (oracle->parsed()) return cmd_oracle(file, slice);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
