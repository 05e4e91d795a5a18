// medtri: enumerate and audit triangles with integer sides and medians.
//
// Subcommands:
//   search     bounded enumeration with certification and counterexample scan
//   audit      identity audit for one triple or a record file
//   companion  companion triangle, exact rationals
//   descent    gate-by-gate descent trace
//   certify    one JSONL record for a triple
//   report     CSV summary of a record file
//
// Exit codes: 0 ok / no counterexample, 1 usage or input error,
// 2 counterexample found, 3 universal identity failed (bug signal).

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "medtri/medtri.hpp"

namespace {

using namespace medtri;

// Even filter calibration: with --even-filter auto, bounds above this first
// get a full unfiltered scan up to the bound itself; the filter is enabled
// beyond only if every hit found there has all-even sides.
constexpr std::int64_t kEvenFilterCalibrationBound = 400;

std::string triple_str(const BigInt& a, const BigInt& b, const BigInt& c) {
  return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

std::optional<IntTriangle> parse_triangle(std::int64_t a, std::int64_t b, std::int64_t c,
                                          std::string* why) {
  if (a <= 0 || b <= 0 || c <= 0) {
    *why = "sides must be positive";
    return std::nullopt;
  }
  switch (classify(BigInt(a), BigInt(b), BigInt(c))) {
    case Shape::Valid:
      return IntTriangle(a, b, c);
    case Shape::Degenerate:
      *why = "degenerate: the sides are collinear";
      return std::nullopt;
    case Shape::Invalid:
      *why = "the sides violate the triangle inequality";
      return std::nullopt;
  }
  *why = "unreachable";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

struct SearchOptions {
  std::int64_t max_side = 0;
  int shards = 1;
  std::string even_filter = "auto";  // auto | off
  std::string out = "results.jsonl";
  std::string config_path;
};

// Plain key=value file; command-line flags win over file values.
void apply_config_file(const std::string& path, bool max_side_set, bool shards_set,
                       bool filter_set, bool out_set, SearchOptions& opt) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto first = s.find_first_not_of(" \t\r");
      const auto last = s.find_last_not_of(" \t\r");
      return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if ((key == "max_side" || key == "max-side") && !max_side_set)
      opt.max_side = std::stoll(value);
    else if (key == "shards" && !shards_set)
      opt.shards = std::stoi(value);
    else if ((key == "even_filter" || key == "even-filter") && !filter_set)
      opt.even_filter = value;
    else if (key == "out" && !out_set)
      opt.out = value;
    else if (key != "max_side" && key != "max-side" && key != "shards" &&
             key != "even_filter" && key != "even-filter" && key != "out")
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown key " + key);
  }
}

int run_search(const SearchOptions& opt) {
  if (opt.even_filter != "auto" && opt.even_filter != "off") {
    std::cerr << "error: --even-filter must be auto or off\n";
    return 1;
  }
  if (opt.max_side < 3) {
    std::cerr << "error: --max-side must be at least 3\n";
    return 1;
  }
  if (opt.shards < 1) {
    std::cerr << "error: --shards must be at least 1\n";
    return 1;
  }

  RunManifest manifest;
  manifest.version = kVersion;
  manifest.max_side = opt.max_side;
  manifest.shards = opt.shards;
  manifest.even_filter_mode = opt.even_filter;
  manifest.output_path = opt.out;

  const auto t0 = std::chrono::steady_clock::now();

  bool use_filter = false;
  if (opt.even_filter == "auto" && opt.max_side > kEvenFilterCalibrationBound) {
    manifest.calibration_bound = kEvenFilterCalibrationBound;
    use_filter = even_filter_soundness(kEvenFilterCalibrationBound);
    if (!use_filter)
      std::cerr << "note: even filter calibration failed; scanning unfiltered\n";
  }
  manifest.even_filter_used = use_filter;

  SearchConfig cfg;
  cfg.max_side = opt.max_side;
  cfg.shards = opt.shards;
  cfg.use_even_filter = use_filter;
  cfg.output_path = opt.out;
  const SearchResult result = enumerate_median_triangles(cfg);
  const auto counterexamples = counterexample_scan(result.records);

  write_records(opt.out, result.records);

  manifest.triples_scanned = result.triples_scanned;
  manifest.hits = result.records.size();
  manifest.counterexamples = counterexamples.size();
  manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(opt.out + ".manifest.json", manifest);

  std::cout << "scanned " << result.triples_scanned << " triples up to max side "
            << opt.max_side << " (shards=" << opt.shards
            << ", even filter " << (use_filter ? "on beyond calibration" : "off") << ")\n";
  std::cout << "integer-median triangles: " << result.records.size() << " -> " << opt.out
            << "\n";
  constexpr std::size_t kListLimit = 50;
  for (std::size_t i = 0; i < result.records.size() && i < kListLimit; ++i) {
    const auto& r = result.records[i];
    std::cout << "  " << triple_str(r.a, r.b, r.c) << " medians "
              << triple_str(r.m_a, r.m_b, r.m_c) << " area " << area_class_name(r.area)
              << "\n";
  }
  if (result.records.size() > kListLimit)
    std::cout << "  ... and " << result.records.size() - kListLimit << " more\n";
  std::cout << "counterexamples (integer or rational area): " << counterexamples.size()
            << "\n";
  if (!counterexamples.empty()) {
    for (const auto& r : counterexamples)
      std::cout << "  COUNTEREXAMPLE " << record_to_line(r) << "\n";
    return 2;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// audit
// ---------------------------------------------------------------------------

void print_condition_report(const ConditionReport& rep) {
  std::cout << "eight conditions (normalized to 144*S^2):\n";
  static const char* kNames[8] = {"medians",      "sides",        "ma,mb,3c/2",
                                  "a,b,2mc",      "ma,3b/2,mc",   "a,2mb,c",
                                  "3a/2,mb,mc",   "2ma,b,c"};
  for (int i = 0; i < 8; ++i)
    std::cout << "  q" << i + 1 << " [" << kNames[i] << "] = " << rep.q[i]
              << (rep.scale[i] == 16 ? " (x16 fold)" : "") << " -> " << rep.normalized[i]
              << "\n";
  std::cout << "  all equal: " << (rep.all_equal ? "yes" : "NO") << "\n";
}

int audit_one(const IntTriangle& t) {
  const auto medians = integer_medians(t);
  if (!medians) {
    std::cerr << "error: " << triple_str(t.a(), t.b(), t.c()) << " has no integer medians\n";
    return 1;
  }
  const auto& [ma, mb, mc] = *medians;
  bool universal_ok = true;

  std::cout << "triangle " << triple_str(t.a(), t.b(), t.c()) << "\n";
  std::cout << "medians  " << triple_str(ma, mb, mc) << "\n";
  const BigInt h16 = heron16(t);
  std::cout << "16*S^2 = " << h16 << " (area " << area_class_name(area_class(h16)) << ")\n\n";

  const auto rep = eight_conditions(t.a(), t.b(), t.c(), ma, mb, mc);
  print_condition_report(rep);
  universal_ok = universal_ok && rep.all_equal;
  const auto rep_sq = eight_conditions(t.a(), t.b(), t.c());
  universal_ok = universal_ok && rep_sq.all_equal && rep_sq.normalized == rep.normalized;

  const auto sp = shift_profile(t.a(), t.b(), t.c(), ma, mb, mc);
  std::cout << "\nshifts: delta = (" << rational_to_string(sp.delta_a) << ", "
            << rational_to_string(sp.delta_b) << ", " << rational_to_string(sp.delta_c)
            << "), theta = (" << rational_to_string(sp.theta_a) << ", "
            << rational_to_string(sp.theta_b) << ", " << rational_to_string(sp.theta_c)
            << ") [bracket identities verified]\n";

  const auto prof = xyzw_profile(ma, mb, mc, t.c());
  std::cout << "\nquartic substitution (x, y, z, w) = (" << prof.x << ", " << prof.y << ", "
            << prof.z << ", " << prof.w << "), delta2 = " << prof.delta << "\n";
  std::cout << "  coeff_cubic = " << prof.coeff_cubic << " = 16*ma\n";
  std::cout << "  coeff_quad  = " << prof.coeff_quad << " = 96*ma^2 - 8*mc^2 - 18*c^2\n";
  std::cout << "  coeff_lin   = " << prof.coeff_lin << " (factored form implies "
            << prof.factored_coeff_lin << ", residual "
            << prof.coeff_lin - prof.factored_coeff_lin << ")\n";
  std::cout << "  xyzw = " << prof.xyzw << " = 576*S^2, T(delta2) = " << prof.t_value << "\n";
  universal_ok = universal_ok && prof.consistent && prof.t_value == 0;

  std::cout << "quartic values at candidate roots:\n";
  for (const auto& e : quartic_root_audit(prof))
    std::cout << "  at " << e.label << " (" << e.candidate << "): " << e.value
              << (e.vanishes ? "  [vanishes]" : "") << "\n";

  const auto l2 = lemma2_check(t);
  std::cout << "\ndivisibility by 3: a^2+b^2+c^2 = " << l2.sum_sq_mod3
            << " (mod 3), medians = (" << l2.median_mod3[0] << ", " << l2.median_mod3[1]
            << ", " << l2.median_mod3[2] << ") (mod 3), all-or-none implication "
            << (l2.implication_holds ? "holds" : "FAILS") << "\n";
  universal_ok = universal_ok && l2.implication_holds;

  const auto l3 = lemma3_mod3(ma, mc, t.c());
  std::cout << "delta2^2 candidate rhs = 8*mc^2 + 18*c^2 - 96*ma^2 = " << l3.rhs << " (sign "
            << l3.sign << ", mod 3 = " << l3.rhs_mod3 << ", perfect square: "
            << (l3.is_square ? "yes" : "no") << ")\n";

  universal_ok = universal_ok && cubic_sum_check(ma, mb, mc, t.c(), prof.delta);
  std::cout << "cubic-sum identity at delta2: "
            << (cubic_sum_check(ma, mb, mc, t.c(), prof.delta) ? "holds" : "FAILS") << "\n";

  if (!universal_ok) std::cout << "\nUNIVERSAL IDENTITY FAILURE\n";
  return universal_ok ? 0 : 3;
}

int run_audit(const std::vector<std::int64_t>& triple, const std::string& in_path) {
  std::vector<IntTriangle> triangles;
  if (!in_path.empty()) {
    for (const auto& rec : read_records(in_path))
      triangles.emplace_back(rec.a, rec.b, rec.c);
    if (triangles.empty()) {
      std::cout << "no records in " << in_path << "\n";
      return 0;
    }
  } else {
    std::string why;
    auto t = parse_triangle(triple[0], triple[1], triple[2], &why);
    if (!t) {
      std::cerr << "error: " << why << "\n";
      return 1;
    }
    triangles.push_back(*t);
  }
  int worst = 0;
  bool first = true;
  for (const auto& t : triangles) {
    if (!first) std::cout << "\n" << std::string(64, '-') << "\n\n";
    first = false;
    const int rc = audit_one(t);
    if (rc == 1) return 1;
    worst = std::max(worst, rc);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// companion / descent
// ---------------------------------------------------------------------------

int run_companion(const std::vector<std::int64_t>& triple) {
  std::string why;
  auto t = parse_triangle(triple[0], triple[1], triple[2], &why);
  if (!t) {
    std::cerr << "error: " << why << "\n";
    return 1;
  }
  std::optional<RatTriangle> comp_opt;
  try {
    comp_opt = companion(*t);
  } catch (const unsupported_input&) {
    std::cerr << "error: " << triple_str(t->a(), t->b(), t->c())
              << " has no exact rational medians\n";
    return 1;
  }
  const RatTriangle& comp = *comp_opt;
  const auto comp_medians = *median_squares(comp).exact_medians;
  std::cout << "triangle  " << triple_str(t->a(), t->b(), t->c()) << "\n";
  std::cout << "companion sides   (" << rational_to_string(comp.a()) << ", "
            << rational_to_string(comp.b()) << ", " << rational_to_string(comp.c()) << ")\n";
  std::cout << "companion medians (" << rational_to_string(comp_medians[0]) << ", "
            << rational_to_string(comp_medians[1]) << ", "
            << rational_to_string(comp_medians[2]) << ")\n";
  std::cout << "area ratio 16*S^2 parent/companion = 9: "
            << (area_ratio_check(*t) ? "exact" : "VIOLATED") << "\n";
  std::cout << "similar to parent: " << (similarity_check(*t, comp) ? "yes" : "no") << "\n";
  return 0;
}

int run_descent(const std::vector<std::int64_t>& triple, int iters) {
  std::string why;
  auto t = parse_triangle(triple[0], triple[1], triple[2], &why);
  if (!t) {
    std::cerr << "error: " << why << "\n";
    return 1;
  }
  const auto trace = descent_run(*t, iters);
  std::cout << "descent from " << triple_str(t->a(), t->b(), t->c()) << ", at most " << iters
            << " steps\n";
  int step = 0;
  for (const auto& rep : trace) {
    ++step;
    std::cout << "step " << step << ": parent "
              << triple_str(rep.parent_sides[0], rep.parent_sides[1], rep.parent_sides[2])
              << "\n";
    std::cout << "  g1 integer medians:        " << (rep.medians_integer ? "pass" : "fail")
              << "\n";
    std::cout << "  g2 medians multiple of 3:  (" << rep.medians_div3[0] << ", "
              << rep.medians_div3[1] << ", " << rep.medians_div3[2] << ")\n";
    std::cout << "  g3 sides even:             (" << rep.sides_even[0] << ", "
              << rep.sides_even[1] << ", " << rep.sides_even[2] << ")\n";
    std::cout << "  g4 area: " << area_class_name(rep.parent_area)
              << ", integer multiple of 3: " << (rep.area_div3 ? "yes" : "no") << "\n";
    if (rep.child) {
      std::cout << "  => child "
                << triple_str(rep.child->a(), rep.child->b(), rep.child->c()) << "\n";
    } else {
      std::cout << "  => gates failed:";
      for (const auto g : rep.failed) std::cout << " " << descent_gate_name(g);
      std::cout << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// certify / report
// ---------------------------------------------------------------------------

int run_certify(const std::vector<std::int64_t>& triple) {
  std::string why;
  auto t = parse_triangle(triple[0], triple[1], triple[2], &why);
  if (!t) {
    std::cerr << "error: " << why << "\n";
    return 1;
  }
  try {
    std::cout << record_to_line(certify(*t)) << "\n";
  } catch (const unsupported_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_report(const std::string& in_path, const std::string& out_path) {
  const auto records = read_records(in_path);
  std::ostringstream csv;
  csv << "a,b,c,ma,mb,mc,heron16,area_class,prim_a,prim_b,prim_c,is_primitive\n";
  std::size_t primitives = 0;
  for (const auto& r : records) {
    const bool is_primitive = r.primitive[0] == r.a;
    primitives += is_primitive;
    csv << r.a << "," << r.b << "," << r.c << "," << r.m_a << "," << r.m_b << "," << r.m_c
        << "," << r.heron16_value << "," << area_class_name(r.area) << ","
        << r.primitive[0] << "," << r.primitive[1] << "," << r.primitive[2] << ","
        << (is_primitive ? "true" : "false") << "\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 1;
    }
    out << csv.str();
  }
  std::cerr << records.size() << " records, " << primitives << " primitive, "
            << counterexample_scan(records).size() << " counterexamples\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and identity audit for integer-median triangles"};
  app.set_version_flag("--version", std::string("medtri ") + medtri::kVersion);
  app.require_subcommand(1);

  SearchOptions search_opt;
  auto* search = app.add_subcommand("search", "enumerate integer-median triangles");
  auto* o_max = search->add_option("--max-side", search_opt.max_side, "largest side bound");
  auto* o_shards = search->add_option("--shards", search_opt.shards, "parallel shards");
  auto* o_filter = search->add_option("--even-filter", search_opt.even_filter,
                                      "auto|off: all-even side filter above calibration");
  auto* o_out = search->add_option("--out", search_opt.out, "record file (JSONL)");
  search->add_option("--config", search_opt.config_path, "key=value config file");

  std::vector<std::int64_t> audit_triple;
  std::string audit_in;
  auto* audit = app.add_subcommand("audit", "run the identity audit");
  audit->add_option("sides", audit_triple, "triangle sides a b c")->expected(0, 3);
  audit->add_option("--in", audit_in, "JSONL record file to audit");

  std::vector<std::int64_t> companion_triple;
  auto* comp = app.add_subcommand("companion", "companion triangle, exact rationals");
  comp->add_option("sides", companion_triple, "triangle sides a b c")->expected(3);

  std::vector<std::int64_t> descent_triple;
  int descent_iters = 10;
  auto* descent = app.add_subcommand("descent", "gate-by-gate descent trace");
  descent->add_option("sides", descent_triple, "triangle sides a b c")->expected(3);
  descent->add_option("--iters", descent_iters, "maximum descent steps");

  std::vector<std::int64_t> certify_triple;
  auto* certify_cmd = app.add_subcommand("certify", "print the JSONL record for a triple");
  certify_cmd->add_option("sides", certify_triple, "triangle sides a b c")->expected(3);

  std::string report_in, report_out;
  auto* report = app.add_subcommand("report", "CSV summary of a record file");
  report->add_option("--in", report_in, "JSONL record file")->required();
  report->add_option("--out", report_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (search->parsed()) {
      if (!search_opt.config_path.empty())
        apply_config_file(search_opt.config_path, o_max->count() > 0, o_shards->count() > 0,
                          o_filter->count() > 0, o_out->count() > 0, search_opt);
      if (search_opt.max_side == 0) {
        std::cerr << "error: --max-side is required (flag or config file)\n";
        return 1;
      }
      return run_search(search_opt);
    }
    if (audit->parsed()) {
      if (audit_in.empty() && audit_triple.size() != 3) {
        std::cerr << "error: audit needs three sides or --in FILE\n";
        return 1;
      }
      return run_audit(audit_triple, audit_in);
    }
    if (comp->parsed()) return run_companion(companion_triple);
    if (descent->parsed()) return run_descent(descent_triple, descent_iters);
    if (certify_cmd->parsed()) return run_certify(certify_triple);
    if (report->parsed()) return run_report(report_in, report_out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const medtri::unsupported_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "universal identity failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
