// Acceptance suite: end-to-end checks of the search, the identity audits,
// and the CLI surface. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "medtri/medtri.hpp"

using namespace medtri;

namespace {

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << "  " << name;
  if (!detail.empty()) line << "  [" << detail << "]";
  line << "  (" << std::fixed << std::setprecision(2) << secs << "s)";
  std::cout << line.str() << std::endl;
  if (!ok) ++g_failures;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int run_cli(const std::string& args, const std::string& capture) {
  const std::string cmd = std::string(MEDTRI_CLI_PATH) + " " + args + " > " + capture + " 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

IntTriangle random_triangle(std::mt19937_64& rng, std::uint64_t max_part) {
  const BigInt p = rng() % max_part + 1;
  const BigInt q = rng() % max_part + 1;
  const BigInt r = rng() % max_part + 1;
  return IntTriangle(q + r, p + r, p + q);
}

}  // namespace

int main() {
  std::filesystem::path tmp_dir;
  {
    std::random_device rd;
    tmp_dir = std::filesystem::temp_directory_path() /
              ("medtri_acceptance_" + std::to_string(rd()));
    std::filesystem::create_directories(tmp_dir);
  }
  const auto tmp = [&tmp_dir](const std::string& name) {
    return (tmp_dir / name).string();
  };

  // Shared full run up to 1000, no even filter: the most conservative scan.
  SearchConfig full_cfg;
  full_cfg.max_side = 1000;
  full_cfg.shards = 2;
  full_cfg.use_even_filter = false;
  const SearchResult full = enumerate_median_triangles(full_cfg);

  criterion("C1 smallest solution: search --max-side 174 finds exactly (136,170,174) "
            "with medians (158,131,127)",
            [&](std::string& detail) {
              const int rc = run_cli("search --max-side 174 --out " + tmp("c1.jsonl"),
                                     tmp("c1.log"));
              if (rc != 0) {
                detail = "exit code " + std::to_string(rc);
                return false;
              }
              const auto records = read_records(tmp("c1.jsonl"));
              detail = std::to_string(records.size()) + " record(s)";
              return records.size() == 1 && records[0].a == 136 && records[0].b == 170 &&
                     records[0].c == 174 && records[0].m_a == 158 &&
                     records[0].m_b == 131 && records[0].m_c == 127;
            });

  criterion("C2 open-problem consistency: no integer/rational area up to max side 1000",
            [&](std::string& detail) {
              const auto counterexamples = counterexample_scan(full.records);
              detail = std::to_string(full.records.size()) + " triangles, " +
                       std::to_string(counterexamples.size()) + " counterexamples";
              if (full.records.empty()) return false;
              for (const auto& r : full.records)
                if (r.area != AreaClass::Irrational) return false;
              return counterexamples.empty();
            });

  criterion("C3 eight conditions: common value 16605388800 on the smallest triangle; "
            "all_equal on 1000 random triangles",
            [&](std::string& detail) {
              const BigInt expect("16605388800");
              const auto literal = eight_conditions(BigInt(136), BigInt(170), BigInt(174),
                                                    BigInt(158), BigInt(131), BigInt(127));
              if (!literal.all_equal) return false;
              for (int i = 0; i < 8; ++i)
                if (literal.normalized[i] != expect) return false;
              const auto squared = eight_conditions(BigInt(136), BigInt(170), BigInt(174));
              if (!squared.all_equal || squared.normalized != literal.normalized)
                return false;
              std::mt19937_64 rng(42);
              for (int i = 0; i < 1000; ++i) {
                const auto t = random_triangle(rng, 1'000'000'000ull);
                if (!eight_conditions(t.a(), t.b(), t.c()).all_equal) {
                  detail = "failure at iteration " + std::to_string(i);
                  return false;
                }
              }
              detail = "pinned value + 1000 random triangles";
              return true;
            });

  criterion("C4 T-vanishing: T(4mb-4ma) = 0 for every found triangle and for 500 "
            "companion-derived rational-median triangles",
            [&](std::string& detail) {
              for (const auto& r : full.records) {
                const auto p = xyzw_profile(r.m_a, r.m_b, r.m_c, r.c);
                if (p.t_value != 0 || !r.t_zero_ok) return false;
              }
              // Companions of scaled copies of the found triangles have exact
              // rational medians; T must vanish on rational data too.
              int built = 0;
              std::size_t index = 0;
              int scale = 1;
              while (built < 500) {
                const auto& r = full.records[index];
                index = (index + 1) % full.records.size();
                if (index == 0) ++scale;
                const IntTriangle parent(r.a * scale, r.b * scale, r.c * scale);
                const RatTriangle comp = companion(parent);
                const auto medians = rational_medians(comp);
                if (!medians) return false;
                const auto& m = *medians;
                const auto xyzw = xyzw_of(m[0], m[2], comp.c());
                const Rational delta = 4 * m[1] - 4 * m[0];
                if (t_polynomial(xyzw[0], xyzw[1], xyzw[2], xyzw[3], delta) != 0)
                  return false;
                // xyzw = 576*S^2 on the rational route as well.
                if (xyzw[0] * xyzw[1] * xyzw[2] * xyzw[3] != 36 * heron16(comp))
                  return false;
                ++built;
              }
              detail = std::to_string(full.records.size()) + " integer + " +
                       std::to_string(built) + " rational triangles";
              return true;
            });

  criterion("C5 companion laws: area/9 exactly, composition = sides/3, never similar",
            [&](std::string& detail) {
              for (const auto& r : full.records) {
                const IntTriangle t(r.a, r.b, r.c);
                const RatTriangle comp = companion(t);
                if (heron16(comp) * 9 != Rational(heron16(t))) return false;
                const RatTriangle twice = companion(comp);
                if (twice.a() * 3 != t.a() || twice.b() * 3 != t.b() ||
                    twice.c() * 3 != t.c())
                  return false;
                if (similarity_check(t, comp)) return false;
                if (!r.nonsimilar_companion_ok) return false;
              }
              detail = "all " + std::to_string(full.records.size()) + " found triangles";
              return !full.records.empty();
            });

  criterion("C6 Vieta coefficients: cubic = 16ma, quadratic = 96ma^2-8mc^2-18c^2 "
            "on 1000 random tuples",
            [&](std::string& detail) {
              std::mt19937_64 rng(43);
              for (int i = 0; i < 1000; ++i) {
                const BigInt ma = rng() % 1'000'000, mc = rng() % 1'000'000,
                             c = rng() % 1'000'000, mb = rng() % 1'000'000;
                const auto p = xyzw_profile(ma, mb, mc, c);
                if (p.coeff_cubic != 16 * ma) return false;
                if (p.coeff_quad != 96 * ma * ma - 8 * mc * mc - 18 * c * c) return false;
              }
              detail = "1000 random tuples";
              return true;
            });

  criterion("C7 audit findings: quartic vanishes at {0,-108} only; values 40455604224 "
            "at +108 and 10609468334080 at -2528; coeff_lin 48 vs implied 1120",
            [&](std::string& detail) {
              const auto p = xyzw_profile(BigInt(158), BigInt(131), BigInt(127), BigInt(174));
              const auto audit = quartic_root_audit(p);
              if (!(audit[0].candidate == 0 && audit[0].vanishes)) return false;
              if (!(audit[1].candidate == -108 && audit[1].vanishes)) return false;
              if (!(audit[2].candidate == 108 && audit[2].value == BigInt("40455604224")))
                return false;
              if (!(audit[3].candidate == -2528 &&
                    audit[3].value == BigInt("10609468334080")))
                return false;
              const auto unit = xyzw_profile(BigInt(1), BigInt(1), BigInt(1), BigInt(1));
              if (unit.coeff_lin != 48) return false;
              if (unit.factored_coeff_lin != 1120) return false;
              if (unit.coeff_lin - unit.factored_coeff_lin != -1072) return false;
              detail = "all regression pins hold";
              return true;
            });

  criterion("C8 cubic-sum identity: 369 + 175 = 544 = 16*2*17 pinned; 1000 random tuples",
            [&](std::string& detail) {
              if (cubic_p(BigInt(1), BigInt(0), BigInt(0), BigInt(1)) != 369) return false;
              if (cubic_q(BigInt(1), BigInt(0), BigInt(0), BigInt(1)) != 175) return false;
              if (16 * BigInt(2) * cubic_r(BigInt(1), BigInt(1), BigInt(0), BigInt(0),
                                           BigInt(1)) != 544)
                return false;
              std::mt19937_64 rng(44);
              for (int i = 0; i < 1000; ++i) {
                auto draw = [&rng]() { return BigInt(rng() % 2'000'001) - 1'000'000; };
                if (!cubic_sum_check(draw(), draw(), draw(), draw(), draw())) return false;
              }
              detail = "pinned case + 1000 random tuples";
              return true;
            });

  criterion("C9 divisibility: lemma-2 implication on every found triangle; 1000 "
            "square-rhs tuples all have mc divisible by 3",
            [&](std::string& detail) {
              for (const auto& r : full.records) {
                if (!lemma2_check(IntTriangle(r.a, r.b, r.c)).implication_holds)
                  return false;
                if (!r.lemma2_ok) return false;
              }
              std::mt19937_64 rng(45);
              int conditioned = 0;
              std::uint64_t sampled = 0;
              while (conditioned < 1000) {
                ++sampled;
                const BigInt ma = rng() % 60, mc = rng() % 400, c = rng() % 400;
                const auto rep = lemma3_mod3(ma, mc, c);
                if (!rep.is_square) continue;
                ++conditioned;
                if (rep.mc_mod3 != 0 || !rep.constraint_holds) {
                  detail = "violation: ma=" + ma.str() + " mc=" + mc.str() + " c=" + c.str();
                  return false;
                }
              }
              detail = "1000 conditioned tuples out of " + std::to_string(sampled) +
                       " sampled";
              return true;
            });

  criterion("C10 determinism: record files for shards 1/4/8 at max side 400 are "
            "byte-identical",
            [&](std::string& detail) {
              for (int shards : {1, 4, 8}) {
                const int rc = run_cli("search --max-side 400 --shards " +
                                           std::to_string(shards) + " --out " +
                                           tmp("c10_" + std::to_string(shards) + ".jsonl"),
                                       tmp("c10.log"));
                if (rc != 0) {
                  detail = "exit code " + std::to_string(rc);
                  return false;
                }
              }
              const auto s1 = read_file(tmp("c10_1.jsonl"));
              if (s1.empty()) return false;
              detail = std::to_string(s1.size()) + " bytes each";
              return s1 == read_file(tmp("c10_4.jsonl")) &&
                     s1 == read_file(tmp("c10_8.jsonl"));
            });

  std::filesystem::remove_all(tmp_dir);
  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed" << std::endl;
    return 0;
  }
  std::cout << g_failures << " acceptance criteria FAILED" << std::endl;
  return 1;
}
