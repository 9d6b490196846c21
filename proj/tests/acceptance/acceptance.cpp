// Runs every acceptance criterion and prints one PASS/FAIL line for each.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "pcoh/engine.hpp"
#include "pcoh/oracle.hpp"
#include "pcoh/reorder.hpp"
#include "pcoh/rips.hpp"

using namespace pcoh;
using namespace pcoh::testing;
namespace fs = std::filesystem;

namespace {

using clock_type = std::chrono::steady_clock;

struct failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw failure{what};
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string describe(const persistence_diagram& a, const persistence_diagram& b) {
  std::ostringstream s;
  s << diagram_difference(a, b).size() << " points only left, " << diagram_difference(b, a).size()
    << " only right";
  return s.str();
}

const std::vector<named_complex>& corpus() {
  static const auto c = full_corpus(100, 20240611);
  return c;
}

engine_options mode(bool lazy, bool reorder) {
  engine_options o;
  o.lazy = lazy;
  o.reorder = reorder;
  return o;
}

std::string oracle_equivalence() {
  auto t0 = clock_type::now();
  std::size_t runs = 0, random_inputs = 0;
  for (const auto& [name, c] : corpus()) {
    random_inputs += name.starts_with("rips#") && name.find('/') == std::string::npos;
    for (std::uint32_t p : {2u, 3u, 11u, 7919u}) {
      prime_field f(p);
      auto want = oracle::reduce(c, f);
      auto got = compute_persistence(c, f).diagram;
      expect(diagram_equal(got, want), name + " over Z_" + std::to_string(p) + ": " + describe(got, want));
      ++runs;
    }
  }
  expect(random_inputs >= 100, "only " + std::to_string(random_inputs) + " random inputs");
  double secs = seconds_since(t0);
  expect(secs < 60, "took " + std::to_string(secs) + " s");
  std::ostringstream s;
  s << runs << " runs, " << random_inputs << " random Rips inputs, " << secs << " s";
  return s.str();
}

std::string lazy_invariance() {
  std::size_t runs = 0;
  for (const auto& [name, c] : corpus())
    for (std::uint32_t p : {2u, 3u})
      for (bool reorder : {false, true}) {
        prime_field f(p);
        auto eager = compute_persistence(c, f, mode(false, reorder)).diagram;
        auto lazy = compute_persistence(c, f, mode(true, reorder)).diagram;
        expect(diagram_equal(eager, lazy), name + ": " + describe(eager, lazy));
        ++runs;
      }
  return std::to_string(runs) + " comparisons";
}

std::string reorder_invariance() {
  std::size_t runs = 0, iso = 0;
  for (const auto& [name, c] : corpus()) {
    iso += name.ends_with("/iso");
    for (std::uint32_t p : {2u, 3u})
      for (bool lazy : {false, true}) {
        prime_field f(p);
        auto plain = compute_persistence(c, f, mode(lazy, false)).diagram;
        auto reordered = compute_persistence(c, f, mode(lazy, true)).diagram;
        expect(diagram_equal(plain, reordered), name + ": " + describe(plain, reordered));
        ++runs;
      }
  }
  expect(iso > 0, "no single-value inputs");
  return std::to_string(runs) + " comparisons, " + std::to_string(iso) + " single-value inputs";
}

std::string prefix_validity() {
  std::vector<named_complex> fixtures{{"full_triangle", full_triangle()},
                                      {"hollow_triangle", hollow_triangle()},
                                      {"sphere", sphere_boundary()},
                                      {"torus7", torus7()},
                                      {"rp2", rp2_6()}};
  std::size_t checks = 0;
  for (const auto& [name, c] : fixtures)
    for (std::uint32_t p : {2u, 3u, 11u})
      for (bool reorder : {false, true}) {
        prime_field f(p);
        auto order = processing_order(c, reorder);
        auto profile = oracle::betti_profile(c, f, order);
        persistence_engine e(c, f, mode(false, reorder));
        for (std::size_t i = 0; i < order.size(); ++i) {
          e.insert(order[i]);
          for (int d = 0; d <= c.dimension(); ++d) {
            auto want = profile[i + 1][static_cast<std::size_t>(d)];
            expect(e.live_rows(d) == want, name + " step " + std::to_string(i) + " dim " +
                                               std::to_string(d) + ": g=" +
                                               std::to_string(e.live_rows(d)) + " betti=" +
                                               std::to_string(want));
            ++checks;
          }
        }
      }
  return std::to_string(checks) + " prefix checks";
}

std::string field_sensitivity() {
  auto c = rp2_6();
  std::map<std::uint32_t, std::vector<std::size_t>> want{{2, {1, 1, 1}}, {3, {1, 0, 0}}};
  for (const auto& [p, betti] : want) {
    prime_field f(p);
    auto engine = compute_persistence(c, f).diagram;
    auto reference = oracle::reduce(c, f);
    expect(diagram_equal(engine, reference), "engine and oracle disagree over Z_" + std::to_string(p));
    auto oracle_betti = oracle::betti_numbers(c, f, c.size());
    expect(oracle_betti == betti, "oracle Betti numbers over Z_" + std::to_string(p));
    for (int d = 0; d < 3; ++d)
      expect(engine.essential_count(d) == betti[static_cast<std::size_t>(d)],
             "engine Betti_" + std::to_string(d) + " over Z_" + std::to_string(p));
  }
  return "Z_2 (1,1,1), Z_3 (1,0,0)";
}

std::size_t peak_g(const filtered_complex& c, const std::vector<simplex_handle>& order, int dim) {
  persistence_engine e(c, prime_field(2), mode(false, false));
  std::size_t peak = 0;
  for (auto s : order) {
    e.insert(s);
    peak = std::max(peak, e.live_rows(dim));
  }
  return peak;
}

std::string reorder_effectiveness() {
  auto t0 = clock_type::now();
  auto two = two_triangles_slab();
  std::size_t with = peak_g(two, processing_order(two, true), 1);
  std::size_t without = peak_g(two, processing_order(two, false), 1);
  expect(with == 1 && without == 2,
         "two triangles peak g_1 " + std::to_string(with) + " vs " + std::to_string(without));

  auto sphere = sphere_boundary([](const vertex_list&) { return 0.0; });
  auto gm = [&](bool reorder) {
    auto o = mode(false, reorder);
    o.record_stats = true;
    return compute_persistence(sphere, prime_field(2), o).stats.g_max_total;
  };
  std::size_t g_with = gm(true), g_without = gm(false);
  expect(g_with <= g_without, "sphere G_m " + std::to_string(g_with) + " > " + std::to_string(g_without));
  double secs = seconds_since(t0);
  expect(secs < 1, "took " + std::to_string(secs) + " s");
  return "peak g_1 1 vs 2; sphere G_m " + std::to_string(g_with) + " vs " + std::to_string(g_without);
}

std::string compression() {
  auto t0 = clock_type::now();
  std::mt19937_64 rng(1234);
  auto pc = torus_sample(rng, 100);
  auto c = build_rips(pc, 1.2, 2);
  engine_options o;
  o.record_stats = true;
  auto s = compute_persistence(c, prime_field(2), o).stats;
  std::ostringstream report;
  report << c.size() << " simplices, G_m=" << s.g_max_total << " S_m=" << s.s_max_total;
  for (int p = 0; p <= 2; ++p) {
    const auto& peaks = s.per_dim.at(static_cast<std::size_t>(p));
    auto n = c.count(p);
    expect(n > 0, "no " + std::to_string(p) + "-simplices");
    expect(peaks.s_m < n, "s_m[" + std::to_string(p) + "]=" + std::to_string(peaks.s_m) +
                              " not below " + std::to_string(n));
    expect(peaks.s_m <= 4 * peaks.g_m, "s_m[" + std::to_string(p) + "]=" + std::to_string(peaks.s_m) +
                                           " > 4*g_m=" + std::to_string(4 * peaks.g_m));
    report << " | dim " << p << ": n=" << n << " g_m=" << peaks.g_m << " s_m=" << peaks.s_m;
  }
  expect(s.s_max_total < c.size(), "S_m not below simplex count");
  double secs = seconds_since(t0);
  expect(secs < 30, "took " + std::to_string(secs) + " s");
  return report.str();
}

std::string structural_invariants() {
  std::size_t runs = 0;
  for (const auto& [name, c] : corpus()) {
    for (std::uint32_t p : {2u, 3u, 11u}) {
      prime_field f(p);
      // boundary of boundary
      for (auto s : c.simplices()) {
        std::map<simplex_handle, std::int64_t> acc;
        for (const auto& face : c.boundary(s))
          for (const auto& sub : c.boundary(face.face)) acc[sub.face] += face.sign * sub.sign;
        for (const auto& [sub, coeff] : acc)
          expect(f.from_int(coeff) == 0, name + ": boundary of boundary is not zero");
      }
      for (bool lazy : {false, true})
        for (bool reorder : {false, true}) {
          auto o = mode(lazy, reorder);
          o.check_invariants = true;
          persistence_engine e(c, f, o);
          std::vector<std::optional<row_index>> last_row(static_cast<std::size_t>(c.dimension() + 2));
          for (auto s : processing_order(c, reorder)) {
            auto r = lazy ? e.lazy_evaluation(s) : e.insert(s);
            if (!lazy && r.kind == insertion_kind::created) {
              auto& last = last_row[static_cast<std::size_t>(r.dim)];
              expect(!last || r.row > *last, name + ": row indices not increasing");
              last = r.row;
            }
          }
          e.finish();
          for (int d = 0; d <= c.dimension(); ++d) e.matrix(d).check_invariants();
          ++runs;
        }
    }
  }
  return std::to_string(runs) + " checked runs";
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + PCOH_CLI_PATH + "\" " + args + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string cli_determinism() {
  auto dir = fs::temp_directory_path() / ("pcoh_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path data = PCOH_DATA_DIR;
  const std::vector<std::string> configs{
      "--input \"" + (data / "tri.flt").string() + "\" --field 2",
      "--input \"" + (data / "circle.pts").string() +
          "\" --format points --rips-max-edge 1.1 --max-dim 2 --field 3 --stats",
      "--input \"" + (data / "circle.pts").string() +
          "\" --format points --rips-max-edge 1.1 --max-dim 2 --field 3 --no-lazy --no-reorder"};
  std::size_t k = 0;
  for (const auto& cfg : configs) {
    auto a = dir / ("a" + std::to_string(k) + ".dgm"), b = dir / ("b" + std::to_string(k) + ".dgm");
    ++k;
    expect(run_cli(cfg + " --output \"" + a.string() + "\"") == 0, "run failed: " + cfg);
    expect(run_cli(cfg + " --output \"" + b.string() + "\"") == 0, "run failed: " + cfg);
    expect(slurp(a) == slurp(b), "outputs differ: " + cfg);
    expect(!slurp(a).empty(), "empty output: " + cfg);
  }
  expect(slurp(dir / "a1.dgm") == slurp(dir / "a2.dgm"), "lazy/reorder changed the diagram bytes");
  fs::remove_all(dir);
  return std::to_string(configs.size()) + " configurations run twice";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"oracle_equivalence", oracle_equivalence},
      {"lazy_invariance", lazy_invariance},
      {"reorder_invariance", reorder_invariance},
      {"prefix_validity", prefix_validity},
      {"field_sensitivity", field_sensitivity},
      {"reorder_effectiveness", reorder_effectiveness},
      {"compression_effectiveness", compression},
      {"structural_invariants", structural_invariants},
      {"cli_determinism", cli_determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    try {
      std::cout << "PASS " << name << " (" << check() << ")" << std::endl;
    } catch (const failure& f) {
      ++failed;
      std::cout << "FAIL " << name << ": " << f.what << std::endl;
    } catch (const std::exception& e) {
      ++failed;
      std::cout << "FAIL " << name << ": exception: " << e.what() << std::endl;
    }
  }
  return failed == 0 ? 0 : 1;
}
