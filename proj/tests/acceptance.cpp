// Acceptance run: one PASS/FAIL line per criterion; transcripts of every
// suite are written next to the binary (or to argv[1]) for auditing.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "tonic/harness.hpp"

using namespace tonic;

namespace {

struct Timed {
  SuiteReport report;
  double seconds = 0;
};

Timed timed(const std::function<SuiteReport()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Timed t{run(), 0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return t;
}

std::string counts(const SuiteReport& r) {
  std::ostringstream os;
  os << r.cases.size() << " cases, " << r.violations() << " violations";
  if (const auto b = r.count(CaseStatus::Bound)) os << ", " << b << " bound-limited";
  return os.str();
}

std::string secs(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

bool all_pass(const SuiteReport& r) { return !r.cases.empty() && r.count(CaseStatus::Pass) == r.cases.size(); }

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? std::filesystem::path(argv[1]) : std::filesystem::path("acceptance");
  std::filesystem::create_directories(dir);
  SuiteConfig cfg;  // seed 1, default case counts, base carriers up to 2
  int failures = 0;

  auto save = [&](const SuiteReport& r) { std::ofstream(dir / (r.suite + ".txt")) << r.transcript(); };
  auto line = [&](int n, bool ok, const std::string& what) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "  " << what << std::endl;
    failures += !ok;
  };

  const Timed fx = timed([] { return run_worked_examples(); });
  save(fx.report);
  {
    SuiteReport c1 = fx.report.select("example-key/");
    for (const char* p : {"up-down-1/", "up-down-2/", "up-down-3/"})
      for (auto& c : fx.report.select(p).cases) c1.cases.push_back(c);
    line(1, all_pass(c1) && fx.seconds <= 300, "worked examples: " + counts(c1) + ", " + secs(fx.seconds));
  }

  SuiteConfig wide = cfg;  // plus up to 20000 structures per case with carriers up to 3
  wide.wide_bounds = SizeBounds{3, 2, 1'000'000, 20'000};
  const Timed snd = timed([&] { return run_soundness_suite(wide); });
  save(snd.report);
  {
    bool per_calc = true;
    std::string sizes;
    for (const char* c : {"base/", "base+wc/", "base+pos/", "base+identity/", "base+polarity/"}) {
      const auto n = snd.report.select(c).cases.size();
      per_calc = per_calc && n >= 500;
      sizes += std::string(" ") + c + std::to_string(n);
    }
    line(2, snd.report.passed() && per_calc && snd.seconds <= 600,
         "soundness: " + counts(snd.report) + " (" + sizes.substr(1) + "), " + std::to_string(snd.report.totals()["models"]) +
             " models (" + std::to_string(snd.report.totals()["wide_models"]) + " with carriers up to 3), " + secs(snd.seconds));
  }

  const Timed exc = timed([&] { return run_exclusivity_suite(cfg); });
  save(exc.report);
  {
    auto t = exc.report.totals();
    line(3, exc.report.passed() && exc.report.cases.size() >= 500,
         "exclusivity: " + counts(exc.report) + " (proof " + std::to_string(t["proof"]) + ", countermodel " +
             std::to_string(t["countermodel"]) + ", neither " + std::to_string(t["neither"]) + ")");
  }

  const Timed cmp = timed([&] { return run_completion_suite(cfg); });
  save(cmp.report);
  line(4, all_pass(cmp.report) && cmp.report.select("random5/").cases.size() >= 200 && cmp.seconds <= 300,
       "completion: " + counts(cmp.report) + ", " + std::to_string(cmp.report.totals()["subsets"]) +
           " joins checked, " + secs(cmp.seconds));

  const Timed ext = timed([&] { return run_extension_suite(cfg); });
  save(ext.report);
  line(5, all_pass(ext.report) && ext.report.cases.size() >= 300 && ext.seconds <= 300,
       "extension: " + counts(ext.report) + ", " + secs(ext.seconds));

  const Timed con = timed([&] { return run_conservativity_suite(cfg); });
  save(con.report);
  {
    auto t = con.report.totals();
    line(6, con.report.passed() && con.report.select("random/").cases.size() >= 200,
         "conservativity: " + counts(con.report) + " ((a) " + std::to_string(t["a"]) + " boxed facts, (b) " +
             std::to_string(t["b"]) + " box-free facts)");
  }

  const Timed eq = timed([&] { return run_equational_suite(cfg); });
  save(eq.report);
  line(7, all_pass(eq.report) && eq.report.cases.size() >= 100, "equational: " + counts(eq.report));

  const Timed rt = timed([&] { return run_roundtrip_suite(cfg); });
  save(rt.report);
  line(8,
       all_pass(rt.report) && rt.report.select("problem/").cases.size() >= 1000 &&
           rt.report.select("proof/").cases.size() >= 200,
       "round trip: " + counts(rt.report));

  {
    const SuiteReport c9 = fx.report.select("unsound/");
    line(9, all_pass(c9) && c9.cases.size() == 2, "unsoundness witnesses: " + counts(c9));
  }

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass")
            << "; transcripts in " << dir.string() << std::endl;
  return failures ? 1 : 0;
}
