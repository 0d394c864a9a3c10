// End-to-end checks of the knot CLI, driven through a subprocess. The binary
// path arrives as argv[1] (wired up by ctest).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "fk/fourier.hpp"
#include "fk/io.hpp"
#include "fk/sampling.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::printf("[%s] %s\n", ok ? "ok" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& cmd) {
  const std::string full = cmd + " 2>&1";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::printf("usage: cli_tests <path-to-knot-binary>\n");
    return 2;
  }
  const std::string knot = argv[1];
  const std::filesystem::path work = std::filesystem::temp_directory_path() / "fk_cli_tests";
  std::filesystem::remove_all(work);
  std::filesystem::create_directories(work);
  const std::string out = " --out " + work.string();

  // --- sample ---
  RunResult r = run(knot + " sample --builtin trefoil" + out);
  check(r.exit_code == 0, "sample trefoil exits 0");
  {
    const std::string csv = fk::read_file((work / "trefoil.csv").string());
    check(csv.rfind("t,x,y,z\n", 0) == 0, "csv header");
    // first data row: t=0, x=1
    const auto line_end = csv.find('\n', 8);
    const std::string row = csv.substr(8, line_end - 8);
    check(row.rfind("0,1,", 0) == 0, "first row is t=0, x=1: " + row);
    const int rows = count_lines(csv) - 1;
    const int expected =
        static_cast<int>(std::ceil(fk::period(fk::fourier_trefoil()) * std::sqrt(29.0) / 0.02));
    check(rows == expected, "row count matches the sampling formula");
  }

  r = run(knot + " sample --builtin fibonacci --n 6" + out);
  check(r.exit_code == 0, "sample fibonacci 6 exits 0");
  {
    const std::string csv = fk::read_file((work / "fibonacci_6_.csv").string());
    const std::vector<fk::Vec3> pts = fk::parse_curve_csv(csv);
    check(pts.size() > 7000, "fibonacci(6) sampled densely");
  }

  // spec file round trip through the CLI
  fk::write_file_atomic((work / "myknot.txt").string(), fk::emit_knot_spec(fk::fourier_trefoil()));
  r = run(knot + " sample --spec " + (work / "myknot.txt").string() + " --chord 0.05" + out);
  check(r.exit_code == 0, "sample from spec file exits 0");
  {
    const std::string csv = fk::read_file((work / "trefoil.csv").string());
    const int rows = count_lines(csv) - 1;
    const int expected =
        static_cast<int>(std::ceil(fk::period(fk::fourier_trefoil()) * std::sqrt(29.0) / 0.05));
    check(rows == expected, "spec-file sampling honors --chord");
  }

  // --- invariants ---
  r = run(knot + " invariants --builtin trefoil --formats report,pd,gauss" + out);
  check(r.exit_code == 0, "invariants trefoil exits 0");
  check(r.output.find("verdict = trefoil (3_1 / torus(2,3))") != std::string::npos,
        "trefoil verdict on stdout");
  check(r.output.find("arf = 1") != std::string::npos, "trefoil arf");
  check(std::filesystem::exists(work / "trefoil.report.txt"), "report file written");
  check(std::filesystem::exists(work / "trefoil.pd"), "pd file written");
  check(std::filesystem::exists(work / "trefoil.gauss"), "gauss file written");

  r = run(knot + " invariants --builtin figure8" + out);
  check(r.exit_code == 0 && r.output.find("figure-eight (4_1)") != std::string::npos,
        "figure8 verdict");

  r = run(knot + " invariants --builtin torus --p 2 --q 5" + out);
  check(r.exit_code == 0 && r.output.find("verdict = torus(2,5)") != std::string::npos,
        "torus(2,5) verdict");

  // --- svg determinism ---
  r = run(knot + " svg --builtin trefoil" + out);
  check(r.exit_code == 0, "svg trefoil exits 0");
  const std::string svg1 = fk::read_file((work / "trefoil.svg").string());
  run(knot + " svg --builtin trefoil" + out);
  const std::string svg2 = fk::read_file((work / "trefoil.svg").string());
  check(svg1 == svg2, "svg output is byte-identical across runs");

  r = run(knot + " svg --builtin lissajous --k1 1 --k2 1 --k3 1 --l2 -1.5707963267948966 --a3 0" + out);
  check(r.exit_code == 0, "svg circle exits 0");
  {
    const std::string svg = fk::read_file((work / "lissajous_1_1_1_.svg").string());
    check(svg.find(" Z") != std::string::npos, "circle path closes unbroken");
  }

  // --- approximate ---
  r = run(knot + " approximate --csv " + (work / "trefoil.csv").string() + " --harmonics 12" + out);
  check(r.exit_code == 0, "approximate exits 0");
  check(r.output.find("verdict = trefoil (3_1 / torus(2,3))") != std::string::npos,
        "approximate identifies the trefoil");
  check(std::filesystem::exists(work / "trefoil_approx.knot"), "fitted spec file written");

  r = run(knot + " approximate --csv " + (work / "trefoil.csv").string() + " --harmonics 2" + out);
  check(r.exit_code == 2, "harmonics too small: NotEmbedded exit code 2");
  check(r.output.find("verdict") == std::string::npos, "no verdict printed on failure");

  // --- error paths ---
  r = run(knot + " invariants --builtin nosuchknot" + out);
  check(r.exit_code == 1, "unknown builtin exits 1");
  r = run(knot + " sample --spec /nonexistent.txt" + out);
  check(r.exit_code == 1, "missing spec file exits 1");
  r = run(knot + " sample" + out);
  check(r.exit_code == 1, "no input exits 1");

  std::printf("%s\n", failures == 0 ? "all cli checks pass" : "CLI FAILURES");
  return failures == 0 ? 0 : 1;
}
