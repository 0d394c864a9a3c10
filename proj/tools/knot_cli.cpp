// Command-line front end: sample knots to CSV, extract diagrams, compute
// invariants, render SVG, refit polylines as Fourier knots, and run the
// built-in verification suite.

#include <CLI11.hpp>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "fk/approximate.hpp"
#include "fk/embedding.hpp"
#include "fk/errors.hpp"
#include "fk/invariants.hpp"
#include "fk/io.hpp"
#include "fk/verify.hpp"
#include "fk/svg.hpp"

namespace {

// Stable exit codes, one per error family.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;  // bad flags, malformed input, IO failures
constexpr int kExitNotEmbedded = 2;
constexpr int kExitNoGenericProjection = 3;
constexpr int kExitNotClosed = 4;
constexpr int kExitTooFewSamples = 5;
constexpr int kExitInternal = 6;

int exit_code_for(fk::Err code) {
  switch (code) {
    case fk::Err::NotEmbedded:
      return kExitNotEmbedded;
    case fk::Err::NoGenericProjection:
      return kExitNoGenericProjection;
    case fk::Err::NotClosed:
      return kExitNotClosed;
    case fk::Err::TooFewSamples:
      return kExitTooFewSamples;
    case fk::Err::Internal:
      return kExitInternal;
    default:
      return kExitUsage;
  }
}

struct InputOptions {
  std::string builtin;
  std::string spec_path;
  int fib_n = 6;
  int torus_p = 2;
  int torus_q = 3;
  std::string k1 = "3", k2 = "2", k3 = "7";
  double l1 = 0, l2 = 0, l3 = 0;
  double a1 = 1, a2 = 1, a3 = 1;
};

void add_input_flags(CLI::App* cmd, InputOptions* in) {
  cmd->add_option("--builtin", in->builtin,
                  "built-in knot: trefoil, figure8, fibonacci, torus, lissajous");
  cmd->add_option("--spec", in->spec_path, "knot spec file");
  cmd->add_option("--n", in->fib_n, "fibonacci index (with --builtin fibonacci)");
  cmd->add_option("--p", in->torus_p, "torus p (with --builtin torus)");
  cmd->add_option("--q", in->torus_q, "torus q (with --builtin torus)");
  cmd->add_option("--k1", in->k1, "lissajous x frequency (int or int/int)");
  cmd->add_option("--k2", in->k2, "lissajous y frequency");
  cmd->add_option("--k3", in->k3, "lissajous z frequency");
  cmd->add_option("--l1", in->l1, "lissajous x phase");
  cmd->add_option("--l2", in->l2, "lissajous y phase");
  cmd->add_option("--l3", in->l3, "lissajous z phase");
  cmd->add_option("--a1", in->a1, "lissajous x amplitude");
  cmd->add_option("--a2", in->a2, "lissajous y amplitude");
  cmd->add_option("--a3", in->a3, "lissajous z amplitude");
}

fk::Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return fk::Rational(fk::parse_int(text));
  return fk::Rational(fk::parse_int(text.substr(0, slash)), fk::parse_int(text.substr(slash + 1)));
}

fk::FourierKnot resolve_input(const InputOptions& in) {
  if (!in.spec_path.empty()) return fk::parse_knot_spec(fk::read_file(in.spec_path));
  if (in.builtin == "trefoil") return fk::fourier_trefoil();
  if (in.builtin == "figure8") return fk::fourier_figure_eight();
  if (in.builtin == "fibonacci") return fk::fibonacci_knot(in.fib_n);
  if (in.builtin == "torus") return fk::torus_knot_fourier(in.torus_p, in.torus_q);
  if (in.builtin == "lissajous")
    return fk::lissajous(parse_rational(in.k1), parse_rational(in.k2), parse_rational(in.k3),
                         in.l1, in.l2, in.l3, in.a1, in.a2, in.a3);
  fk::raise(fk::Err::MalformedInput,
            in.builtin.empty() ? "need --builtin or --spec"
                               : "unknown builtin '" + in.builtin + "'");
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out.empty() ? "knot" : out;
}

std::string out_path(const std::string& dir, const std::string& stem, const std::string& ext) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / (stem + ext)).string();
}

int cmd_sample(const InputOptions& in, double chord, const std::string& out_dir) {
  const fk::FourierKnot knot = fk::normalize_traversal(resolve_input(in));
  const fk::SampledCurve curve = fk::sample(knot, chord);
  const std::string path = out_path(out_dir, file_stem(knot.name), ".csv");
  fk::write_file_atomic(path, fk::emit_curve_csv(curve));
  std::cout << "period = " << fk::format_double(curve.period) << "\n"
            << "points = " << curve.size() << "\n"
            << "speed_bound = " << fk::format_double(fk::speed_bound(knot)) << "\n"
            << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_invariants(const InputOptions& in, double chord, const std::string& out_dir,
                   const std::string& formats_csv) {
  const fk::FourierKnot knot = resolve_input(in);
  const fk::PipelineResult result = fk::run_pipeline(knot, chord);
  const std::string stem = file_stem(knot.name);

  std::set<std::string> formats;
  std::stringstream ss(formats_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item != "csv" && item != "svg" && item != "pd" && item != "gauss" && item != "report")
      fk::raise(fk::Err::MalformedInput, "unknown format '" + item + "'");
    formats.insert(item);
  }

  if (formats.count("csv"))
    fk::write_file_atomic(out_path(out_dir, stem, ".csv"), fk::emit_curve_csv(result.curve));
  if (formats.count("svg"))
    fk::write_file_atomic(out_path(out_dir, stem, ".svg"),
                          fk::render_svg(result.curve, result.report.frame, result.diagram));
  if (formats.count("pd"))
    fk::write_file_atomic(out_path(out_dir, stem, ".pd"), result.diagram.pd_code() + "\n");
  if (formats.count("gauss"))
    fk::write_file_atomic(out_path(out_dir, stem, ".gauss"), result.diagram.gauss_code() + "\n");
  if (formats.count("report")) {
    fk::write_file_atomic(out_path(out_dir, stem, ".report.txt"), fk::report_text(result.report));
    fk::write_file_atomic(out_path(out_dir, stem, ".record"),
                          fk::report_record(result.report) + "\n");
  }
  std::cout << fk::report_text(result.report);
  return kExitOk;
}

int cmd_svg(const InputOptions& in, double chord, const std::string& out_dir) {
  const fk::FourierKnot knot = resolve_input(in);
  const fk::PipelineResult result = fk::run_pipeline(knot, chord);
  const std::string path = out_path(out_dir, file_stem(knot.name), ".svg");
  fk::write_file_atomic(path, fk::render_svg(result.curve, result.report.frame, result.diagram));
  std::cout << "wrote " << path << " (" << result.diagram.crossing_count() << " crossings)\n";
  return kExitOk;
}

int cmd_approximate(const std::string& csv_path, int harmonics, const std::string& out_dir) {
  const fk::SampledCurve polyline = fk::closed_polyline(fk::parse_curve_csv(fk::read_file(csv_path)));
  fk::ApproxResult approx = fk::fourier_approximate(polyline, harmonics);
  approx.knot.name = std::filesystem::path(csv_path).stem().string() + "-approx";
  const fk::InvariantReport report = fk::full_report(approx.knot);
  const std::string path = out_path(out_dir, file_stem(approx.knot.name), ".knot");
  fk::write_file_atomic(path, fk::emit_knot_spec(approx.knot));
  std::cout << "max_deviation = " << fk::format_double(approx.max_deviation) << "\n"
            << "verdict = " << report.verdict << "\n"
            << "wrote " << path << "\n";
  return kExitOk;
}

int cmd_verify() {
  const std::vector<fk::CriterionResult> results = fk::run_verification_suite();
  bool all_pass = true;
  std::printf("%-4s %-48s %-6s %8s\n", "#", "claim", "status", "seconds");
  for (const fk::CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    std::printf("%-4d %-48s %-6s %8.2f\n", r.index, r.name.c_str(), r.pass ? "PASS" : "FAIL",
                r.seconds);
    std::printf("     expected: %s\n", r.expected.c_str());
    std::printf("     got:      %s\n", r.got.c_str());
  }
  std::printf("%s\n", all_pass ? "all claims pass" : "FAILURES present");
  return all_pass ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier knot toolkit"};
  app.require_subcommand(1);

  InputOptions in;
  double chord = 0.02;
  std::string out_dir = ".";
  std::string formats = "report";
  std::string csv_path;
  int harmonics = 12;

  CLI::App* sample = app.add_subcommand("sample", "sample a knot to CSV");
  add_input_flags(sample, &in);
  sample->add_option("--chord", chord, "target chord length (default 0.02)");
  sample->add_option("--out", out_dir, "output directory");

  CLI::App* invariants = app.add_subcommand("invariants", "full invariant report");
  add_input_flags(invariants, &in);
  invariants->add_option("--chord", chord, "target chord length");
  invariants->add_option("--out", out_dir, "output directory");
  invariants->add_option("--formats", formats, "comma list of csv,svg,pd,gauss,report");

  CLI::App* svg = app.add_subcommand("svg", "draw the projected diagram as SVG");
  add_input_flags(svg, &in);
  svg->add_option("--chord", chord, "target chord length");
  svg->add_option("--out", out_dir, "output directory");

  CLI::App* approx = app.add_subcommand("approximate", "fit a Fourier knot to a closed CSV polyline");
  approx->add_option("--csv", csv_path, "input CSV (t,x,y,z or header-less)")->required();
  approx->add_option("--harmonics", harmonics, "number of harmonics to keep");
  approx->add_option("--out", out_dir, "output directory");

  CLI::App* suite = app.add_subcommand("verify", "run every built-in verification claim");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(in, chord, out_dir);
    if (invariants->parsed()) return cmd_invariants(in, chord, out_dir, formats);
    if (svg->parsed()) return cmd_svg(in, chord, out_dir);
    if (approx->parsed()) return cmd_approximate(csv_path, harmonics, out_dir);
    if (suite->parsed()) return cmd_verify();
  } catch (const fk::KnotError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
