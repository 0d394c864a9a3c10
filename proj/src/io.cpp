#include "fk/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fk/errors.hpp"

namespace fk {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_double(double v, int significant) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& token) {
  double v = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    raise(Err::MalformedInput, "bad number '" + token + "'");
  return v;
}

long long parse_int(const std::string& token) {
  long long v = 0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    raise(Err::MalformedInput, "bad integer '" + token + "'");
  return v;
}

namespace {

Rational parse_freq(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos) return Rational(parse_int(token));
  return Rational(parse_int(token.substr(0, slash)), parse_int(token.substr(slash + 1)));
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string emit_knot_spec(const FourierKnot& knot) {
  std::string out = "knot " + (knot.name.empty() ? std::string("unnamed") : knot.name) + "\n";
  const char axes[3] = {'x', 'y', 'z'};
  for (int axis = 0; axis < 3; ++axis) {
    for (const CosTerm& t : knot.coord(axis).terms()) {
      out += axes[axis];
      out += " " + format_double(t.amplitude) + " " + t.freq.to_string() + " " +
             format_double(t.phase) + "\n";
    }
  }
  return out;
}

FourierKnot parse_knot_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool saw_header = false;
  std::string name;
  SeriesBuilder builders[3];
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tok = split_ws(line);
    if (tok.empty()) continue;
    if (!saw_header) {
      if (tok[0] != "knot" || tok.size() < 2)
        raise(Err::MalformedInput, "expected 'knot <name>' header");
      name = tok[1];
      saw_header = true;
      continue;
    }
    if (tok.size() < 4 || tok.size() > 5 || tok[0].size() != 1)
      raise(Err::MalformedInput, "expected '<axis> <amplitude> <freq> <phase> [sin]'");
    int axis = tok[0] == "x" ? 0 : tok[0] == "y" ? 1 : tok[0] == "z" ? 2 : -1;
    if (axis < 0) raise(Err::MalformedInput, "axis must be x, y or z");
    const double amplitude = parse_double(tok[1]);
    const Rational freq = parse_freq(tok[2]);
    const double phase = parse_double(tok[3]);
    bool is_sin = false;
    if (tok.size() == 5) {
      if (tok[4] != "sin") raise(Err::MalformedInput, "trailing token must be 'sin'");
      is_sin = true;
    }
    if (is_sin)
      builders[axis].sin(amplitude, freq, phase);
    else
      builders[axis].cos(amplitude, freq, phase);
  }
  if (!saw_header) raise(Err::MalformedInput, "missing 'knot <name>' header");
  FourierKnot knot;
  knot.x = builders[0].build();
  knot.y = builders[1].build();
  knot.z = builders[2].build();
  knot.name = name;
  return knot;
}

std::string emit_curve_csv(const SampledCurve& curve) {
  std::string out = "t,x,y,z\n";
  for (int i = 0; i < curve.size(); ++i) {
    const Vec3& p = curve.point(i);
    out += format_double(curve.params[static_cast<std::size_t>(i)], 17) + "," +
           format_double(p.x, 17) + "," + format_double(p.y, 17) + "," +
           format_double(p.z, 17) + "\n";
  }
  return out;
}

std::vector<Vec3> parse_curve_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Vec3> points;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cols;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cols.push_back(cell);
    if (first) {
      first = false;
      if (!cols.empty() && cols[0] == "t") continue;  // header
    }
    if (cols.size() != 4) raise(Err::MalformedInput, "CSV rows must be t,x,y,z");
    points.push_back({parse_double(cols[1]), parse_double(cols[2]), parse_double(cols[3])});
  }
  return points;
}

std::string frame_text(const ProjectionFrame& frame) {
  auto vec = [](const Vec3& v) {
    return "[" + format_double(v.x) + "," + format_double(v.y) + "," + format_double(v.z) + "]";
  };
  return "d=" + vec(frame.direction) + " u=" + vec(frame.u) + " v=" + vec(frame.v);
}

std::string report_text(const InvariantReport& report) {
  std::string out;
  out += "knot = " + report.knot_name + "\n";
  out += "frame = " + frame_text(report.frame) + "\n";
  out += "crossings = " + std::to_string(report.crossing_count) + "\n";
  out += "writhe = " + std::to_string(report.writhe) + "\n";
  out += "a = " + std::to_string(report.a_value) + "\n";
  out += "arf = " + std::to_string(report.arf) + "\n";
  out += "alexander = " + report.alexander.to_string() + "\n";
  out += "determinant = " + std::to_string(report.determinant) + "\n";
  out += "verdict = " + report.verdict + "\n";
  return out;
}

std::string report_record(const InvariantReport& report) {
  std::string out;
  out += std::to_string(report.crossing_count);
  out += "\t" + std::to_string(report.writhe);
  out += "\t" + std::to_string(report.a_value);
  out += "\t" + std::to_string(report.arf);
  out += "\t" + report.alexander.machine_string();
  out += "\t" + std::to_string(report.determinant);
  out += "\t" + report.verdict;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Err::Io, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(Err::Io, "cannot write " + tmp);
    out << contents;
    if (!out.flush()) raise(Err::Io, "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) raise(Err::Io, "cannot rename " + tmp + " to " + path);
}

}  // namespace fk
