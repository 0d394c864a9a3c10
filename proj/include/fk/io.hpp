#pragma once

#include <string>
#include <vector>

#include "fk/fourier.hpp"
#include "fk/invariants.hpp"
#include "fk/sampling.hpp"

namespace fk {

// Locale-independent number formatting ('.' decimal point always).
std::string format_double(double v);                  // shortest round-trip
std::string format_double(double v, int significant); // fixed significant digits
double parse_double(const std::string& token);        // throws MalformedInput
long long parse_int(const std::string& token);

// --- knot spec files ---
// One knot per file: "knot <name>", then one term per line:
//   <axis:x|y|z> <amplitude> <freq: int or int/int> <phase> [sin]
// '#' starts a comment.
std::string emit_knot_spec(const FourierKnot& knot);
FourierKnot parse_knot_spec(const std::string& text);

// --- sampled curve CSV: header "t,x,y,z", 17 significant digits ---
std::string emit_curve_csv(const SampledCurve& curve);
std::vector<Vec3> parse_curve_csv(const std::string& text);  // points only

// --- invariant reports ---
std::string report_text(const InvariantReport& report);      // key = value block
std::string report_record(const InvariantReport& report);    // one tab-separated line

std::string frame_text(const ProjectionFrame& frame);

// Whole-file helpers; writes go to a temp file then rename.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace fk
