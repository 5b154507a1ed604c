#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "aaa/linalg.hpp"

namespace aaa {

struct SampleColumns {
    std::vector<Complex> points;
    std::vector<Complex> values;
};

/// CSV with header `re_z,im_z,re_f,im_f`, one sample per row. `inf`/`-inf`
/// are accepted in the value columns. Throws ParseError with a line number.
SampleColumns read_samples_csv(std::istream& in);
SampleColumns load_samples_csv(const std::string& path);

void write_samples_csv(std::ostream& out, std::span<const Complex> points, std::span<const Complex> values);

/// One complex number per line, either `re,im` or `re im` or a single
/// literal such as `2`, `-3i`, `1.5-2e-3i`. Blank lines and `#` comments skipped.
std::vector<Complex> read_points(std::istream& in);

/// Parses a single complex literal (`2`, `0.5`, `-3i`, `1+2i`, `i`).
Complex parse_complex(const std::string& text);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

/// Scientific notation with 17 significant digits.
std::string format_double17(double x);

}  // namespace aaa
