#pragma once

#include <stdexcept>
#include <string>

namespace mfb {

// Bad input: syntax errors, structural validation failures, unknown ids.
// The CLI maps these to exit code 1.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally well-formed input whose decorations admit no covering or no
// resolution (odd Euler characteristic, non-integral self-intersection, ...).
// The CLI maps these to exit code 2.
struct decoration_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
    int line;
    int column;
    parse_error(const std::string& source, int line_, int column_, const std::string& msg)
        : input_error(source + ":" + std::to_string(line_) + ":" + std::to_string(column_)
                      + ": " + msg),
          line(line_), column(column_) {}
};

}
