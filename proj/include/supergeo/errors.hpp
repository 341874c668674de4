#pragma once

#include <stdexcept>
#include <string>

namespace supergeo {

/// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values from different supercharts were combined.
struct chart_mismatch : error {
    chart_mismatch() : error("chart mismatch") {}
    explicit chart_mismatch(const std::string& what) : error(what) {}
};

/// An expression tree uses a construct outside the supported fragment
/// (non-integer exponents, inverses of non-unit sums, ...).
struct unsupported_expression : error {
    explicit unsupported_expression(const std::string& what) : error(what) {}
};

/// A coordinate name was not found in the chart in scope.
struct unknown_coordinate : error {
    explicit unknown_coordinate(const std::string& name)
        : error("unknown coordinate: " + name) {}
};

/// Matrix or chart dimensions do not match the operation's requirements.
struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what) : error(what) {}
};

/// A value had the wrong Z2 parity for the requested operation.
struct parity_mismatch : error {
    explicit parity_mismatch(const std::string& what) : error(what) {}
};

/// A linear solve or division required an inverse that does not exist
/// in the coefficient ring.
struct not_invertible : error {
    explicit not_invertible(const std::string& what) : error(what) {}
};

/// Source text failed to parse; carries 1-based line/column.
struct parse_error : error {
    int line;
    int column;
    parse_error(const std::string& what, int line_, int col_)
        : error(what + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

} // namespace supergeo
