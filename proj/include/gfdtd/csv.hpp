#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

namespace gfdtd::csv {

/// Scientific notation, 16 significant digits, '.' separator regardless of locale.
std::string format_number(double value);

/// Appends one '\n'-terminated row.
void append_row(std::string& out, std::span<const double> values);
void append_row(std::string& out, std::initializer_list<double> values);
void append_header(std::string& out, std::string_view header);

}  // namespace gfdtd::csv
