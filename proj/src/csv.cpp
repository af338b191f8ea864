#include "gfdtd/csv.hpp"

#include <array>
#include <charconv>

namespace gfdtd::csv {

std::string format_number(double value) {
    std::array<char, 40> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::scientific, 15);
    (void)ec;
    return std::string(buf.data(), ptr);
}

void append_row(std::string& out, std::span<const double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) {
            out += ',';
        }
        out += format_number(v);
        first = false;
    }
    out += '\n';
}

void append_row(std::string& out, std::initializer_list<double> values) {
    append_row(out, std::span<const double>(values.begin(), values.size()));
}

void append_header(std::string& out, std::string_view header) {
    out += header;
    out += '\n';
}

}  // namespace gfdtd::csv
