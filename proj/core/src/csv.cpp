#include "gapflow/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gapflow {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& f) {
    if (f.find_first_of(",\"\n\r") == std::string::npos) return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns)
    : out_(path), width_(columns.size()) {
    if (!out_) throw std::runtime_error("cannot open output file: " + path);
    for (const auto& c : comments) out_ << "# " << c << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << (i ? "," : "") << csv_quote(columns[i]);
    out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    if (fields.size() != width_)
        throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < fields.size(); ++i)
        out_ << (i ? "," : "") << csv_quote(fields[i]);
    out_ << "\n";
}

void CsvWriter::row_numeric(const std::vector<double>& values) {
    std::vector<std::string> f;
    f.reserve(values.size());
    for (double v : values) f.push_back(format_g17(v));
    row(f);
}

} // namespace gapflow
