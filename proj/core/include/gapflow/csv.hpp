// RFC-4180 CSV emission with 17-significant-digit floats (round-trip
// exact for binary64).
#ifndef GAPFLOW_CSV_HPP
#define GAPFLOW_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace gapflow {

std::string format_g17(double v);
std::string csv_quote(const std::string& field);

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& comments,
              const std::vector<std::string>& columns);

    void row(const std::vector<std::string>& fields);
    void row_numeric(const std::vector<double>& values);

private:
    std::ofstream out_;
    std::size_t width_;
};

} // namespace gapflow

#endif
