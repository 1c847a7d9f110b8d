#include "zenolse/csv.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "zenolse/errors.hpp"

namespace zenolse {

CsvWriter::CsvWriter(const std::filesystem::path& path,
                     std::span<const std::string> header)
    : path_(path), cols_(header.size()) {
  out_.open(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!out_) {
    throw ConfigError("cannot open output file " + path.string());
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

std::string CsvWriter::format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void CsvWriter::row(std::span<const double> values) {
  char buf[32];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    if (std::isnan(values[i])) {
      out_ << "nan";
    } else {
      const auto res = std::to_chars(buf, buf + sizeof(buf), values[i]);
      out_.write(buf, res.ptr - buf);
    }
  }
  out_ << '\n';
  ++rows_;
}

void CsvWriter::close() {
  if (out_.is_open()) {
    out_.close();
    if (!out_) {
      throw NumericError("failed writing " + path_.string());
    }
  }
}

}  // namespace zenolse
