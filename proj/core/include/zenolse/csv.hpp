#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace zenolse {

/// Streaming CSV writer: UTF-8, LF line endings, mandatory header row.
/// Doubles are rendered with std::to_chars (shortest round-trip form), which
/// keeps re-runs byte-identical.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path,
            std::span<const std::string> header);

  void row(std::span<const double> values);
  void close();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::filesystem::path& path() const { return path_; }

  static std::string format_double(double v);

 private:
  std::filesystem::path path_;
  std::ofstream out_;
  std::size_t cols_;
  std::size_t rows_ = 0;
};

}  // namespace zenolse
