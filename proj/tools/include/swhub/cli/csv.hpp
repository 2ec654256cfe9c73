// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swhub::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);
std::string hex64(std::uint64_t v);

/// %.17g, enough digits to round-trip a double.
std::string format_double(double v);
std::string format_bool(bool v);

using CsvRow = std::vector<std::string>;

/// Outcome of one grid point: rows on success, a message on failure.
struct PointResult {
  std::vector<CsvRow> rows;
  std::optional<std::string> failure;
  int exit_code = 0;
};

/// Single writer that emits grid points in index order as they complete.
class OrderedCsvWriter {
 public:
  OrderedCsvWriter(const std::string& path, const std::vector<std::string>& comments,
                   const CsvRow& header);

  /// Thread-safe; point `index` is written once every lower index has been.
  void submit(std::size_t index, PointResult result);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_failures() const { return n_failures_; }
  /// Worst per-point exit code seen so far.
  int worst_code() const { return worst_code_; }

 private:
  void write_row(const CsvRow& row);

  std::mutex mu_;
  std::ofstream out_;
  std::size_t n_columns_ = 0;
  std::size_t next_ = 0;
  std::map<std::size_t, PointResult> pending_;
  std::size_t n_rows_ = 0;
  std::size_t n_failures_ = 0;
  int worst_code_ = 0;
};

/// Runs body(0..n-1) on up to `jobs` threads; body must not throw.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body);

}  // namespace swhub::cli
