// Copyright (c) 2026 The swhub Authors
// SPDX-License-Identifier: MIT

#include "swhub/cli/csv.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace swhub::cli {

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_bool(bool v) { return v ? "true" : "false"; }

OrderedCsvWriter::OrderedCsvWriter(const std::string& path,
                                   const std::vector<std::string>& comments,
                                   const CsvRow& header)
    : out_(path, std::ios::out | std::ios::trunc), n_columns_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
  for (const auto& c : comments) out_ << "# " << c << '\n';
  write_row(header);
  out_.flush();
}

void OrderedCsvWriter::write_row(const CsvRow& row) {
  if (row.size() != n_columns_) throw std::logic_error("csv row has the wrong number of fields");
  for (std::size_t k = 0; k < row.size(); ++k) out_ << (k ? "," : "") << row[k];
  out_ << '\n';
}

void OrderedCsvWriter::submit(std::size_t index, PointResult result) {
  std::lock_guard lock(mu_);
  pending_.emplace(index, std::move(result));
  for (auto it = pending_.find(next_); it != pending_.end(); it = pending_.find(next_)) {
    auto& r = it->second;
    for (const auto& row : r.rows) write_row(row);
    n_rows_ += r.rows.size();
    if (r.failure) {
      // keep the message on one line
      std::string msg = *r.failure;
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      out_ << "# failed: " << msg << '\n';
      ++n_failures_;
    }
    worst_code_ = std::max(worst_code_, r.exit_code);
    pending_.erase(it);
    ++next_;
  }
  out_.flush();
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  const auto n_threads = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (n_threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (std::size_t w = 0; w < n_threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) body(k);
    });
  for (auto& th : pool) th.join();
}

}  // namespace swhub::cli
