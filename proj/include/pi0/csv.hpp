#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pi0/frobenius.hpp"

namespace pi0 {

struct csv_format_error : std::runtime_error {
  std::size_t line;
  csv_format_error(std::size_t line_no, const std::string& what)
      : std::runtime_error("csv line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CsvReject {
  std::size_t line = 0;
  FrobeniusRecord record;
  std::string reason;
};

struct IngestResult {
  std::vector<FrobeniusRecord> records;
  std::vector<CsvReject> rejected;
  bool flagged() const { return !rejected.empty(); }
};

namespace detail {

inline std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view s, std::size_t line, const char* what) {
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw csv_format_error(line, std::string("bad ") + what + " field '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

// Reads "p,ap" rows after a mandatory header; p must be non-decreasing.
// Malformed lines throw with their line number; rows violating the Hasse
// bound are rejected (kept in `rejected` with a reason), never dropped
// silently.
inline IngestResult ingest_csv(std::istream& in) {
  IngestResult out;
  std::string raw;
  std::size_t line_no = 0;
  if (!std::getline(in, raw)) throw csv_format_error(1, "missing header");
  ++line_no;
  if (detail::trim_cr(raw) != "p,ap")
    throw csv_format_error(1, "header must be exactly 'p,ap', got '" + raw + "'");
  std::uint64_t prev_p = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view s = detail::trim_cr(raw);
    if (s.empty() && in.peek() == std::char_traits<char>::eof()) break;  // trailing newline
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw csv_format_error(line_no, "missing comma");
    FrobeniusRecord r;
    r.p = detail::parse_int<std::uint64_t>(s.substr(0, comma), line_no, "p");
    r.ap = detail::parse_int<long long>(s.substr(comma + 1), line_no, "ap");
    if (r.p < prev_p) throw csv_format_error(line_no, "p not ascending");
    prev_p = r.p;
    if (!hasse_ok(r.p, r.ap)) {
      out.rejected.push_back(
          CsvReject{line_no, r, "|ap| exceeds 2*sqrt(p)"});
      continue;
    }
    out.records.push_back(r);
  }
  return out;
}

inline IngestResult ingest_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot read '" + path + "'");
  return ingest_csv(in);
}

inline void persist_csv(const std::vector<FrobeniusRecord>& records, std::ostream& out) {
  out << "p,ap\n";
  for (const auto& r : records) out << r.p << ',' << r.ap << '\n';
  if (!out) throw io_error("csv write failed");
}

inline void persist_csv_file(const std::vector<FrobeniusRecord>& records, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot write '" + path + "'");
  persist_csv(records, out);
  out.flush();
  if (!out) throw io_error("cannot write '" + path + "'");
}

}  // namespace pi0
