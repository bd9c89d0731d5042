// Uniform pass/fail reporting for the verification suites.  Items carry
// optional named fields (kappa, residual, relations, ...) that the JSON and
// CSV emitters serialize deterministically.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nk {

struct ReportItem {
  std::string id;
  bool pass = true;
  std::map<std::string, std::string> fields;
};

struct Report {
  std::string suite;
  std::vector<ReportItem> items;
  std::uint64_t checksum = 0;  // FNV-1a of the data files backing the suite

  bool passed() const;
  ReportItem& add(const std::string& id, bool pass);

  std::string to_text() const;
  std::string to_json() const;
  std::string to_csv() const;
};

std::uint64_t fnv1a(std::string_view bytes);
std::string read_file(const std::string& path);  // throws if unreadable

}  // namespace nk
