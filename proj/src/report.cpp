#include "nk/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nk {

bool Report::passed() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

ReportItem& Report::add(const std::string& id, bool pass) {
  items.push_back({id, pass, {}});
  return items.back();
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "== " << suite << " ==\n";
  for (const auto& it : items) {
    os << (it.pass ? "  ok   " : "  FAIL ") << it.id;
    for (const auto& [k, v] : it.fields) os << "  " << k << "=" << v;
    os << "\n";
  }
  os << (passed() ? "PASS" : "FAIL") << " (" << items.size() << " items)\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& it : items) {
    nlohmann::ordered_json o;
    o["id"] = it.id;
    o["status"] = it.pass ? "pass" : "fail";
    for (const auto& [k, v] : it.fields) o[k] = v;
    j["items"].push_back(o);
  }
  std::ostringstream cs;
  cs << std::hex << checksum;
  j["checksum"] = cs.str();
  return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
  // union of field names, in first-seen order
  std::vector<std::string> cols;
  for (const auto& it : items)
    for (const auto& [k, v] : it.fields) {
      bool seen = false;
      for (const auto& c : cols) seen = seen || c == k;
      if (!seen) cols.push_back(k);
    }
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  std::ostringstream os;
  os << "id,status";
  for (const auto& c : cols) os << "," << c;
  os << "\n";
  for (const auto& it : items) {
    os << quote(it.id) << "," << (it.pass ? "pass" : "fail");
    for (const auto& c : cols) {
      auto f = it.fields.find(c);
      os << "," << (f == it.fields.end() ? "" : quote(f->second));
    }
    os << "\n";
  }
  return os.str();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace nk
