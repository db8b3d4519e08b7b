#include "snaphdr/keyval.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snaphdr {

namespace {
std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

KeyVal KeyVal::parse(const std::string& text) {
  KeyVal out;
  std::istringstream in(text);
  std::string line, section;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::runtime_error("config line " + std::to_string(lineNo) + ": unterminated section");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineNo) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line " + std::to_string(lineNo) + ": empty key");
    out.kv_[section.empty() ? key : section + "." + key] = value;
  }
  return out;
}

KeyVal KeyVal::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string KeyVal::serialize() const {
  std::ostringstream out;
  std::string section;
  bool first = true;
  for (const auto& [key, value] : kv_) {
    const auto dot = key.find('.');
    const std::string sec = dot == std::string::npos ? "" : key.substr(0, dot);
    const std::string bare = dot == std::string::npos ? key : key.substr(dot + 1);
    if (sec != section || first) {
      if (!sec.empty()) out << (first ? "" : "\n") << "[" << sec << "]\n";
      section = sec;
    }
    out << bare << "=" << value << "\n";
    first = false;
  }
  return out.str();
}

std::string KeyVal::get(const std::string& key, const std::string& fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double KeyVal::get_double(const std::string& key, double fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : std::stod(it->second);
}

long KeyVal::get_int(const std::string& key, long fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : std::stol(it->second);
}

}  // namespace snaphdr
