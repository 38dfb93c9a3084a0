#include "d2app/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "d2/errors.hpp"

namespace d2app {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_number(std::string_view s) {
  s = trim(s);
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw d2::ParseError("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Config::Config() : m_list(15) { std::iota(m_list.begin(), m_list.end(), 2); }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    auto item = trim(text.substr(start, end - start));
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_number(item.substr(0, dots));
      const auto hi = parse_number(item.substr(dots + 2));
      if (hi < lo) throw d2::ParseError("empty range '" + std::string(item) + "'");
      for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
    } else {
      out.push_back(static_cast<int>(parse_number(item)));
    }
    start = end + 1;
  }
  return out;
}

void apply_config_text(Config& config, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view l = line;
    if (auto hash = l.find('#'); hash != std::string_view::npos) l = l.substr(0, hash);
    l = trim(l);
    if (l.empty()) continue;
    const auto eq = l.find('=');
    if (eq == std::string_view::npos)
      throw d2::ParseError("config line " + std::to_string(lineno) + ": expected key=value");
    const auto key = std::string(trim(l.substr(0, eq)));
    const auto value = trim(l.substr(eq + 1));
    if (key == "guard") {
      config.guard = static_cast<std::size_t>(parse_number(value));
    } else if (key == "n") {
      config.n_list = parse_int_list(value);
    } else if (key == "m") {
      config.m_list = parse_int_list(value);
    } else if (key == "s") {
      config.stabilizations.clear();
      for (int s : parse_int_list(value)) config.stabilizations.push_back(static_cast<std::size_t>(s));
    } else if (key == "witness_limit") {
      config.witness_limit = static_cast<std::size_t>(parse_number(value));
    } else if (key == "exhaustive_limit") {
      config.exhaustive_limit = static_cast<int>(parse_number(value));
    } else {
      throw d2::ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

Config load_config_from_env() {
  Config config;
  const char* path = std::getenv("D2VERIFY_CONFIG");
  if (path == nullptr || *path == '\0') return config;
  std::ifstream in(path);
  if (!in) throw d2::ParseError(std::string("cannot read config file ") + path);
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(config, buf.str());
  return config;
}

}  // namespace d2app
