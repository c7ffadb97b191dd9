#include "lfg/manifest.hpp"

#include <array>
#include <sstream>

#include <openssl/evp.h>

#include "lfg/error.hpp"

namespace lfg {

void Section::set(const std::string &key, const std::string &value)
{
  if (key.empty() || key.find(':') != std::string::npos || key.find('\n') != std::string::npos)
    throw std::invalid_argument("bad manifest key '" + key + "'");
  if (value.find('\n') != std::string::npos)
    throw std::invalid_argument("manifest values are single-line");
  for (auto &[k, v] : entries)
    if (k == key) {
      v = value;
      return;
    }
  entries.emplace_back(key, value);
}

std::optional<std::string> Section::get(const std::string &key) const
{
  for (const auto &[k, v] : entries)
    if (k == key)
      return v;
  return std::nullopt;
}

Section &Manifest::add(const std::string &name)
{
  sections.push_back(Section{name, {}});
  return sections.back();
}

const Section *Manifest::find(const std::string &name) const
{
  for (const auto &s : sections)
    if (s.name == name)
      return &s;
  return nullptr;
}

void write_manifest(std::ostream &out, const Manifest &m)
{
  for (std::size_t i = 0; i < m.sections.size(); ++i) {
    if (i)
      out << "---\n";
    out << "section: " << m.sections[i].name << '\n';
    for (const auto &[k, v] : m.sections[i].entries)
      out << k << ": " << v << '\n';
  }
}

std::string format_manifest(const Manifest &m)
{
  std::ostringstream os;
  write_manifest(os, m);
  return os.str();
}

Manifest parse_manifest(const std::string &text)
{
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool expect_header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line == "---") {
      if (expect_header)
        throw ParseError("empty section", lineno);
      expect_header = true;
      continue;
    }
    const auto colon = line.find(": ");
    std::string key, value;
    if (colon != std::string::npos) {
      key = line.substr(0, colon);
      value = line.substr(colon + 2);
    } else if (!line.empty() && line.back() == ':') {
      key = line.substr(0, line.size() - 1);
    } else {
      throw ParseError("expected 'key: value'", lineno);
    }
    if (expect_header) {
      if (key != "section")
        throw ParseError("expected 'section: <name>'", lineno);
      m.add(value);
      expect_header = false;
      continue;
    }
    m.sections.back().entries.emplace_back(key, value);
  }
  if (expect_header && !m.sections.empty())
    throw ParseError("trailing separator", lineno);
  return m;
}

std::string sha256_hex(const std::string &data)
{
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char *hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

} // namespace lfg
