#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lfg {

/// Named block of ordered `key: value` lines.
struct Section
{
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  void set(const std::string &key, const std::string &value);
  std::optional<std::string> get(const std::string &key) const;
  bool operator==(const Section &) const = default;
};

/// Text format: sections separated by a line "---"; each section starts
/// with "section: <name>" followed by "key: value" lines. LF endings.
struct Manifest
{
  std::vector<Section> sections;

  Section &add(const std::string &name);
  const Section *find(const std::string &name) const;
  bool operator==(const Manifest &) const = default;
};

void write_manifest(std::ostream &out, const Manifest &m);
std::string format_manifest(const Manifest &m);
/// Throws ParseError.
Manifest parse_manifest(const std::string &text);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string &data);

} // namespace lfg
