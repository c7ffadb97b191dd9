#pragma once

#include <iosfwd>
#include <string>

#include "lfg/perm_group.hpp"

namespace lfg::group {

/// "perm <degree>: <img0> <img1> ..."; throws ParseError.
Perm parse_perm(const std::string &text, std::size_t line = 0);

/// Group file:
///   p group <degree>
///   g: <img0> <img1> ...   (one line per generator)
/// '#' starts a comment. Throws ParseError.
PermGroup read_group(std::istream &in, std::size_t budget = Budgets{}.enumeration);
PermGroup read_group_file(const std::string &path, std::size_t budget = Budgets{}.enumeration);
PermGroup parse_group(const std::string &text, std::size_t budget = Budgets{}.enumeration);

void write_group(std::ostream &out, const PermGroup &G);
std::string format_group(const PermGroup &G);

} // namespace lfg::group
