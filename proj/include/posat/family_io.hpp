#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "posat/family.hpp"

namespace posat {

/// Malformed "family v1" input; `line()` is 1-based.
class FormatError : public Error {
 public:
  FormatError(int line, const std::string& message);
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// "family v1": `n <int>`, then one set per line as comma-separated strictly
/// increasing elements of [n], or `-` for the empty set; `#` starts a comment.
SetFamily read_family(std::istream& in);
SetFamily read_family(const std::filesystem::path& path);
SetFamily parse_family(std::string_view text);

/// Canonical form: header, then members in increasing bit value.
void write_family(std::ostream& out, const SetFamily& f);
void write_family(const std::filesystem::path& path, const SetFamily& f);
std::string format_family(const SetFamily& f);

/// One member in file syntax ("1,3" or "-").
std::string format_set(SubsetMask s);

}  // namespace posat
