#include "posat/family_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace posat {

FormatError::FormatError(int line, const std::string& message)
    : Error("family line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  token = trim(token);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw FormatError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

SetFamily read_family(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  SetFamily family;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (n < 0) {
      if (line.substr(0, 1) != "n" || line.size() < 3 || (line[1] != ' ' && line[1] != '\t')) {
        throw FormatError(line_no, "expected header 'n <int>'");
      }
      n = parse_int(line.substr(2), line_no);
      if (n < 0 || n > kMaxGroundSize) throw FormatError(line_no, "ground size outside [0, 63]");
      family = SetFamily(n);
      continue;
    }
    SubsetMask set;
    if (line != "-") {
      int previous = 0;
      std::size_t start = 0;
      while (start <= line.size()) {
        const std::size_t comma = line.find(',', start);
        const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
        const int e = parse_int(line.substr(start, stop - start), line_no);
        if (e < 1 || e > n) throw FormatError(line_no, "element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
        if (e <= previous) throw FormatError(line_no, "elements must be strictly increasing");
        set = set.with(e);
        previous = e;
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }
    if (!family.insert(set)) throw FormatError(line_no, "duplicate set " + to_string(set));
  }
  if (n < 0) throw FormatError(line_no, "missing header 'n <int>'");
  return family;
}

SetFamily read_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open family file '" + path.string() + "'");
  return read_family(in);
}

SetFamily parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_family(in);
}

std::string format_set(SubsetMask s) {
  if (s.empty()) return "-";
  std::string out;
  for (int e : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  }
  return out;
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "n " << f.ground_size() << '\n';
  for (SubsetMask s : f) out << format_set(s) << '\n';
}

void write_family(const std::filesystem::path& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write family file '" + path.string() + "'");
  write_family(out, f);
}

std::string format_family(const SetFamily& f) {
  std::ostringstream out;
  write_family(out, f);
  return out.str();
}

}  // namespace posat
