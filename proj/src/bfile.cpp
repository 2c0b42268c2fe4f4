#include "hcnlab/bfile.hpp"

#include <fstream>
#include <sstream>

namespace hcnlab {

namespace {

bool integer_token(const std::string& t, bool allow_sign) {
  if (t.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
  if (i == t.size()) return false;
  for (; i < t.size(); ++i) {
    if (t[i] < '0' || t[i] > '9') return false;
  }
  return true;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  bool have_prev = false;
  long long prev_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;       // blank line
    if (first[0] == '#') continue;      // comment
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra)) {
      throw BFileError(line_no, "expected '<index> <value>'");
    }
    if (!integer_token(first, true)) {
      throw BFileError(line_no, "malformed index '" + first + "'");
    }
    if (!integer_token(second, false)) {
      throw BFileError(line_no, "malformed value '" + second + "'");
    }
    BFileEntry e;
    try {
      e.index = std::stoll(first);
    } catch (const std::exception&) {
      throw BFileError(line_no, "index out of range '" + first + "'");
    }
    e.value = Nat(second, 10);
    if (have_prev && e.index <= prev_index) {
      throw BFileError(line_no, "indices must increase strictly");
    }
    prev_index = e.index;
    have_prev = true;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<BFileEntry> parse_bfile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return parse_bfile(in);
}

void write_bfile(std::ostream& out, const std::vector<Nat>& values,
                 long long start_index) {
  long long index = start_index;
  for (const Nat& v : values) {
    out << index++ << ' ' << v.get_str() << '\n';
  }
}

}  // namespace hcnlab
