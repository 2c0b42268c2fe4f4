#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcnlab/nat.hpp"

namespace hcnlab {

// One line of OEIS bulk data: "<index> <value>".
struct BFileEntry {
  long long index = 0;
  Nat value;
};

// Parse failure with its 1-based line number.
struct BFileError : std::runtime_error {
  std::size_t line = 0;
  BFileError(std::size_t line_no, const std::string& what)
      : std::runtime_error("b-file parse error line " +
                           std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

// Lines beginning '#' and blank lines are skipped. Indices must be strictly
// increasing. Values parse exactly at any size.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile_file(const std::string& path);

// "index value" lines starting at start_index; round-trips through
// parse_bfile losslessly.
void write_bfile(std::ostream& out, const std::vector<Nat>& values,
                 long long start_index = 1);

}  // namespace hcnlab
