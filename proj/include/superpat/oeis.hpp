#pragma once

// Reader for OEIS b-files ("n a(n)" per line, '#' comments).

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "superpat/error.hpp"
#include "superpat/exact_series.hpp"

namespace superpat {

inline std::map<long, BigInt> parse_bfile(std::istream& in) {
  std::map<long, BigInt> terms;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long n = 0;
    std::string value;
    if (!(fields >> n >> value)) throw ParseError("bad b-file line: " + line);
    try {
      terms[n] = BigInt(value);
    } catch (const std::exception&) {
      throw ParseError("bad b-file value: " + line);
    }
  }
  return terms;
}

inline std::map<long, BigInt> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open b-file " + path);
  return parse_bfile(in);
}

}  // namespace superpat
