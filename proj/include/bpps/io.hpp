// Copyright 2026 The bpps Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Plain-text instance and solution files. '#' starts a comment running to the
// end of the line; tokens are whitespace separated.
//
// Instance:                     Solution:
//   BPPS 1                        BPPS-SOL 1
//   n m d r                       <instance-name> <bin_count>
//   f_1 ... f_m                   one line of 1-based item indices per bin
//   s_1 ... s_m
//   w_i c_i   (n lines, classes 1-based)

#ifndef BPPS_IO_HPP_
#define BPPS_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bpps/core.hpp"

namespace bpps::io {

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

namespace detail {

// Non-empty lines with comments stripped, each paired with its 1-based number.
inline std::vector<std::pair<int, std::vector<std::string>>> Lines(
    std::istream& is) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

inline std::int64_t ToInt(const std::string& tok, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != tok.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                     tok + "'");
  }
  return v;
}

inline void ExpectCount(const std::vector<std::string>& tokens, std::size_t count,
                        int line, const std::string& what) {
  if (tokens.size() != count) {
    throw ParseError("line " + std::to_string(line) + ": expected " +
                     std::to_string(count) + " " + what + ", got " +
                     std::to_string(tokens.size()));
  }
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return os.str();
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace detail

inline std::string StemOf(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Parses the instance format; structural checks only (see validate_instance).
inline Instance read_instance(std::istream& is, const std::string& name = {}) {
  const auto lines = detail::Lines(is);
  if (lines.empty()) throw ParseError("empty instance file");
  const auto& [l0, header] = lines[0];
  if (header.size() != 2 || header[0] != "BPPS" || header[1] != "1") {
    throw ParseError("line " + std::to_string(l0) + ": expected header 'BPPS 1'");
  }
  if (lines.size() < 4) throw ParseError("truncated instance file");
  const auto& [l1, dims] = lines[1];
  detail::ExpectCount(dims, 4, l1, "values (n m d r)");
  const std::int64_t n = detail::ToInt(dims[0], l1);
  const std::int64_t m = detail::ToInt(dims[1], l1);
  if (n < 1 || m < 1 || n > kMaxInputValue || m > kMaxInputValue) {
    throw ParseError("line " + std::to_string(l1) + ": n and m must be positive");
  }
  Instance inst;
  inst.name = name;
  inst.capacity = detail::ToInt(dims[2], l1);
  inst.bin_cost = detail::ToInt(dims[3], l1);

  const auto& [l2, costs] = lines[2];
  detail::ExpectCount(costs, static_cast<std::size_t>(m), l2, "setup costs");
  for (const auto& tok : costs) inst.setup_costs.push_back(detail::ToInt(tok, l2));
  const auto& [l3, setups] = lines[3];
  detail::ExpectCount(setups, static_cast<std::size_t>(m), l3, "setup weights");
  for (const auto& tok : setups) inst.setup_weights.push_back(detail::ToInt(tok, l3));

  if (lines.size() != 4 + static_cast<std::size_t>(n)) {
    throw ParseError("expected " + std::to_string(n) + " item lines, got " +
                     std::to_string(lines.size() - 4));
  }
  for (std::size_t k = 4; k < lines.size(); ++k) {
    const auto& [li, item] = lines[k];
    detail::ExpectCount(item, 2, li, "values (w c)");
    inst.weights.push_back(detail::ToInt(item[0], li));
    const std::int64_t c = detail::ToInt(item[1], li);
    if (c < 1 || c > m) {
      throw ParseError("line " + std::to_string(li) + ": class " +
                       std::to_string(c) + " outside 1.." + std::to_string(m));
    }
    inst.class_of.push_back(static_cast<int>(c - 1));
  }
  return inst;
}

inline Instance parse_instance(const std::string& text,
                               const std::string& name = {}) {
  std::istringstream is(text);
  return read_instance(is, name);
}

// The instance name is taken from the file stem.
inline Instance load_instance(const std::string& path) {
  return parse_instance(detail::ReadFile(path), StemOf(path));
}

inline void write_instance(std::ostream& os, const Instance& inst) {
  os << "BPPS 1\n";
  os << inst.item_count() << ' ' << inst.class_count() << ' ' << inst.capacity
     << ' ' << inst.bin_cost << '\n';
  for (int c = 0; c < inst.class_count(); ++c) os << (c ? " " : "") << inst.f(c);
  os << '\n';
  for (int c = 0; c < inst.class_count(); ++c) os << (c ? " " : "") << inst.s(c);
  os << '\n';
  for (int i = 0; i < inst.item_count(); ++i) {
    os << inst.w(i) << ' ' << inst.cls(i) + 1 << '\n';
  }
}

inline std::string format_instance(const Instance& inst) {
  std::ostringstream os;
  write_instance(os, inst);
  return os.str();
}

inline void save_instance(const std::string& path, const Instance& inst) {
  detail::WriteFile(path, format_instance(inst));
}

struct SolutionFile {
  std::string instance_name;
  Solution solution;

  friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

inline SolutionFile read_solution(std::istream& is) {
  const auto lines = detail::Lines(is);
  if (lines.empty()) throw ParseError("empty solution file");
  const auto& [l0, header] = lines[0];
  if (header.size() != 2 || header[0] != "BPPS-SOL" || header[1] != "1") {
    throw ParseError("line " + std::to_string(l0) +
                     ": expected header 'BPPS-SOL 1'");
  }
  if (lines.size() < 2) throw ParseError("missing solution summary line");
  const auto& [l1, summary] = lines[1];
  detail::ExpectCount(summary, 2, l1, "values (name bin_count)");
  SolutionFile out;
  out.instance_name = summary[0];
  const std::int64_t bins = detail::ToInt(summary[1], l1);
  if (bins < 0 || static_cast<std::size_t>(bins) != lines.size() - 2) {
    throw ParseError("bin count " + summary[1] + " does not match " +
                     std::to_string(lines.size() - 2) + " bin lines");
  }
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const auto& [lb, items] = lines[k];
    std::vector<int> bin;
    for (const auto& tok : items) {
      const std::int64_t item = detail::ToInt(tok, lb);
      if (item < 1 || item > kMaxInputValue) {
        throw ParseError("line " + std::to_string(lb) + ": item index " + tok +
                         " must be positive");
      }
      bin.push_back(static_cast<int>(item - 1));
    }
    out.solution.bins.push_back(std::move(bin));
  }
  return out;
}

inline SolutionFile parse_solution(const std::string& text) {
  std::istringstream is(text);
  return read_solution(is);
}

inline SolutionFile load_solution(const std::string& path) {
  return parse_solution(detail::ReadFile(path));
}

inline void write_solution(std::ostream& os, const std::string& instance_name,
                           const Solution& sol) {
  os << "BPPS-SOL 1\n";
  os << (instance_name.empty() ? "-" : instance_name) << ' ' << sol.bin_count()
     << '\n';
  for (const auto& bin : sol.bins) {
    for (std::size_t k = 0; k < bin.size(); ++k) {
      os << (k ? " " : "") << bin[k] + 1;
    }
    os << '\n';
  }
}

inline std::string format_solution(const std::string& instance_name,
                                   const Solution& sol) {
  std::ostringstream os;
  write_solution(os, instance_name, sol);
  return os.str();
}

inline void save_solution(const std::string& path,
                          const std::string& instance_name,
                          const Solution& sol) {
  detail::WriteFile(path, format_solution(instance_name, sol));
}

}  // namespace bpps::io

#endif  // BPPS_IO_HPP_
