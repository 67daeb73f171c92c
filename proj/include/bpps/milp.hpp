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

// Solver-agnostic assignment model of the BPPS and its LP-format text form.
//
//   min  sum_b ( r z_b + sum_c f_c y_cb )
//   s.t. sum_b x_ib = 1                                   assign_i
//        sum_i w_i x_ib + sum_c s_c y_cb - d z_b <= 0     cap_b
//        x_ib - y_cb <= 0        (c = class of i)         link_c_i_b
//        sum_b y_cb >= gamma_c                            mci_c   (dag, ddag, star)
//        sum_b z_b >= k_lower                             mbi     (ddag, star)
//        x, y, z binary
//
// Variants n, dag and ddag use k = n candidate bins; star uses the class-wise
// upper bound on the number of bins.

#ifndef BPPS_MILP_HPP_
#define BPPS_MILP_HPP_

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "bpps/bounds.hpp"
#include "bpps/cha.hpp"
#include "bpps/core.hpp"

namespace bpps::milp {

enum class RowFamily { kAssignment, kCapacity, kLinking, kMci, kMbi };
enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  std::int64_t coef = 0;
  int var = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Row {
  std::string name;
  RowFamily family = RowFamily::kAssignment;
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  std::int64_t rhs = 0;
  friend bool operator==(const Row&, const Row&) = default;
};

// Variables are laid out as x (item-major), then y (class-major), then z.
struct MilpModel {
  Variant variant = Variant::kN;
  int n = 0;
  int m = 0;
  int k = 0;
  std::vector<Term> objective;
  std::vector<Row> rows;

  int x(int item, int bin) const { return item * k + bin; }
  int y(int cls, int bin) const { return (n + cls) * k + bin; }
  int z(int bin) const { return (n + m) * k + bin; }

  int variable_count() const { return (n + m + 1) * k; }
  int constraint_count() const { return static_cast<int>(rows.size()); }

  std::string variable_name(int var) const {
    const int block = var / k;
    const int bin = var % k + 1;
    if (block < n) {
      return "x_" + std::to_string(block + 1) + "_" + std::to_string(bin);
    }
    if (block < n + m) {
      return "y_" + std::to_string(block - n + 1) + "_" + std::to_string(bin);
    }
    return "z_" + std::to_string(bin);
  }

  // Inverse of variable_name; nullopt for names outside the catalog.
  std::optional<int> variable_index(std::string_view name) const {
    if (name.size() < 3 || name[1] != '_') return std::nullopt;
    int parts[2] = {0, 0};
    std::size_t count = 0;
    const char* p = name.data() + 2;
    const char* const end = name.data() + name.size();
    while (true) {
      if (count == 2 || p == end || *p < '1' || *p > '9') return std::nullopt;
      int value = 0;
      const auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc() || next - p > 9) return std::nullopt;
      parts[count++] = value - 1;
      if (next == end) break;
      if (*next != '_') return std::nullopt;
      p = next + 1;
    }
    auto in = [](int v, int hi) { return v >= 0 && v < hi; };
    switch (name[0]) {
      case 'x':
        if (count == 2 && in(parts[0], n) && in(parts[1], k)) {
          return x(parts[0], parts[1]);
        }
        break;
      case 'y':
        if (count == 2 && in(parts[0], m) && in(parts[1], k)) {
          return y(parts[0], parts[1]);
        }
        break;
      case 'z':
        if (count == 1 && in(parts[0], k)) return z(parts[0]);
        break;
      default:
        break;
    }
    return std::nullopt;
  }

  int expected_constraint_count() const {
    return (n + 1) * k + n + (HasMci(variant) ? m : 0) +
           (HasMbi(variant) ? 1 : 0);
  }

  friend bool operator==(const MilpModel&, const MilpModel&) = default;
};

// Builds the model with an explicit number of candidate bins.
inline MilpModel build_model(const Instance& inst, Variant variant, int k) {
  require_valid(inst);
  if (k < 1) throw PreconditionError("model needs at least one bin");
  MilpModel model;
  model.variant = variant;
  model.n = inst.item_count();
  model.m = inst.class_count();
  model.k = k;
  const int n = model.n;
  const int m = model.m;

  for (int b = 0; b < k; ++b) {
    model.objective.push_back({inst.bin_cost, model.z(b)});
    for (int c = 0; c < m; ++c) {
      if (inst.f(c) != 0) model.objective.push_back({inst.f(c), model.y(c, b)});
    }
  }
  for (int i = 0; i < n; ++i) {
    Row row{"assign_" + std::to_string(i + 1), RowFamily::kAssignment, {},
            Sense::kEqual, 1};
    for (int b = 0; b < k; ++b) row.terms.push_back({1, model.x(i, b)});
    model.rows.push_back(std::move(row));
  }
  for (int b = 0; b < k; ++b) {
    Row row{"cap_" + std::to_string(b + 1), RowFamily::kCapacity, {},
            Sense::kLessEqual, 0};
    for (int i = 0; i < n; ++i) row.terms.push_back({inst.w(i), model.x(i, b)});
    for (int c = 0; c < m; ++c) {
      if (inst.s(c) != 0) row.terms.push_back({inst.s(c), model.y(c, b)});
    }
    row.terms.push_back({-inst.capacity, model.z(b)});
    model.rows.push_back(std::move(row));
  }
  for (int i = 0; i < n; ++i) {
    const int c = inst.cls(i);
    for (int b = 0; b < k; ++b) {
      model.rows.push_back({"link_" + std::to_string(c + 1) + "_" +
                                std::to_string(i + 1) + "_" +
                                std::to_string(b + 1),
                            RowFamily::kLinking,
                            {{1, model.x(i, b)}, {-1, model.y(c, b)}},
                            Sense::kLessEqual,
                            0});
    }
  }
  if (HasMci(variant)) {
    const auto g = gamma(inst);
    for (int c = 0; c < m; ++c) {
      Row row{"mci_" + std::to_string(c + 1), RowFamily::kMci, {},
              Sense::kGreaterEqual, g[static_cast<std::size_t>(c)]};
      for (int b = 0; b < k; ++b) row.terms.push_back({1, model.y(c, b)});
      model.rows.push_back(std::move(row));
    }
  }
  if (HasMbi(variant)) {
    Row row{"mbi", RowFamily::kMbi, {}, Sense::kGreaterEqual, k_lower(inst)};
    for (int b = 0; b < k; ++b) row.terms.push_back({1, model.z(b)});
    model.rows.push_back(std::move(row));
  }
  return model;
}

// k = n for n/dag/ddag; k = class-wise upper bound for star (heuristic class
// packings unless `star_options` says otherwise).
inline MilpModel build_model(const Instance& inst, Variant variant,
                             const ChaOptions& star_options = [] {
                               ChaOptions o;
                               o.mode = BppMode::kHeuristic;
                               return o;
                             }()) {
  const int k = variant == Variant::kStar
                    ? static_cast<int>(k_upper(inst, star_options))
                    : inst.item_count();
  return build_model(inst, variant, k);
}

// ---------------------------------------------------------------------------
// LP-format text.

namespace detail {

inline constexpr int kTermsPerLine = 8;

inline void WriteTerms(std::ostream& os, const MilpModel& model,
                       const std::vector<Term>& terms) {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t > 0 && t % kTermsPerLine == 0) os << "\n   ";
    const Term& term = terms[t];
    const std::int64_t magnitude = term.coef < 0 ? -term.coef : term.coef;
    if (t == 0) {
      if (term.coef < 0) os << "- ";
    } else {
      os << (term.coef < 0 ? " - " : " + ");
    }
    if (magnitude != 1) os << magnitude << ' ';
    os << model.variable_name(term.var);
  }
}

inline const char* SenseText(Sense s) {
  switch (s) {
    case Sense::kLessEqual: return "<=";
    case Sense::kGreaterEqual: return ">=";
    case Sense::kEqual: return "=";
  }
  return "?";
}

inline RowFamily FamilyOf(const std::string& name) {
  if (name.rfind("assign_", 0) == 0) return RowFamily::kAssignment;
  if (name.rfind("cap_", 0) == 0) return RowFamily::kCapacity;
  if (name.rfind("link_", 0) == 0) return RowFamily::kLinking;
  if (name.rfind("mci_", 0) == 0) return RowFamily::kMci;
  if (name == "mbi") return RowFamily::kMbi;
  throw ParseError("unknown row name '" + name + "'");
}

inline std::int64_t ParseInt(std::string_view token) {
  std::int64_t v = 0;
  const char* const end = token.data() + token.size();
  const auto [next, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || next != end) {
    throw ParseError("expected an integer, got '" + std::string(token) + "'");
  }
  return v;
}

// Parses "[-] [coef] name (+|-) [coef] name ..." into terms.
inline std::vector<Term> ParseTerms(const MilpModel& model,
                                    const std::vector<std::string_view>& tokens) {
  std::vector<Term> terms;
  std::int64_t sign = 1;
  std::int64_t coef = 1;
  bool have_coef = false;
  for (const std::string_view tok : tokens) {
    if (tok == "+" || tok == "-") {
      if (have_coef) {
        throw ParseError("dangling coefficient before '" + std::string(tok) + "'");
      }
      sign = tok == "-" ? -sign : sign;
      continue;
    }
    if (tok.find_first_not_of("0123456789") == std::string_view::npos) {
      if (have_coef) throw ParseError("two coefficients in a row");
      coef = ParseInt(tok);
      have_coef = true;
      continue;
    }
    const auto var = model.variable_index(tok);
    if (!var) throw ParseError("unknown variable '" + std::string(tok) + "'");
    terms.push_back({sign * coef, *var});
    sign = 1;
    coef = 1;
    have_coef = false;
  }
  if (have_coef) throw ParseError("dangling coefficient at end of expression");
  return terms;
}

// Whitespace-separated pieces of `text`; the views alias `text`.
inline std::vector<std::string_view> Views(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  auto space = [&](std::size_t at) {
    return std::isspace(static_cast<unsigned char>(text[at])) != 0;
  };
  while (pos < text.size()) {
    while (pos < text.size() && space(pos)) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !space(pos)) ++pos;
    if (pos > start) out.push_back(text.substr(start, pos - start));
  }
  return out;
}

inline std::vector<std::string> Tokens(std::string_view text) {
  const auto views = Views(text);
  return {views.begin(), views.end()};
}

}  // namespace detail

inline void write_lp(std::ostream& os, const MilpModel& model) {
  os << "\\ BPPS assignment model\n";
  os << "\\ variant " << ToString(model.variant) << "\n";
  os << "\\ dims n " << model.n << " m " << model.m << " k " << model.k << "\n";
  os << "Minimize\n obj: ";
  detail::WriteTerms(os, model, model.objective);
  os << "\nSubject To\n";
  for (const Row& row : model.rows) {
    os << ' ' << row.name << ": ";
    detail::WriteTerms(os, model, row.terms);
    os << ' ' << detail::SenseText(row.sense) << ' ' << row.rhs << '\n';
  }
  os << "Binaries\n";
  const int count = model.variable_count();
  for (int v = 0; v < count; ++v) {
    os << ' ' << model.variable_name(v);
    if (v % detail::kTermsPerLine == detail::kTermsPerLine - 1 || v == count - 1) {
      os << '\n';
    }
  }
  os << "End\n";
}

inline std::string to_lp_string(const MilpModel& model) {
  std::ostringstream os;
  write_lp(os, model);
  return os.str();
}

inline void emit_lp_file(const MilpModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  write_lp(out, model);
  out.flush();
  if (!out) throw Error("failed writing '" + path + "'");
}

// Reads back the LP text produced by write_lp.
inline MilpModel parse_lp(std::istream& is) {
  MilpModel model;
  bool have_variant = false;
  bool have_dims = false;
  enum class Section { kHeader, kObjective, kRows, kBinaries, kEnd };
  Section section = Section::kHeader;
  std::string statement;
  std::vector<std::string> statements;
  std::vector<std::string> binaries;

  auto flush = [&] {
    if (!statement.empty()) statements.push_back(std::move(statement));
    statement.clear();
  };

  std::string objective_text;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '\\') {
      const auto tok = detail::Tokens(line.substr(1));
      if (tok.size() == 2 && tok[0] == "variant") {
        const auto v = ParseVariant(tok[1]);
        if (!v) throw ParseError("unknown variant '" + tok[1] + "'");
        model.variant = *v;
        have_variant = true;
      } else if (tok.size() == 7 && tok[0] == "dims") {
        model.n = static_cast<int>(detail::ParseInt(tok[2]));
        model.m = static_cast<int>(detail::ParseInt(tok[4]));
        model.k = static_cast<int>(detail::ParseInt(tok[6]));
        have_dims = true;
      }
      continue;
    }
    const auto tokens = detail::Views(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0] == "Minimize") {
      section = Section::kObjective;
      continue;
    }
    if (tokens.size() == 2 && tokens[0] == "Subject" && tokens[1] == "To") {
      flush();
      if (!statements.empty()) objective_text = statements.front();
      statements.clear();
      section = Section::kRows;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "Binaries") {
      flush();
      section = Section::kBinaries;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "End") {
      flush();
      section = Section::kEnd;
      continue;
    }
    switch (section) {
      case Section::kHeader:
      case Section::kEnd:
        throw ParseError("unexpected line '" + line + "'");
      case Section::kObjective:
      case Section::kRows:
        if (line.find(':') != std::string::npos) flush();
        statement += ' ';
        statement += line;
        break;
      case Section::kBinaries:
        binaries.insert(binaries.end(), tokens.begin(), tokens.end());
        break;
    }
  }
  if (section != Section::kEnd) throw ParseError("missing End section");
  if (!have_variant || !have_dims) throw ParseError("missing model header");
  if (model.n < 1 || model.m < 1 || model.k < 1) {
    throw ParseError("model dimensions must be positive");
  }

  auto split_label = [](std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing row label");
    return std::make_pair(detail::Views(text.substr(0, colon)),
                          detail::Views(text.substr(colon + 1)));
  };

  {
    auto [label, body] = split_label(objective_text);
    if (label.size() != 1 || label[0] != "obj") {
      throw ParseError("objective must be labelled 'obj'");
    }
    model.objective = detail::ParseTerms(model, body);
  }
  for (const std::string& text : statements) {
    auto [label, tokens] = split_label(text);
    if (label.size() != 1) throw ParseError("bad row label in '" + text + "'");
    Row row;
    row.name = std::string(label[0]);
    if (tokens.size() < 2) throw ParseError("row '" + row.name + "' too short");
    row.family = detail::FamilyOf(row.name);
    row.rhs = detail::ParseInt(tokens.back());
    const std::string_view sense = tokens[tokens.size() - 2];
    if (sense == "<=") {
      row.sense = Sense::kLessEqual;
    } else if (sense == ">=") {
      row.sense = Sense::kGreaterEqual;
    } else if (sense == "=") {
      row.sense = Sense::kEqual;
    } else {
      throw ParseError("bad sense '" + std::string(sense) + "' in row " + row.name);
    }
    tokens.resize(tokens.size() - 2);
    row.terms = detail::ParseTerms(model, tokens);
    model.rows.push_back(std::move(row));
  }
  if (static_cast<int>(binaries.size()) != model.variable_count()) {
    throw ParseError("Binaries section lists " +
                     std::to_string(binaries.size()) + " variables, expected " +
                     std::to_string(model.variable_count()));
  }
  for (int v = 0; v < model.variable_count(); ++v) {
    if (binaries[static_cast<std::size_t>(v)] != model.variable_name(v)) {
      throw ParseError("unexpected binary '" +
                       binaries[static_cast<std::size_t>(v)] + "'");
    }
  }
  return model;
}

inline MilpModel parse_lp_string(const std::string& text) {
  std::istringstream is(text);
  return parse_lp(is);
}

// ---------------------------------------------------------------------------
// Integer points.

// First row violated by a 0/1 point, in model row order.
inline std::optional<std::size_t> first_violated_row(
    const MilpModel& model, const std::vector<int>& values) {
  for (std::size_t r = 0; r < model.rows.size(); ++r) {
    const Row& row = model.rows[r];
    std::int64_t lhs = 0;
    for (const Term& t : row.terms) {
      lhs += t.coef * values[static_cast<std::size_t>(t.var)];
    }
    const bool ok = row.sense == Sense::kLessEqual   ? lhs <= row.rhs
                    : row.sense == Sense::kGreaterEqual ? lhs >= row.rhs
                                                        : lhs == row.rhs;
    if (!ok) return r;
  }
  return std::nullopt;
}

inline std::int64_t objective_value(const MilpModel& model,
                                    const std::vector<int>& values) {
  std::int64_t total = 0;
  for (const Term& t : model.objective) {
    total += t.coef * values[static_cast<std::size_t>(t.var)];
  }
  return total;
}

// The 0/1 point encoding a solution, with solution bin j placed in model bin j
// and y/z set tight.
inline std::vector<int> assignment_from_solution(const Instance& inst,
                                                 const MilpModel& model,
                                                 const Solution& sol) {
  if (sol.bin_count() > model.k) {
    throw PreconditionError("solution uses " + std::to_string(sol.bin_count()) +
                            " bins, model has " + std::to_string(model.k));
  }
  std::vector<int> values(static_cast<std::size_t>(model.variable_count()), 0);
  for (int b = 0; b < sol.bin_count(); ++b) {
    values[static_cast<std::size_t>(model.z(b))] = 1;
    for (int i : sol.bins[static_cast<std::size_t>(b)]) {
      values[static_cast<std::size_t>(model.x(i, b))] = 1;
      values[static_cast<std::size_t>(model.y(inst.cls(i), b))] = 1;
    }
  }
  return values;
}

class ImportError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kIntegralityTolerance = 1e-6;

// Reads "<variable> <value>" lines; unknown names, blank lines and lines
// starting with '#' are skipped. Missing variables are zero.
inline std::vector<int> parse_assignment(const MilpModel& model,
                                         std::istream& is) {
  std::vector<int> values(static_cast<std::size_t>(model.variable_count()), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto tokens = detail::Tokens(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    const auto var = model.variable_index(tokens[0]);
    if (!var) continue;
    if (tokens.size() < 2) {
      throw ParseError("line " + std::to_string(line_no) + ": missing value");
    }
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(tokens[1], &used);
      if (used != tokens[1].size()) throw std::invalid_argument(tokens[1]);
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(line_no) + ": bad value '" +
                       tokens[1] + "'");
    }
    int rounded;
    if (std::fabs(value) <= kIntegralityTolerance) {
      rounded = 0;
    } else if (std::fabs(value - 1.0) <= kIntegralityTolerance) {
      rounded = 1;
    } else {
      throw ImportError(tokens[0] + " = " + tokens[1] + " is not binary");
    }
    values[static_cast<std::size_t>(*var)] = rounded;
  }
  return values;
}

// Rebuilds a solution from a solver assignment and checks it against every
// row of the model and against the meaning of y and z.
inline Solution import_solution(const Instance& inst, const MilpModel& model,
                                std::istream& assignment) {
  if (model.n != inst.item_count() || model.m != inst.class_count()) {
    throw PreconditionError("model and instance dimensions differ");
  }
  const std::vector<int> values = parse_assignment(model, assignment);
  if (const auto r = first_violated_row(model, values)) {
    throw ImportError("row " + model.rows[*r].name + " violated");
  }
  Solution sol;
  for (int b = 0; b < model.k; ++b) {
    std::vector<int> bin;
    std::vector<int> class_items(static_cast<std::size_t>(model.m), 0);
    for (int i = 0; i < model.n; ++i) {
      if (values[static_cast<std::size_t>(model.x(i, b))] == 1) {
        bin.push_back(i);
        ++class_items[static_cast<std::size_t>(inst.cls(i))];
      }
    }
    for (int c = 0; c < model.m; ++c) {
      if (values[static_cast<std::size_t>(model.y(c, b))] == 1 &&
          class_items[static_cast<std::size_t>(c)] == 0) {
        throw ImportError(model.variable_name(model.y(c, b)) +
                          " = 1 but bin " + std::to_string(b + 1) +
                          " holds no item of class " + std::to_string(c + 1));
      }
    }
    if (bin.empty()) {
      if (values[static_cast<std::size_t>(model.z(b))] == 1) {
        throw ImportError(model.variable_name(model.z(b)) +
                          " = 1 but bin " + std::to_string(b + 1) +
                          " is empty");
      }
      continue;
    }
    sol.bins.push_back(std::move(bin));
  }
  const ValidationReport report = check_feasible(inst, sol);
  if (!report.ok()) {
    throw ImportError("reconstructed solution infeasible: " + report.summary());
  }
  return sol;
}

inline Solution import_solution(const Instance& inst, const MilpModel& model,
                                const std::string& assignment_text) {
  std::istringstream is(assignment_text);
  return import_solution(inst, model, is);
}

}  // namespace bpps::milp

#endif  // BPPS_MILP_HPP_
