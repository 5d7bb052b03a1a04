// Copyright 2026 The modtqft Authors
//
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "modtqft/cyclo.hpp"
#include "modtqft/error.hpp"
#include "modtqft/mtc.hpp"

// Line-oriented text format for category data:
//
//   mtc <name>
//   conductor <N>
//   rank <k>
//   unit <i>[,<i>...]          (defaults to 0)
//   dual <i>-><j>              (one per label)
//   fusion <i> <j> <k> <mult>  (every nonzero multiplicity)
//   twist <i> <scalar>
//   dim <i> <scalar>
//   smatrix <i> <j> <scalar>   (optional; omitted entries are 0)
//
// `#` starts a comment. Scalars use the cyclo grammar in Q(zeta_N).

namespace modtqft {

struct FusionEntry {
  Label i = 0, j = 0, k = 0;
  long mult = 0;
  friend auto operator<=>(const FusionEntry&, const FusionEntry&) = default;
};

struct SmatrixEntry {
  Label i = 0, j = 0;
  CycScalar value;
};

struct RawCategoryFile {
  std::string name;
  unsigned conductor = 1;
  std::size_t rank = 0;
  std::vector<Label> units{0};
  std::vector<Label> dual;
  std::vector<FusionEntry> fusion;  // sorted, nonzero
  std::vector<CycScalar> twist;
  std::vector<CycScalar> dim;
  std::vector<SmatrixEntry> smatrix;  // sorted by (i, j), nonzero
};

namespace detail {

constexpr std::size_t kMaxRank = 64;
constexpr unsigned kMaxConductor = 100000;

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string_view body;  // comment stripped
  std::vector<Token> tokens;
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view body = text.substr(start, end - start);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    if (!body.empty() && body.back() == '\r') body.remove_suffix(1);
    Line line{number, body, {}};
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t' || body[pos] == '\r')) ++pos;
      if (pos == body.size()) break;
      const std::size_t s = pos;
      while (pos < body.size() && body[pos] != ' ' && body[pos] != '\t' && body[pos] != '\r') ++pos;
      line.tokens.push_back({body.substr(s, pos - s), s + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return out;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) : lines_(split_lines(text)) {
    last_line_ = 1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  RawCategoryFile run() {
    RawCategoryFile f;
    std::vector<const Line*> body;
    std::optional<std::vector<Label>> units;
    const Line* units_line = nullptr;
    for (const Line& line : lines_) {
      const std::string_view d = line.tokens[0].text;
      if (d == "mtc") {
        once(seen_name_, line, "mtc");
        expect_args(line, 1);
        f.name = std::string(line.tokens[1].text);
      } else if (d == "conductor") {
        once(seen_conductor_, line, "conductor");
        expect_args(line, 1);
        f.conductor = static_cast<unsigned>(number(line, line.tokens[1], 1, kMaxConductor));
      } else if (d == "rank") {
        once(seen_rank_, line, "rank");
        expect_args(line, 1);
        f.rank = number(line, line.tokens[1], 1, kMaxRank);
      } else if (d == "unit") {
        if (units_line) throw duplicate(line, line.tokens[0], "unit", {});
        units_line = &line;
      } else if (d == "dual" || d == "fusion" || d == "twist" || d == "dim" || d == "smatrix") {
        body.push_back(&line);
      } else {
        throw syntax(line, line.tokens[0], "directive");
      }
    }
    if (!seen_name_) throw missing("mtc", {});
    if (!seen_conductor_) throw missing("conductor", {});
    if (!seen_rank_) throw missing("rank", {});
    rank_ = f.rank;

    if (units_line) f.units = parse_units(*units_line);
    f.dual.assign(f.rank, 0);
    f.twist.assign(f.rank, CycScalar());
    f.dim.assign(f.rank, CycScalar());
    std::vector<bool> has_dual(f.rank), has_twist(f.rank), has_dim(f.rank);
    std::set<std::tuple<Label, Label, Label>> fusion_seen;
    std::set<std::pair<Label, Label>> smatrix_seen;

    for (const Line* lp : body) {
      const Line& line = *lp;
      const std::string_view d = line.tokens[0].text;
      if (d == "dual") {
        auto [i, j] = parse_dual(line);
        if (has_dual[i]) throw duplicate(line, line.tokens[0], "dual", {i});
        has_dual[i] = true;
        f.dual[i] = j;
      } else if (d == "fusion") {
        expect_args(line, 4);
        const Label i = label(line, line.tokens[1]);
        const Label j = label(line, line.tokens[2]);
        const Label k = label(line, line.tokens[3]);
        const long m = static_cast<long>(number(line, line.tokens[4], 0, 1000000));
        if (!fusion_seen.insert({i, j, k}).second)
          throw duplicate(line, line.tokens[0], "fusion", {i, j, k});
        if (m != 0) f.fusion.push_back({i, j, k, m});
      } else if (d == "twist" || d == "dim") {
        if (line.tokens.size() < 3) throw syntax_end(line, "scalar");
        const Label i = label(line, line.tokens[1]);
        auto& seen = d == "twist" ? has_twist : has_dim;
        if (seen[i]) throw duplicate(line, line.tokens[0], std::string(d), {i});
        seen[i] = true;
        (d == "twist" ? f.twist : f.dim)[i] = scalar(line, line.tokens[2].column, f.conductor);
      } else {  // smatrix
        if (line.tokens.size() < 4) throw syntax_end(line, "scalar");
        const Label i = label(line, line.tokens[1]);
        const Label j = label(line, line.tokens[2]);
        if (!smatrix_seen.insert({i, j}).second)
          throw duplicate(line, line.tokens[0], "smatrix", {i, j});
        CycScalar v = scalar(line, line.tokens[3].column, f.conductor);
        if (!v.is_zero()) f.smatrix.push_back({i, j, std::move(v)});
      }
    }
    for (Label i = 0; i < f.rank; ++i) {
      if (!has_dual[i]) throw missing("dual", {i});
      if (!has_twist[i]) throw missing("twist", {i});
      if (!has_dim[i]) throw missing("dim", {i});
    }
    std::sort(f.fusion.begin(), f.fusion.end());
    std::sort(f.smatrix.begin(), f.smatrix.end(), [](const auto& a, const auto& b) {
      return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return f;
  }

 private:
  static std::vector<long long> ll(std::initializer_list<Label> xs) {
    std::vector<long long> out;
    for (Label x : xs) out.push_back(static_cast<long long>(x));
    return out;
  }

  Error syntax(const Line& line, const Token& tok, const std::string& expected) const {
    return syntax_at(line, tok.column, expected);
  }
  Error syntax_at(const Line& line, std::size_t column, const std::string& expected) const {
    return Error(Errc::syntax_error, "expected " + expected,
                 {static_cast<long long>(line.number), static_cast<long long>(column)}, {},
                 SourcePosition{line.number, column});
  }
  Error syntax_end(const Line& line, const std::string& expected) const {
    return syntax_at(line, line.body.size() + 1, expected);
  }
  Error duplicate(const Line& line, const Token& tok, const std::string& what,
                  std::initializer_list<Label> idx) const {
    return Error(Errc::duplicate_entry, "repeated assignment", ll(idx), what,
                 SourcePosition{line.number, tok.column});
  }
  Error missing(const std::string& what, std::initializer_list<Label> idx) const {
    return Error(Errc::missing_assignment, "no assignment in file", ll(idx), what,
                 SourcePosition{last_line_, 1});
  }

  void once(bool& seen, const Line& line, const std::string& what) {
    if (seen) throw duplicate(line, line.tokens[0], what, {});
    seen = true;
  }
  void expect_args(const Line& line, std::size_t n) const {
    if (line.tokens.size() < n + 1) throw syntax_end(line, "argument");
    if (line.tokens.size() > n + 1) throw syntax(line, line.tokens[n + 1], "end of line");
  }

  std::size_t number(const Line& line, const Token& tok, std::size_t lo, std::size_t hi) const {
    const auto& t = tok.text;
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string_view::npos)
      throw syntax(line, tok, "non-negative integer");
    const std::size_t v = std::stoul(std::string(t));
    if (v < lo || v > hi)
      throw syntax(line, tok, "integer in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }
  Label label(const Line& line, const Token& tok) const {
    const auto& t = tok.text;
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string_view::npos)
      throw syntax(line, tok, "label");
    const std::size_t v = std::stoul(std::string(t));
    if (v >= rank_) throw syntax(line, tok, "label below rank " + std::to_string(rank_));
    return v;
  }

  // Scalar text runs from `column` to end of line.
  CycScalar scalar(const Line& line, std::size_t column, unsigned conductor) const {
    std::string_view text = line.body.substr(column - 1);
    try {
      return parse_scalar(text, conductor);
    } catch (const Error& e) {
      const std::size_t offset = e.witness().empty() ? 1 : static_cast<std::size_t>(e.witness()[0]);
      throw syntax_at(line, column + offset - 1, e.detail().substr(e.detail().find(' ') + 1));
    }
  }

  std::vector<Label> parse_units(const Line& line) const {
    if (line.tokens.size() < 2) throw syntax_end(line, "label list");
    std::vector<Label> out;
    std::string_view rest = line.body.substr(line.tokens[1].column - 1);
    std::size_t pos = 0;
    while (true) {
      while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
      const std::size_t s = pos;
      while (pos < rest.size() && rest[pos] >= '0' && rest[pos] <= '9') ++pos;
      Token tok{rest.substr(s, pos - s), line.tokens[1].column + s};
      if (tok.text.empty()) throw syntax_at(line, tok.column, "label");
      const Label v = label(line, tok);
      if (std::find(out.begin(), out.end(), v) != out.end())
        throw duplicate(line, tok, "unit", {v});
      out.push_back(v);
      while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
      if (pos == rest.size()) break;
      if (rest[pos] != ',') throw syntax_at(line, line.tokens[1].column + pos, "',' or end of line");
      ++pos;
    }
    return out;
  }

  std::pair<Label, Label> parse_dual(const Line& line) const {
    if (line.tokens.size() < 2) throw syntax_end(line, "<i>-><j>");
    std::string_view rest = line.body.substr(line.tokens[1].column - 1);
    const std::size_t base = line.tokens[1].column;
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < rest.size() && (rest[pos] == ' ' || rest[pos] == '\t')) ++pos;
    };
    auto read_label = [&] {
      skip();
      const std::size_t s = pos;
      while (pos < rest.size() && rest[pos] >= '0' && rest[pos] <= '9') ++pos;
      Token tok{rest.substr(s, pos - s), base + s};
      if (tok.text.empty()) throw syntax_at(line, tok.column, "label");
      return label(line, tok);
    };
    const Label i = read_label();
    skip();
    if (rest.substr(pos, 2) != "->") throw syntax_at(line, base + pos, "'->'");
    pos += 2;
    const Label j = read_label();
    skip();
    if (pos != rest.size()) throw syntax_at(line, base + pos, "end of line");
    return {i, j};
  }

  std::vector<Line> lines_;
  std::size_t last_line_ = 1;
  std::size_t rank_ = 0;
  bool seen_name_ = false, seen_conductor_ = false, seen_rank_ = false;
};

}  // namespace detail

inline RawCategoryFile parse(std::string_view text) { return detail::FileParser(text).run(); }

/// Canonical text form: header, then dual, fusion, twist, dim and smatrix
/// lines in label order, scalars written in the file conductor.
inline std::string serialize(const RawCategoryFile& f) {
  std::ostringstream out;
  out << "mtc " << f.name << '\n';
  out << "conductor " << f.conductor << '\n';
  out << "rank " << f.rank << '\n';
  out << "unit ";
  for (std::size_t a = 0; a < f.units.size(); ++a) out << (a ? "," : "") << f.units[a];
  out << '\n';
  for (Label i = 0; i < f.rank; ++i) out << "dual " << i << "->" << f.dual.at(i) << '\n';
  for (const auto& e : f.fusion)
    if (e.mult != 0) out << "fusion " << e.i << ' ' << e.j << ' ' << e.k << ' ' << e.mult << '\n';
  for (Label i = 0; i < f.rank; ++i)
    out << "twist " << i << ' ' << to_string(f.twist.at(i).embed(f.conductor)) << '\n';
  for (Label i = 0; i < f.rank; ++i)
    out << "dim " << i << ' ' << to_string(f.dim.at(i).embed(f.conductor)) << '\n';
  for (const auto& e : f.smatrix)
    if (!e.value.is_zero())
      out << "smatrix " << e.i << ' ' << e.j << ' ' << to_string(e.value.embed(f.conductor)) << '\n';
  return out.str();
}

inline FusionData fusion_data(const RawCategoryFile& f) {
  FusionData F(f.rank, f.units, f.dual);
  for (const auto& e : f.fusion) F.set(e.i, e.j, e.k, e.mult);
  return F;
}

inline ModularDatum modular_datum(const RawCategoryFile& f) {
  ModularDatum D{f.twist, f.dim, std::nullopt};
  if (!f.smatrix.empty()) {
    CycMatrix S(f.rank, f.rank);
    for (const auto& e : f.smatrix) S(e.i, e.j) = e.value;
    S.unify();
    D.s_tilde = std::move(S);
  }
  return D;
}

/// Builds and validates the category the file describes.
inline Category to_category(const RawCategoryFile& f) {
  return validate(fusion_data(f), modular_datum(f));
}

}  // namespace modtqft
