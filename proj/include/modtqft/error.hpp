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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modtqft {

enum class Errc {
  invalid_conductor,
  division_by_zero,
  incompatible_conductor,
  dimension_mismatch,
  singular_matrix,
  invalid_label,
  shape_failure,
  unit_law_failure,
  factor_partition_failure,
  duality_failure,
  rigidity_failure,
  associativity_failure,
  twist_failure,
  dimension_failure,
  smatrix_failure,
  degenerate_category,
  convention_inconsistency,
  not_modular,
  root_enumeration_unsupported,
  index_out_of_range,
  verlinde_mismatch,
  too_large_instance,
  not_coprime,
  empty_terms,
  not_sl2z,
  anomalous_data_matrix_input,
  syntax_error,
  duplicate_entry,
  missing_assignment,
  unknown_name,
};

inline std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_conductor: return "invalid-conductor";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::incompatible_conductor: return "incompatible-conductor";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::invalid_label: return "invalid-label";
    case Errc::shape_failure: return "shape-failure";
    case Errc::unit_law_failure: return "unit-law-failure";
    case Errc::factor_partition_failure: return "factor-partition-failure";
    case Errc::duality_failure: return "duality-failure";
    case Errc::rigidity_failure: return "rigidity-failure";
    case Errc::associativity_failure: return "associativity-failure";
    case Errc::twist_failure: return "twist-failure";
    case Errc::dimension_failure: return "dimension-failure";
    case Errc::smatrix_failure: return "smatrix-failure";
    case Errc::degenerate_category: return "degenerate-category";
    case Errc::convention_inconsistency: return "convention-inconsistency";
    case Errc::not_modular: return "not-modular";
    case Errc::root_enumeration_unsupported: return "root-enumeration-unsupported";
    case Errc::index_out_of_range: return "index-out-of-range";
    case Errc::verlinde_mismatch: return "verlinde-mismatch";
    case Errc::too_large_instance: return "too-large-instance";
    case Errc::not_coprime: return "not-coprime";
    case Errc::empty_terms: return "empty-terms";
    case Errc::not_sl2z: return "not-sl2z";
    case Errc::anomalous_data_matrix_input: return "anomalous-data-matrix-input";
    case Errc::syntax_error: return "syntax-error";
    case Errc::duplicate_entry: return "duplicate-entry";
    case Errc::missing_assignment: return "missing-assignment";
    case Errc::unknown_name: return "unknown-name";
  }
  return "unknown-error";
}

struct SourcePosition {
  std::size_t line = 0;
  std::size_t column = 0;
};

// Every failure in the library is reported through this type. `witness`
// holds the indices that exhibit the failure (labels, matrix positions);
// `subject` names the offending field when there is one. tag() renders
// them as `code(subject,i,j,...)`.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, std::vector<long long> witness = {},
        std::string subject = {}, std::optional<SourcePosition> position = std::nullopt)
      : std::runtime_error(render(code, witness, subject, position, detail)),
        code_(code),
        witness_(std::move(witness)),
        subject_(std::move(subject)),
        position_(position),
        detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<long long>& witness() const noexcept { return witness_; }
  const std::string& subject() const noexcept { return subject_; }
  const std::optional<SourcePosition>& position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

  std::string tag() const { return render_tag(code_, witness_, subject_); }

 private:
  static std::string render_tag(Errc code, const std::vector<long long>& w,
                                const std::string& subject) {
    std::string out(errc_name(code));
    if (w.empty() && subject.empty()) return out;
    out += '(';
    out += subject;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i || !subject.empty()) out += ',';
      out += std::to_string(w[i]);
    }
    out += ')';
    return out;
  }
  static std::string render(Errc code, const std::vector<long long>& w,
                            const std::string& subject,
                            const std::optional<SourcePosition>& pos,
                            const std::string& detail) {
    std::string out = render_tag(code, w, subject);
    if (pos)
      out += " at line " + std::to_string(pos->line) + ", column " + std::to_string(pos->column);
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  Errc code_;
  std::vector<long long> witness_;
  std::string subject_;
  std::optional<SourcePosition> position_;
  std::string detail_;
};

}  // namespace modtqft
