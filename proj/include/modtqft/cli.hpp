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

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "modtqft/modtqft.hpp"

namespace modtqft::cli {

enum ExitCode : int { kOk = 0, kInvalid = 1, kUsage = 2, kUnsupported = 3 };

namespace detail {

struct Input {
  std::string path;
  std::string builtin;
};

struct Printer {
  std::ostream& out;
  unsigned base_conductor = 1;
  std::optional<unsigned> float_digits;

  std::string scalar(const CycScalar& x) const {
    std::string s = to_string(x);
    if (x.conductor() > 1 && x.conductor() != base_conductor)
      s += "  [z = zeta_" + std::to_string(x.conductor()) + "]";
    if (float_digits) s += "  ~ " + format_complex(x, *float_digits);
    return s;
  }

  void matrix(const std::string& title, const CycMatrix& m) const {
    out << title;
    if (m.conductor() > 1 && m.conductor() != base_conductor)
      out << "  [z = zeta_" << m.conductor() << "]";
    out << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out << "  [";
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out << ", ";
        out << to_string(m(i, j).embed(m.conductor()));
      }
      out << "]\n";
    }
    if (float_digits) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  ~ [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (j) out << ", ";
          out << format_complex(m(i, j), *float_digits);
        }
        out << "]\n";
      }
    }
  }
};

inline int exit_code_for(Errc c) {
  switch (c) {
    case Errc::anomalous_data_matrix_input:
    case Errc::root_enumeration_unsupported:
    case Errc::too_large_instance:
      return kUnsupported;
    case Errc::invalid_label:
    case Errc::not_coprime:
    case Errc::not_sl2z:
    case Errc::index_out_of_range:
    case Errc::unknown_name:
    case Errc::empty_terms:
      return kUsage;
    default:
      return kInvalid;
  }
}

inline std::string join(const std::vector<Label>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

inline std::string describe_root(const RootOfUnity& r) {
  return "zeta_" + std::to_string(r.order) + "^" + std::to_string(r.exponent);
}

// `--float` takes an optional digit count; supply the default when the next
// token is not a number so it cannot swallow a positional argument.
inline std::vector<std::string> normalize_float_flag(std::vector<std::string> args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] != "--float") continue;
    const bool numeric = i + 1 < args.size() && !args[i + 1].empty() &&
                         args[i + 1].find_first_not_of("0123456789") == std::string::npos;
    if (!numeric) args.insert(args.begin() + static_cast<std::ptrdiff_t>(i) + 1, "6");
  }
  return args;
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  using detail::Printer;
  CLI::App app{"Modular tensor category data: validation, state spaces and 3-manifold invariants",
               "modtqft"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  detail::Input input;
  unsigned float_digits = 6;
  std::vector<std::size_t> roots;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input.path, "Category file, or - for stdin");
    sub->add_option("--builtin", input.builtin, "Built-in category name (see `catalog list`)");
  };
  auto add_float = [&](CLI::App* sub) {
    return sub->add_option("--float", float_digits, "Append decimal approximations")
        ->expected(0, 1)
        ->check(CLI::Range(1u, 50u));
  };
  auto add_roots = [&](CLI::App* sub) {
    sub->add_option("--root", roots, "Square-root index per factor (default 0)")
        ->delimiter(',');
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the category axioms");
  add_input(validate_cmd);

  auto* info_cmd = app.add_subcommand("info", "Print data, Gauss sums and admissible structures");
  add_input(info_cmd);
  auto* info_float = add_float(info_cmd);

  std::size_t genus = 0;
  std::vector<Label> boundary;
  auto* dim_cmd = app.add_subcommand("dim", "State-space dimension of a surface");
  add_input(dim_cmd);
  dim_cmd->add_option("--genus", genus, "Genus")->required();
  dim_cmd->add_option("--boundary", boundary, "Boundary labels")->delimiter(',');

  auto* smatrix_cmd = app.add_subcommand("smatrix", "Print the unnormalized S-matrix");
  add_input(smatrix_cmd);
  auto* smatrix_float = add_float(smatrix_cmd);

  std::string word_text;
  auto* mcg_cmd = app.add_subcommand("mcg", "Matrix of a word in S, T, A");
  add_input(mcg_cmd);
  mcg_cmd->add_option("--word", word_text, "Word such as \"S T^3 A^-1\"")->required();
  add_roots(mcg_cmd);
  auto* mcg_float = add_float(mcg_cmd);

  auto* invariant_cmd = app.add_subcommand("invariant", "Closed 3-manifold invariants");
  invariant_cmd->require_subcommand(1);
  long long lens_p = 0, lens_q = 0;
  auto* lens_cmd = invariant_cmd->add_subcommand("lens", "Lens space L(P,Q)");
  lens_cmd->add_option("P", lens_p, "P")->required();
  lens_cmd->add_option("Q", lens_q, "Q")->required();
  add_input(lens_cmd);
  add_roots(lens_cmd);
  auto* lens_float = add_float(lens_cmd);

  std::vector<long long> matrix_entries;
  std::string bundle_word;
  bool allow_framing = false;
  auto* bundle_cmd = invariant_cmd->add_subcommand("torus-bundle", "Mapping torus of an SL(2,Z) element");
  add_input(bundle_cmd);
  auto* matrix_opt = bundle_cmd->add_option("--matrix", matrix_entries, "a,b,c,d")
                         ->delimiter(',')
                         ->expected(4);
  auto* bword_opt = bundle_cmd->add_option("--word", bundle_word, "Word in S, T, A");
  matrix_opt->excludes(bword_opt);
  bundle_cmd->add_flag("--allow-framing", allow_framing, "Accept matrix input for anomalous data");
  add_roots(bundle_cmd);
  auto* bundle_float = add_float(bundle_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "Built-in categories");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "List built-in names");
  std::string export_name;
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Print a built-in in file format");
  export_cmd->add_option("NAME", export_name, "Built-in name")->required();

  args = detail::normalize_float_flag(std::move(args));
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Printer print{out, 1, std::nullopt};

  try {
    if (*catalog_cmd) {
      if (*list_cmd) {
        for (const auto& name : catalog_names()) out << name << '\n';
      } else if (*export_cmd) {
        out << serialize(builtin(export_name));
      }
      (void)export_cmd;
      return kOk;
    }

    if (input.path.empty() == input.builtin.empty()) {
      err << "error: give exactly one of FILE or --builtin NAME\n";
      return kUsage;
    }
    RawCategoryFile raw;
    if (!input.builtin.empty()) {
      raw = builtin(input.builtin);
    } else {
      std::string text;
      if (input.path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      } else {
        std::ifstream file(input.path, std::ios::binary);
        if (!file) {
          err << "error: cannot read " << input.path << '\n';
          return kUsage;
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
      }
      raw = parse(text);
    }
    const Category C = to_category(raw);
    print.base_conductor = C.conductor();

    auto root_choice = [&]() -> std::vector<std::size_t> {
      if (roots.size() == 1 && C.factors().size() > 1)
        return std::vector<std::size_t>(C.factors().size(), roots[0]);
      return roots;
    };
    auto want_float = [&](CLI::Option* opt) {
      if (opt->count() > 0) print.float_digits = float_digits;
    };

    if (*validate_cmd) {
      const auto check = verify_modular(C);
      out << "OK " << raw.name << ": rank " << C.rank() << ", " << C.factors().size()
          << (C.factors().size() == 1 ? " factor, " : " factors, ")
          << (check.modular ? "modular" : "pre-modular (" + check.reason + ")") << '\n';
      return kOk;
    }

    if (*info_cmd) {
      want_float(info_float);
      out << "name: " << raw.name << '\n';
      out << "conductor: " << C.conductor() << '\n';
      out << "rank: " << C.rank() << '\n';
      out << "labels:\n";
      for (Label i = 0; i < C.rank(); ++i)
        out << "  " << i << ": dual " << C.fusion().dual(i) << ", d = " << print.scalar(C.qdim(i))
            << ", theta = " << print.scalar(C.twist(i)) << '\n';
      out << "factors: " << C.factors().size() << '\n';
      for (std::size_t fi = 0; fi < C.factors().size(); ++fi) {
        const Factor& f = C.factors()[fi];
        const GaussSums& g = C.sums(fi);
        out << "factor " << fi << ": unit " << f.unit << ", members " << detail::join(f.members) << '\n';
        out << "  p+ = " << print.scalar(g.p_plus) << '\n';
        out << "  p- = " << print.scalar(g.p_minus) << '\n';
        out << "  anomaly = " << print.scalar(g.anomaly);
        if (auto r = root_of_unity_order(g.anomaly))
          out << "  (root of unity " << detail::describe_root(*r) << ")";
        else
          out << "  (not a root of unity)";
        out << '\n';
        out << "  global dimension = " << print.scalar(g.global_dim) << '\n';
      }
      const auto check = verify_modular(C);
      if (!check.modular) {
        out << "modular: no (" << check.reason << ")\n";
        return kOk;
      }
      out << "modular: yes\n";
      print.matrix("s_tilde:", s_tilde_of(C));
      StructureReport rep;
      try {
        rep = admissibility(C);
      } catch (const RootEnumerationUnsupported& e) {
        out << "structures: root enumeration unsupported (" << e.tag() << ")\n";
        return kUnsupported;
      }
      out << "structures:\n";
      out << "  oriented: " << (rep.oriented ? "yes" : "no") << '\n';
      if (rep.oriented)
        for (std::size_t fi = 0; fi < rep.factors.size(); ++fi)
          out << "    factor " << fi << ": p = " << print.scalar(rep.factors[fi].sums.p_plus) << '\n';
      out << "  csig: yes\n";
      for (std::size_t fi = 0; fi < rep.factors.size(); ++fi)
        for (std::size_t r = 0; r < rep.factors[fi].square_roots.size(); ++r) {
          const auto& c = rep.factors[fi].square_roots[r];
          out << "    factor " << fi << " root " << r << ": a = " << print.scalar(c.root)
              << ", p = " << print.scalar(c.p) << '\n';
        }
      out << "  signature: " << (rep.signature ? "yes" : "no (factor anomalies differ)") << '\n';
      for (std::size_t r = 0; r < rep.signature_roots.size(); ++r) {
        const auto& c = rep.signature_roots[r];
        out << "    root " << r << ": a = " << print.scalar(c.root) << '\n';
        for (std::size_t fi = 0; fi < c.p.size(); ++fi)
          out << "      factor " << fi << ": p = " << print.scalar(c.p[fi]) << '\n';
      }
      out << "  p1: yes\n";
      for (std::size_t fi = 0; fi < rep.factors.size(); ++fi)
        for (std::size_t r = 0; r < rep.factors[fi].sixth_roots.size(); ++r) {
          const auto& c = rep.factors[fi].sixth_roots[r];
          out << "    factor " << fi << " root " << r << ": a = " << print.scalar(c.root)
              << ", p = " << print.scalar(c.p) << '\n';
        }
      return kOk;
    }

    if (*dim_cmd) {
      const SurfaceSpec spec{genus, boundary};
      out << "dim(genus " << genus << ", boundary [" << detail::join(boundary)
          << "]) = " << surface_dim(C, spec).get_str() << '\n';
      return kOk;
    }

    if (*smatrix_cmd) {
      want_float(smatrix_float);
      print.matrix("s_tilde:", s_tilde_of(C));
      return kOk;
    }

    auto print_invariant = [&](const ClosedInvariant& v) {
      for (std::size_t fi = 0; fi < v.per_factor.size(); ++fi)
        out << "factor " << fi << " (unit " << C.factors()[fi].unit
            << "): " << print.scalar(v.per_factor[fi]) << '\n';
      out << "aggregate: " << print.scalar(v.aggregate) << '\n';
    };

    if (*mcg_cmd) {
      want_float(mcg_float);
      MCGWord w;
      try {
        w = parse_word(word_text);
      } catch (const Error& e) {
        err << "error: --word: " << e.what() << '\n';
        return kUsage;
      }
      const TorusRep rep = torus_rep(C, root_choice());
      for (std::size_t fi = 0; fi < rep.p.size(); ++fi)
        out << "factor " << fi << ": p = " << print.scalar(rep.p[fi]) << '\n';
      print.matrix("word " + to_string(w) + ":", evaluate_word(rep, w));
      return kOk;
    }

    if (*lens_cmd) {
      want_float(lens_float);
      const NegContFrac cf = neg_continued_fraction(lens_p, lens_q);
      out << "L(" << lens_p << "," << lens_q << "): continued fraction [";
      for (std::size_t i = 0; i < cf.terms.size(); ++i) out << (i ? "," : "") << cf.terms[i];
      out << "]\n";
      print_invariant(lens_invariant(C, root_choice(), lens_p, lens_q));
      return kOk;
    }

    if (*bundle_cmd) {
      want_float(bundle_float);
      ClosedInvariant v;
      if (matrix_opt->count() > 0) {
        const SL2Z m = make_sl2z(matrix_entries[0], matrix_entries[1], matrix_entries[2],
                                 matrix_entries[3]);
        v = torus_bundle_invariant(C, root_choice(), m, allow_framing);
        {
          const std::string text = to_string(decompose_sl2z(m));
          out << "word: " << (text.empty() ? "1" : text) << '\n';
        }
      } else if (bword_opt->count() > 0) {
        MCGWord w;
        try {
          w = parse_word(bundle_word);
        } catch (const Error& e) {
          err << "error: --word: " << e.what() << '\n';
          return kUsage;
        }
        v = torus_bundle_invariant(C, root_choice(), w);
        out << "word: " << to_string(w) << '\n';
      } else {
        err << "error: give --matrix a,b,c,d or --word WORD\n";
        return kUsage;
      }
      if (v.framing_dependent)
        err << "warning: anomaly is not 1; the value depends on the framing of the word\n";
      print_invariant(v);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::exit_code_for(e.code());
  }
  return kOk;
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cin, std::cout, std::cerr);
}

}  // namespace modtqft::cli
