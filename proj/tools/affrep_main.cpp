// Command-line front end: build fields, print character tables and
// representation matrices, decompose the operator space, and run the
// verification suite. Exit codes: 0 all pass, 1 check failure (including a
// found counterexample), 2 usage or configuration error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "affrep/verifier.hpp"

namespace {

using nlohmann::ordered_json;
using namespace affrep;

ordered_json complex_pair(std::complex<double> z) {
  return ordered_json::array({z.real(), z.imag()});
}

std::string poly_string(const std::vector<int>& coeffs) {
  std::string out;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    int c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

void emit(const std::string& output_path, const std::string& text) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (output_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw ConfigError("cannot open output file: " + output_path);
    f << body;
  }
}

int run_field_info(int p, int n, const std::string& format, const std::string& output) {
  FieldContext k = build_field(p, n);
  if (format == "json") {
    ordered_json j;
    j["p"] = k.p();
    j["n"] = k.n();
    j["q"] = k.q();
    j["modulus"] = k.modulus();
    j["generator"] = k.generator().coeffs;
    j["generator_value"] = k.value(k.generator());
    ordered_json elems = ordered_json::array();
    for (int i = 0; i < k.q(); ++i) {
      const FieldElement& x = k.elements()[i];
      ordered_json e;
      e["index"] = i;
      e["value"] = k.value(x);
      e["coeffs"] = x.coeffs;
      e["log"] = k.is_zero(x) ? ordered_json(nullptr) : ordered_json(k.log(x));
      elems.push_back(e);
    }
    j["elements"] = elems;
    emit(output, j.dump(2));
  } else if (format == "pretty") {
    std::string text = "GF(" + std::to_string(k.q()) + ") = GF(" + std::to_string(k.p()) + "^" +
                       std::to_string(k.n()) + ")\n";
    text += "modulus   " + poly_string(k.modulus()) + "\n";
    text += "generator " + poly_string(k.generator().coeffs) + " (value " +
            std::to_string(k.value(k.generator())) + ")\n";
    text += "index value log\n";
    for (int i = 0; i < k.q(); ++i) {
      const FieldElement& x = k.elements()[i];
      text += std::to_string(i) + " " + std::to_string(k.value(x)) + " " +
              (k.is_zero(x) ? std::string("-") : std::to_string(k.log(x))) + "\n";
    }
    emit(output, text);
  } else {
    throw ConfigError("field-info supports --format json|pretty");
  }
  return 0;
}

int run_char_table(int p, int n, const std::string& format, const std::string& output) {
  FieldContext k = build_field(p, n);
  PiRep rep(k);
  CharacterTable table = character_table(rep);
  const AffineGroup& group = rep.group();
  if (format == "csv") {
    emit(output, character_table_csv(group, table));
  } else if (format == "json") {
    ordered_json j;
    j["q"] = k.q();
    ordered_json classes = ordered_json::array();
    for (std::size_t c = 0; c < table.class_reps.size(); ++c) {
      ordered_json e;
      e["rep"] = {{"a", k.value(table.class_reps[c].a)}, {"b", k.value(table.class_reps[c].b)}};
      e["size"] = table.class_sizes[c];
      classes.push_back(e);
    }
    j["classes"] = classes;
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < table.values.rows(); ++r) {
      ordered_json row;
      row["label"] = table.row_labels[r];
      ordered_json vals = ordered_json::array();
      for (int c = 0; c < table.values.cols(); ++c) vals.push_back(complex_pair(table.values(r, c)));
      row["values"] = vals;
      rows.push_back(row);
    }
    j["rows"] = rows;
    j["row_orthonormality_residual"] = table.row_orthonormality_residual();
    emit(output, j.dump(2));
  } else if (format == "pretty") {
    std::string text;
    for (std::size_t c = 0; c < table.class_reps.size(); ++c) {
      text += "class " + std::to_string(c) + ": rep (a=" +
              std::to_string(k.value(table.class_reps[c].a)) + ", b=" +
              std::to_string(k.value(table.class_reps[c].b)) + "), size " +
              std::to_string(table.class_sizes[c]) + "\n";
    }
    for (int r = 0; r < table.values.rows(); ++r) {
      text += table.row_labels[r] + ":";
      for (int c = 0; c < table.values.cols(); ++c) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), " %.6g%+.6gi", table.values(r, c).real(),
                      table.values(r, c).imag());
        text += buf;
      }
      text += "\n";
    }
    emit(output, text);
  } else {
    throw ConfigError("char-table supports --format json|csv|pretty");
  }
  return 0;
}

int run_rep_matrix(int p, int n, int a_value, int b_value, int chi_value,
                   const std::string& output) {
  FieldContext k = build_field(p, n);
  if (chi_value <= 0 || chi_value >= k.q()) {
    throw ConfigError("--chi must encode a nonzero field element (1 <= chi < q)");
  }
  if (a_value <= 0 || a_value >= k.q()) throw ZeroScaleError();
  if (b_value < 0 || b_value >= k.q()) throw ConfigError("-b must lie in [0, q)");
  PiRep rep(k, k.from_value(chi_value));
  Operator m = rep.pi_matrix({k.from_value(a_value), k.from_value(b_value)});
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(row);
  }
  emit(output, rows.dump(2));
  return 0;
}

int run_decompose(int p, int n, const std::string& format, const std::string& output) {
  FieldContext k = build_field(p, n);
  PiRep rep(k);
  OperatorAlgebra alg(rep);
  long long total = 0;
  std::vector<std::pair<int, int>> dims;  // (value of b, dim E_b)
  for (int i = 0; i < k.q(); ++i) {
    const FieldElement& b = k.elements()[i];
    int dim = alg.component_space(b).dim();
    dims.emplace_back(k.value(b), dim);
    total += dim;
  }
  const long long expected = static_cast<long long>(k.q() - 1) * (k.q() - 1);
  if (total != expected) {
    throw Error("graded dimensions sum to " + std::to_string(total) + ", expected " +
                std::to_string(expected));
  }
  if (format == "json") {
    ordered_json j;
    j["q"] = k.q();
    ordered_json comps = ordered_json::array();
    for (auto [value, dim] : dims) comps.push_back({{"b", value}, {"dim", dim}});
    j["components"] = comps;
    j["total"] = total;
    emit(output, j.dump(2));
  } else if (format == "csv") {
    std::string text = "b,dim\n";
    for (auto [value, dim] : dims) {
      text += std::to_string(value) + "," + std::to_string(dim) + "\n";
    }
    text += "total," + std::to_string(total) + "\n";
    emit(output, text);
  } else if (format == "pretty") {
    std::string text;
    for (auto [value, dim] : dims) {
      text += "b=" + std::to_string(value) + " dim=" + std::to_string(dim) + "\n";
    }
    text += "total " + std::to_string(total) + " = (q-1)^2\n";
    emit(output, text);
  } else {
    throw ConfigError("decompose supports --format json|csv|pretty");
  }
  return 0;
}

std::string pretty_report(const VerificationReport& r) {
  std::string text = "GF(" + std::to_string(r.q) + ") = GF(" + std::to_string(r.p) + "^" +
                     std::to_string(r.n) + ")  chi=" + std::to_string(r.chi_parameter) +
                     "  seed=" + std::to_string(r.rng_seed) +
                     "  trials=" + std::to_string(r.trials) + "\n";
  for (const CheckRecord& c : r.checks) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %s %-32s residual=%-12.3e dim=%-6s %8.1f ms\n",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                  c.dim ? std::to_string(*c.dim).c_str() : "-", c.millis);
    text += buf;
  }
  long long passed = 0;
  for (const CheckRecord& c : r.checks) passed += c.pass ? 1 : 0;
  text += "  summary: " + std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
          " passed\n";
  return text;
}

std::vector<std::pair<int, int>> prime_powers_up_to(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int q = 2; q <= bound; ++q) {
    int p = 0;
    for (int d = 2; d <= q; ++d) {
      if (q % d == 0) {
        p = d;
        break;
      }
    }
    int m = 0;
    int rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest == 1) out.emplace_back(p, m);
  }
  return out;
}

int run_verify(int p, int n, int all_q, long long trials, std::uint64_t seed, int chi_value,
               const std::string& format, const std::string& output) {
  if (trials < 1) throw ConfigError("--trials must be at least 1");
  if (format != "json" && format != "pretty") {
    throw ConfigError("verify supports --format json|pretty");
  }
  if (all_q > 0) {
    if (all_q > FieldContext::kDefaultMaxQ) {
      throw UnsupportedSizeError(all_q, FieldContext::kDefaultMaxQ);
    }
    std::vector<VerificationReport> reports;
    bool all_pass = true;
    for (auto [pp, nn] : prime_powers_up_to(all_q)) {
      reports.push_back(full_report(pp, nn, trials, seed, chi_value));
      all_pass = all_pass && reports.back().all_pass();
    }
    if (format == "json") {
      ordered_json j;
      j["sweep"] = {{"max_q", all_q}, {"trials", trials}, {"seed", seed}, {"chi", chi_value}};
      ordered_json arr = ordered_json::array();
      for (const VerificationReport& r : reports) arr.push_back(report_to_json(r));
      j["reports"] = arr;
      j["all_pass"] = all_pass;
      emit(output, j.dump(2));
    } else {
      std::string text;
      for (const VerificationReport& r : reports) text += pretty_report(r);
      text += all_pass ? "ALL PASS\n" : "FAILURES PRESENT\n";
      emit(output, text);
    }
    return all_pass ? 0 : 1;
  }
  VerificationReport report = full_report(p, n, trials, seed, chi_value);
  if (format == "json") {
    emit(output, report_to_json_string(report));
  } else {
    emit(output, pretty_report(report));
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine-group representation builder and verifier"};
  app.require_subcommand(1);

  int p = 0;
  int n = 1;
  int a_value = 0;
  int b_value = 0;
  int chi_value = 1;
  int all_q = 0;
  long long trials = 1000;
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;

  auto add_field_opts = [&](CLI::App* cmd, bool p_required) {
    auto* popt = cmd->add_option("--p", p, "field characteristic (prime)");
    if (p_required) popt->required();
    cmd->add_option("--n", n, "extension degree (default 1)");
    cmd->add_option("--format", format, "output format");
    cmd->add_option("--output", output, "write to file instead of stdout");
  };

  CLI::App* field_info = app.add_subcommand("field-info", "print the field realization");
  add_field_opts(field_info, true);

  CLI::App* char_table = app.add_subcommand("char-table", "print the character table");
  add_field_opts(char_table, true);

  CLI::App* rep_matrix =
      app.add_subcommand("rep-matrix", "print the representation matrix of (a, b)");
  add_field_opts(rep_matrix, true);
  rep_matrix->add_option("-a,--a", a_value, "scaling part, canonical value (nonzero)")->required();
  rep_matrix->add_option("-b,--b", b_value, "translation part, canonical value");
  rep_matrix->add_option("--chi", chi_value, "character parameter (nonzero value, default 1)");

  CLI::App* decompose = app.add_subcommand("decompose", "print graded component dimensions");
  add_field_opts(decompose, true);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_field_opts(verify, false);
  verify->add_option("--all-q", all_q, "sweep every prime power q <= N");
  verify->add_option("--trials", trials, "falsification trials per field (default 1000)");
  verify->add_option("--seed", seed, "base RNG seed (default 42)");
  verify->add_option("--chi", chi_value, "character parameter (nonzero value, default 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (field_info->parsed()) return run_field_info(p, n, format, output);
    if (char_table->parsed()) return run_char_table(p, n, format, output);
    if (rep_matrix->parsed()) return run_rep_matrix(p, n, a_value, b_value, chi_value, output);
    if (decompose->parsed()) return run_decompose(p, n, format, output);
    if (verify->parsed()) {
      if (all_q == 0 && p == 0) {
        throw ConfigError("verify needs either --p (with optional --n) or --all-q");
      }
      return run_verify(p, n, all_q, trials, seed, chi_value, format, output);
    }
  } catch (const CounterexampleFound& e) {
    std::cerr << e.what() << "\n" << e.details() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ZeroScaleError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
