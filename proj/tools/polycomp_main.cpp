// Command-line front end: structural data extraction, completion feasibility
// checks with per-condition explanations, and oracle verification campaigns.
//
// Exit codes: check: 0 feasible, 1 infeasible, 2 hypothesis violated,
// 3 parse/validation error, 4 internal error. oracle: disagreement count
// (clamped to 100), 120 on budget/usage errors.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycomp/io.hpp"

namespace {

using namespace polycomp;

int run_structure(const std::string& path, const std::string& output) {
  RatMatrix m = io::matrix_from_json(io::load_document(path));
  StructuralData d = complete_structural_data(m);
  if (output == "json")
    std::cout << io::structure_to_json(d).dump(2) << "\n";
  else
    std::cout << io::structure_to_text(d);
  return 0;
}

int run_check(const std::string& matrix_path, const std::string& target_path,
              const std::string& ring_name, const std::string& mode_flag,
              const std::string& side, bool explain, const std::string& output) {
  auto ring = ring_from_string(ring_name);
  if (!ring) throw ValidationError("--ring must be poly or rational");
  RatMatrix m = io::matrix_from_json(io::load_document(matrix_path));
  if (*ring == Ring::polynomial && !m.is_polynomial())
    throw ValidationError("--ring poly needs a polynomial matrix");
  PrescribedData target = io::target_from_json(io::load_document(target_path), m.field());
  if (!mode_flag.empty()) {
    auto mode = mode_from_string(mode_flag);
    if (!mode) throw ValidationError("unknown --mode '" + mode_flag + "'");
    if (*mode != target.mode)
      throw ValidationError("--mode " + mode_flag + " contradicts target document mode " +
                            to_string(target.mode));
  }
  StructuralData src = complete_structural_data(m);
  Verdict v = side == "col" ? check_column_completion(src, target, *ring)
                            : check_row_completion(src, target, *ring);
  if (output == "json")
    std::cout << io::verdict_to_json(v, target.mode, *ring).dump(2) << "\n";
  else
    std::cout << io::verdict_to_text(v, target.mode, *ring, explain);
  switch (v.status) {
    case Feasibility::feasible: return 0;
    case Feasibility::infeasible: return 1;
    case Feasibility::hypothesis_violated: return 2;
  }
  return 4;
}

int run_oracle(std::uint32_t field_p, const std::string& size, int max_degree, int added_rows,
               const std::string& mode_name, unsigned long long budget, std::uint64_t seed,
               const std::string& output) {
  Field f = Field::gf(field_p);
  auto mode = mode_from_string(mode_name);
  if (!mode) throw ValidationError("unknown --mode '" + mode_name + "'");
  auto xpos = size.find('x');
  if (xpos == std::string::npos) throw ValidationError("--size must look like 1x2");
  int rows = std::stoi(size.substr(0, xpos));
  int cols = std::stoi(size.substr(xpos + 1));
  if (rows < 1 || cols < 1) throw ValidationError("--size dimensions must be positive");

  // Campaign: every source of the given shape, exhaustively.
  unsigned long long sources = 1;
  for (int k = 0; k < rows * cols * (max_degree + 1); ++k) {
    sources *= f.modulus();
    if (sources > budget) throw BudgetError("source enumeration exceeds the budget");
  }
  long long disagreements = 0;
  long long targets = 0;
  (void)seed;
  for (unsigned long long s = 0; s < sources; ++s) {
    PolyMatrix source(f, rows, cols);
    {
      unsigned long long idx = s;
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
          std::vector<FieldElem> cs;
          for (int k = 0; k <= max_degree; ++k) {
            cs.push_back(FieldElem::from_int(f, static_cast<long long>(idx % f.modulus())));
            idx /= f.modulus();
          }
          source.at(i, j) = Poly::from_coeffs(f, std::move(cs));
        }
    }
    SearchSpace space{source, added_rows, max_degree + 1, std::nullopt};
    AchievableSet ach = enumerate_completions(space, budget);
    OracleReport rep = differential_test(space, *mode, ach);
    targets += rep.targets_checked;
    disagreements += static_cast<long long>(rep.disagreements.size());
    if (output == "json")
      std::cout << io::report_to_json(rep).dump() << "\n";
    else if (!rep.ok() || s == sources - 1)
      std::cout << "source " << s << "/" << sources << ": " << io::report_to_text(rep);
    if (*mode != Mode::complete && *mode != Mode::fin_only) {
      OracleReport proj = projection_coherence_test(space, *mode, ach);
      targets += proj.targets_checked;
      disagreements += static_cast<long long>(proj.disagreements.size());
      if (output == "json")
        std::cout << io::report_to_json(proj).dump() << "\n";
      else if (!proj.ok())
        std::cout << "source " << s << "/" << sources << ": " << io::report_to_text(proj);
    }
  }
  if (output != "json")
    std::cout << "campaign done: " << sources << " sources, " << targets << " targets, "
              << disagreements << " disagreements\n";
  return static_cast<int>(std::min<long long>(disagreements, 100));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structural data and row/column completion feasibility for polynomial and "
               "rational matrices"};
  app.require_subcommand(1);

  std::string matrix_path, target_path, output = "text", ring = "poly", side = "row";
  std::string mode_flag;
  bool explain = false;

  auto* cmd_structure = app.add_subcommand(
      "structure", "Extract the complete structural data of a matrix document");
  cmd_structure->add_option("matrix", matrix_path, "matrix JSON document")->required();
  cmd_structure->add_option("--output", output, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_check = app.add_subcommand(
      "check", "Decide a row (column) completion feasibility problem");
  cmd_check->add_option("matrix", matrix_path, "matrix JSON document")->required();
  cmd_check->add_option("target", target_path, "target JSON document")->required();
  cmd_check->add_option("--ring", ring, "poly|rational")
      ->check(CLI::IsMember({"poly", "rational"}));
  cmd_check->add_option("--mode", mode_flag,
                        "complete|fin-inf-col|fin-inf-row|fin-inf|inf|fin|fin-first-order "
                        "(must match the target document)");
  cmd_check->add_option("--side", side, "row|col")->check(CLI::IsMember({"row", "col"}));
  cmd_check->add_flag("--explain", explain, "print every condition with both sides");
  cmd_check->add_option("--output", output, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  std::uint32_t field_p = 2;
  std::string size = "1x2", oracle_mode = "complete";
  int max_degree = 1, added_rows = 1;
  unsigned long long budget = polycomp::kDefaultOracleBudget;
  std::uint64_t seed = 0;
  auto* cmd_oracle = app.add_subcommand(
      "oracle", "Differential verification campaign against exhaustive search");
  cmd_oracle->add_option("--field", field_p, "prime field modulus (default 2)");
  cmd_oracle->add_option("--size", size, "source matrix shape, e.g. 1x2");
  cmd_oracle->add_option("--max-degree", max_degree, "source entry degree bound");
  cmd_oracle->add_option("--rows", added_rows, "added rows z");
  cmd_oracle->add_option("--mode", oracle_mode, "completion mode under test");
  cmd_oracle->add_option("--budget", budget, "candidate budget per search space");
  cmd_oracle->add_option("--seed", seed, "seed for randomized fallbacks");
  cmd_oracle->add_option("--output", output, "text|json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_structure->parsed()) return run_structure(matrix_path, output);
    if (cmd_check->parsed())
      return run_check(matrix_path, target_path, ring, mode_flag, side, explain, output);
    if (cmd_oracle->parsed())
      return run_oracle(field_p, size, max_degree, added_rows, oracle_mode, budget, seed,
                        output);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return cmd_oracle->parsed() ? 120 : 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 3;
}
