// Command-line front end: group constructions, subgroup lattices, Burnside
// ring computations and the cyclic-to-group ring map checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "fwb/cli.hpp"
#include "fwb/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kPrecondition = 2, kInvariant = 3 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fwb::ParseError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fwb;
  using namespace fwb::cli;

  CLI::App app{"Burnside rings of finite groups and the ring map from the cyclic group of the same order"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::size_t cap = kDefaultOrderCap;
  std::string out_path;
  app.add_option("--format", format_name, "Output format: json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cap", cap, "Largest group order accepted")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  std::string spec, sel, sel2, element, op_name, catalog, ops_list = "all";
  std::size_t threads = 1;

  auto* group = app.add_subcommand("group", "Construct a group and print basic data");
  group->add_option("spec", spec, "Group spec, e.g. C12, S3, Dic20, SL(2,5), C2xS3")->required();

  auto* lattice = app.add_subcommand("lattice", "Subgroup lattice summary");
  lattice->add_option("spec", spec)->required();

  auto* marks = app.add_subcommand("marks", "Table of marks");
  marks->add_option("spec", spec)->required();

  auto* idempotents = app.add_subcommand("idempotents", "Primitive idempotents of the rational Burnside ring");
  idempotents->add_option("spec", spec)->required();

  auto* mconst = app.add_subcommand("mconst", "The constant m_{L,K} (K is selected inside L)");
  mconst->add_option("spec", spec)->required();
  mconst->add_option("L", sel, "Selector for L in G")->required();
  mconst->add_option("K", sel2, "Selector for K in L")->required();

  auto* op = app.add_subcommand("op", "Apply a biset operation to an element");
  op->add_option("name", op_name, "res, ind, ten, inf, def or fix")
      ->required()
      ->check(CLI::IsMember({"res", "ind", "ten", "inf", "def", "fix"}));
  op->add_option("spec", spec)->required();
  op->add_option("subgroup", sel, "Selector for H (res, ind, ten) or N (inf, def, fix)")->required();
  op->add_option("element", element, "Element JSON or a file containing it")->required();

  auto* fw = app.add_subcommand("fw", "The ring map from the Burnside ring of the cyclic group of order |G|");
  fw->require_subcommand(1);
  auto* fw_apply = fw->add_subcommand("apply", "Image of an element of the cyclic group's Burnside ring");
  fw_apply->add_option("spec", spec)->required();
  fw_apply->add_option("element", element, "Element JSON over C_|G| or a file containing it")->required();
  auto* fw_check = fw->add_subcommand("check", "Check commutativity with a biset operation");
  fw_check->add_option("--op", op_name)->required()->check(CLI::IsMember({"res", "ind", "ten", "inf", "def", "fix"}));
  fw_check->add_option("spec", spec)->required();
  fw_check->add_option("--sub", sel, "Subgroup selector")->required();
  auto* fw_survey = fw->add_subcommand("survey", "Commutativity survey over a catalog of groups");
  fw_survey->add_option("--catalog", catalog, "File with one group spec per line")->required();
  fw_survey->add_option("--ops", ops_list, "Comma-separated subset of inf,ind,ten,def (default all)");
  fw_survey->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);
    Output out;
    if (*group) {
      out = group_command(spec, cap);
    } else if (*lattice) {
      out = lattice_command(spec, cap);
    } else if (*marks) {
      out = marks_command(spec, cap);
    } else if (*idempotents) {
      out = idempotents_command(spec, cap);
    } else if (*mconst) {
      out = mconst_command(spec, sel, sel2, cap);
    } else if (*op) {
      out = op_command(parse_biset_op(op_name), spec, sel, element, cap);
    } else if (*fw_apply) {
      out = fw_apply_command(spec, element, cap);
    } else if (*fw_check) {
      out = fw_check_command(parse_biset_op(op_name), spec, sel, cap);
    } else if (*fw_survey) {
      const auto ops = parse_survey_ops(ops_list);
      const auto rows = run_survey(read_catalog(catalog), ops, cap, threads);
      // Surveys are tabular; json and csv both produce CSV here, table aligns it.
      const Table t = survey_table(rows);
      emit(format == Format::Table ? to_text(t) : to_csv(t), out_path);
      return kOk;
    }
    emit(render(out, format), out_path);
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
}
