#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "homleib/commands.hpp"

namespace {

int emit(const homleib::Report& report, const std::string& format, const std::string& out) {
  const std::string text = report.render(format == "machine");
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) {
      std::cerr << "cannot write " << out << "\n";
      return static_cast<int>(homleib::ExitCode::input_error);
    }
    file << text;
  }
  return static_cast<int>(report.exit_code());
}

}  // namespace

int main(int argc, char** argv) {
  using namespace homleib;
  CLI::App app{"Hom-Leibniz algebras: constructions and checks over exact fields"};
  app.require_subcommand(1);
  cli::Options opt;
  std::string format = "human", out;
  app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "machine"}))->capture_default_str();
  app.add_option("--out", out, "write the report to PATH instead of stdout");
  app.fallthrough();

  std::string file, file2;
  Report report("", {});

  auto* validate = app.add_subcommand("validate", "check the axioms and structural invariants of an algebra file");
  validate->add_option("file", file, "algebra file")->required();
  validate->callback([&] { report = cli::validate(file, opt); });

  auto* uce = app.add_subcommand("uce", "build the universal (alpha-)central extension");
  uce->add_option("file", file, "algebra file")->required();
  uce->add_flag("--alpha", opt.alpha, "build uce_alpha instead of uce");
  uce->add_option("--algebra-out", opt.algebra_out, "write the extension algebra");
  uce->callback([&] { report = cli::uce(file, opt); });

  auto* sd = app.add_subcommand("semidirect", "form the semidirect product of an action file");
  sd->add_option("action", file, "action file")->required();
  sd->add_option("--name", opt.name, "name of the product algebra");
  sd->add_option("--algebra-out", opt.algebra_out, "write the product algebra");
  sd->add_option("--split-out", opt.split_out, "write the canonical split extension");
  sd->callback([&] { report = cli::semidirect(file, opt); });

  auto* split = app.add_subcommand("check-split", "verify a split extension is a semidirect product");
  split->add_option("file", file, "split extension file")->required();
  split->callback([&] { report = cli::check_split(file, opt); });

  auto* aut = app.add_subcommand("lift-aut", "lift an automorphism along an alpha-cover");
  aut->add_option("cover", file, "cover file")->required();
  aut->add_option("matrix", file2, "automorphism matrix file")->required();
  aut->add_option("--lift-out", opt.lift_out, "write the lifted automorphism");
  aut->callback([&] { report = cli::lift_aut(file, file2, opt); });

  auto* der = app.add_subcommand("lift-der", "lift a derivation along an alpha-cover");
  der->add_option("cover", file, "cover file")->required();
  der->add_option("matrix", file2, "derivation matrix file")->required();
  der->add_option("--lift-out", opt.lift_out, "write the lifted derivation");
  der->callback([&] { report = cli::lift_der(file, file2, opt); });

  auto* s5 = app.add_subcommand("check-s5", "uce of a semidirect product: decomposition statements and equivalences");
  s5->add_option("setup", file, "split extension or action file")->required();
  s5->callback([&] { report = cli::check_s5(file, opt); });

  auto* all = app.add_subcommand("corpus", "run the acceptance suite over the shipped corpus");
  all->callback([&] { report = cli::corpus(opt); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::input_error);
  }
  return emit(report, format, out);
}
