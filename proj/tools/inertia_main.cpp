// Command-line front end: exact inertial products on abelian quotient stacks.

#include <CLI11.hpp>
#include <iostream>

#include "inertia/config.hpp"
#include "inertia/errors.hpp"

using namespace inertia;

namespace {

struct CommonOpts {
  std::string config_path;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "stack description (JSON)")->required();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

void emit(const CommandOutput& out, const std::string& format) {
  if (format == "json")
    std::cout << out.data.dump(2) << "\n";
  else
    std::cout << out.text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inertial products on abelian quotient stacks"};
  app.require_subcommand(1);

  CommonOpts sectors_opts, table_opts, check_opts, chern_opts, localize_opts;
  std::string table_product = "orbifold", table_theory = "k";
  std::string check_product = "orbifold", chern_product = "orbifold";

  CLI::App* sectors = app.add_subcommand("sectors", "list sectors, ages and ring presentations");
  add_common(sectors, sectors_opts);

  CLI::App* table = app.add_subcommand("table", "multiplication table of sector units");
  add_common(table, table_opts);
  table->add_option("--product", table_product,
                    "orbifold | virtual | vplus:NAME | vminus:NAME | localized");
  table->add_option("--theory", table_theory, "k | chow");

  CLI::App* check = app.add_subcommand("check", "verify the inertial pair axioms");
  add_common(check, check_opts);
  check->add_option("--product", check_product, "orbifold | virtual | vplus:NAME | vminus:NAME");

  CLI::App* chern = app.add_subcommand("chern", "inertial Chern characters of sector units");
  add_common(chern, chern_opts);
  chern->add_option("--product", chern_product, "orbifold | virtual | vplus:NAME | vminus:NAME");

  CLI::App* localize =
      app.add_subcommand("localize", "support decomposition and localized product");
  add_common(localize, localize_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0; any usage problem is a validation failure
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sectors->parsed()) {
      StackConfig cfg = load_config(sectors_opts.config_path);
      Stack s(cfg.action);
      emit(cmd_sectors(s), sectors_opts.format);
    } else if (table->parsed()) {
      StackConfig cfg = load_config(table_opts.config_path);
      Stack s(cfg.action);
      emit(cmd_table(s, cfg, table_product, table_theory), table_opts.format);
    } else if (check->parsed()) {
      StackConfig cfg = load_config(check_opts.config_path);
      Stack s(cfg.action);
      emit(cmd_check(s, cfg, check_product), check_opts.format);
    } else if (chern->parsed()) {
      StackConfig cfg = load_config(chern_opts.config_path);
      Stack s(cfg.action);
      emit(cmd_chern(s, cfg, chern_product), chern_opts.format);
    } else if (localize->parsed()) {
      StackConfig cfg = load_config(localize_opts.config_path);
      Stack s(cfg.action);
      emit(cmd_localize(s, cfg), localize_opts.format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return errc_is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
