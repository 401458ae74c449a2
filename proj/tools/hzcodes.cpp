// hzcodes: codes over the Hurwitz integers.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hurwitz/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Codes over Hurwitz integers with the Hurwitz metric"};
  app.require_subcommand(1);

  std::string config;
  std::string format;
  hurwitz::CommandOptions options;
  std::uint64_t seed = 0;
  std::size_t trials = 0;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "Run configuration file")->required()->check(CLI::ExistingFile);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
    sub->add_option("--seed", seed, "Override the configured seed");
    sub->add_option("--trials", trials, "Override the configured trial count");
    sub->add_flag("--exhaustive", options.exhaustive, "Disable sampling caps / run brute force");
  };

  auto* inspect = app.add_subcommand("inspect", "Field, weights and class counts");
  common(inspect);
  auto* encode = app.add_subcommand("encode", "Systematic encoding of a message");
  common(encode);
  encode->add_option("message", options.input, "Comma-separated message over R_pi")->required();
  auto* decode = app.add_subcommand("decode", "Decode a received vector");
  common(decode);
  decode->add_option("vector", options.input,
                     "Comma-separated received vector (default: the config's 'received' key)");
  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  common(verify);
  verify->add_option("--fixtures", options.fixtures_dir, "Fixture directory to replay");
  verify->add_option("--inject-fault", options.inject_fault)->group("");
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte-Carlo decoding run");
  common(simulate);
  simulate->add_option("--channel", options.channel, "Error channel")
      ->check(CLI::IsMember({"in-class", "none", "triple"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hurwitz::kExitUsage;
  }

  auto* sub = app.get_subcommands().front();
  if (!format.empty()) {
    options.format = format == "records" ? hurwitz::OutputFormat::kRecords : hurwitz::OutputFormat::kTable;
  }
  if (sub->count("--seed") > 0) options.seed = seed;
  if (sub->count("--trials") > 0) options.trials = trials;
  return hurwitz::run_command(sub->get_name(), config, options, std::cout, std::cerr);
}
