#include <csignal>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "hookcert/orchestrator.hpp"

namespace {

extern "C" void on_interrupt(int) { hookcert::request_stop(); }

void add_report_options(CLI::App* cmd, hookcert::RunConfig& c) {
  static const std::map<std::string, hookcert::ReportFormat> formats{
      {"json-lines", hookcert::ReportFormat::json_lines}, {"csv", hookcert::ReportFormat::csv}};
  cmd->add_option("--report", c.report_path, "Write records to this file (default: stdout)");
  cmd->add_option("--format", c.format, "json-lines or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd->add_option("--sieve-bound", c.sieve_bound, "Prime sieve bound")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  using hookcert::Command;
  hookcert::RunConfig c;
  CLI::App app{"Exact hook-product certification for the S_n / A_n dimension sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hookcert 1.0.0");

  static const std::map<std::string, hookcert::ParityChoice> parities{
      {"odd", hookcert::ParityChoice::odd},
      {"even", hookcert::ParityChoice::even},
      {"both", hookcert::ParityChoice::both}};
  static const std::map<std::string, hookcert::LemmaChoice> lemmas{
      {"2.1", hookcert::LemmaChoice::two_primes},
      {"two-primes", hookcert::LemmaChoice::two_primes},
      {"2.3", hookcert::LemmaChoice::large_factor},
      {"large-factor", hookcert::LemmaChoice::large_factor},
      {"all", hookcert::LemmaChoice::all}};
  bool no_timing = false;

  auto* fact = app.add_subcommand("verify-fact", "Certify the witness is the unique target match");
  fact->add_option("--k-min", c.k_min, "Smallest k");
  fact->add_option("--k-max", c.k_max, "Largest k");
  fact->add_option("--parity", c.parity, "odd, even or both")
      ->transform(CLI::CheckedTransformer(parities, CLI::ignore_case));
  fact->add_flag("--cross-check", c.cross_check, "Also run the naive search for 35 <= k <= 40");
  fact->add_flag("--resume", c.resume, "Keep records already in the report file");
  fact->add_flag("--no-timing", no_timing, "Write millis as 0 for byte-stable reports");
  add_report_options(fact, c);

  int naive_k = 0;
  auto* naive = app.add_subcommand("naive", "Exhaustive search over all partitions");
  naive->add_option("--k", naive_k, "k to search")->required();
  naive->add_option("--parity", c.parity, "odd, even or both")
      ->transform(CLI::CheckedTransformer(parities, CLI::ignore_case));
  naive->add_flag("--allow-large", c.allow_large, "Permit k above the naive guard");
  naive->add_flag("--no-timing", no_timing, "Write millis as 0");
  add_report_options(naive, c);

  auto* lemma = app.add_subcommand("verify-lemmas", "Prime-interval lemma scans");
  lemma->add_option("--which", c.lemmas, "2.1 (two-primes), 2.3 (large-factor) or all")
      ->transform(CLI::CheckedTransformer(lemmas));
  lemma->add_option("--from", c.scan_from, "First k");
  lemma->add_option("--to", c.scan_to, "Last k");
  lemma->add_flag("--no-timing", no_timing, "Write millis as 0");
  add_report_options(lemma, c);

  auto* gaps = app.add_subcommand("scan-gaps", "List k with no prime in the short window above k");
  gaps->add_option("--from", c.scan_from, "First k");
  gaps->add_option("--to", c.scan_to, "Last k");
  add_report_options(gaps, c);

  auto* dims = app.add_subcommand("dims", "Dimension sets of S_n and A_n");
  dims->add_option("--n", c.n, "n")->required();
  add_report_options(dims, c);

  auto* wit = app.add_subcommand("witness", "Witness partition and its dimensions");
  wit->add_option("--n", c.n, "n")->required();
  add_report_options(wit, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : hookcert::kExitConfigError;
  }

  if (fact->parsed()) c.command = Command::verify_fact;
  if (naive->parsed()) {
    c.command = Command::naive;
    c.k_min = c.k_max = naive_k;
  }
  if (lemma->parsed()) c.command = Command::verify_lemmas;
  if (gaps->parsed()) c.command = Command::scan_gaps;
  if (dims->parsed()) c.command = Command::dims;
  if (wit->parsed()) c.command = Command::witness;
  c.timing = !no_timing;

  std::signal(SIGINT, on_interrupt);
  std::signal(SIGTERM, on_interrupt);
  return hookcert::run(c, std::cout, std::cerr);
}
