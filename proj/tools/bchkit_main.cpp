#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <bchkit/bchkit.hpp>

namespace {

using namespace bchkit;

int run_compute(std::size_t degree, const std::string& method, const std::string& basis,
                const std::string& format, const std::string& output) {
  std::optional<BchResult> result;
  if (method == "both") {
    BchResult direct = bch_compute(degree, BchMethod::direct);
    BchResult recurrence = bch_compute(degree, BchMethod::recurrence);
    for (std::size_t n = 1; n <= degree; ++n) {
      if (direct.component(n) != recurrence.component(n)) {
        std::cerr << "error: methods disagree at degree " << n << "\n"
                  << "  direct:     " << direct.component(n) << "\n"
                  << "  recurrence: " << recurrence.component(n) << "\n";
        return 1;
      }
    }
    result = std::move(recurrence);
  } else {
    result = bch_compute(degree, method == "direct" ? BchMethod::direct : BchMethod::recurrence);
  }

  const OutputBasis ob = basis == "words" ? OutputBasis::words : OutputBasis::rightnormed;
  const std::vector<OutputRecord> records = make_records(*result, ob);
  std::string text;
  if (format == "text")
    text = render_text(records);
  else if (format == "csv")
    text = render_csv(records);
  else
    text = render_json(result->components.front().alphabet(), method, records);

  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << output << " for writing\n";
      return 1;
    }
    out << text;
  }
  return 0;
}

int run_verify(std::size_t max_degree, std::size_t trials, std::uint64_t seed) {
  const VerifyReport report = run_verification({max_degree, trials, seed});
  std::cout << report.to_text();
  return report.all_pass() ? 0 : 1;
}

int run_bench(std::size_t max_degree) {
  using clock = std::chrono::steady_clock;
  std::ostringstream out;
  out << "degree,direct_terms,recurrence_terms,direct_ms,recurrence_ms\n";
  for (std::size_t n = 1; n <= max_degree; ++n) {
    const auto t0 = clock::now();
    const std::vector<NcPoly> direct = bch_direct(n);
    const auto t1 = clock::now();
    const std::vector<NcPoly> recurrence = bch_recurrence_components(n);
    const auto t2 = clock::now();
    const auto ms = [](clock::duration d) {
      return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d).count();
    };
    out << n << "," << direct[n - 1].term_count() << "," << recurrence[n - 1].term_count() << ","
        << std::fixed << std::setprecision(3) << ms(t1 - t0) << "," << ms(t2 - t1) << "\n";
  }
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Baker-Campbell-Hausdorff series toolkit"};
  app.require_subcommand(1);

  std::size_t degree = 0;
  std::string method = "both";
  std::string basis = "words";
  std::string format = "text";
  std::string output;
  CLI::App* compute = app.add_subcommand("compute", "Compute the components C_1..C_N");
  compute->add_option("--degree,-n", degree, "Highest degree N")
      ->required()
      ->check(CLI::PositiveNumber);
  compute->add_option("--method", method, "direct, recurrence, or both (default: both)")
      ->check(CLI::IsMember({"direct", "recurrence", "both"}));
  compute->add_option("--basis", basis, "words or rightnormed (default: words)")
      ->check(CLI::IsMember({"words", "rightnormed"}));
  compute->add_option("--format", format, "text, json, or csv (default: text)")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  compute->add_option("--output", output, "Write to this file instead of stdout");

  std::size_t max_degree = 6;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the randomized identity checks and the certificate");
  verify->add_option("--max-degree", max_degree, "Certificate degree (default: 6)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials, "Random trials per check (default: 100)");
  verify->add_option("--seed", seed, "Seed for all randomness (default: 0)");

  std::size_t bench_degree = 8;
  CLI::App* bench = app.add_subcommand("bench", "Time both methods per degree (csv)");
  bench->add_option("--max-degree", bench_degree, "Highest degree (default: 8)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(degree, method, basis, format, output);
    if (verify->parsed()) return run_verify(max_degree, trials, seed);
    if (bench->parsed()) return run_bench(bench_degree);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
