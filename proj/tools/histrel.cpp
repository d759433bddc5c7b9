// histrel: ingest sample files, solve for supporting/covering weights, score
// new samples, and self-verify against the brute-force oracle.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "histrel/io.hpp"
#include "histrel/profile.hpp"
#include "histrel/verify.hpp"

namespace {

using namespace histrel;

void emit(const json& doc, const std::string& output) {
  const std::string text = doc.dump(2) + "\n";
  if (output.empty() || output == "-")
    std::cout << text;
  else
    write_file_atomic(output, text);
}

std::optional<Alphabet> alphabet_option(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_alphabet_list(text);
}

Arithmetic default_mode() {
  if (const char* env = std::getenv("HISTREL_MODE"); env && *env) return parse_arithmetic(env);
  return Arithmetic::exact;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supporting/covering weights and relevance scores for histogram sets"};
  app.require_subcommand(1);

  std::string input, output, alphabet, mode_text, profile_path, samples_path;
  double tol = kDefaultTolerance;

  auto* ingest = app.add_subcommand("ingest", "Read samples (CSV) or histograms (JSON) and write a histogram set");
  ingest->add_option("input", input, "CSV samples or JSON histogram file")->required();
  ingest->add_option("--alphabet", alphabet, "Comma-separated alphabet (default: sorted distinct labels)");
  ingest->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* solve = app.add_subcommand("solve", "Solve both problems and write a weight profile");
  solve->add_option("input", input, "CSV samples or JSON histogram file")->required();
  solve->add_option("--alphabet", alphabet, "Comma-separated alphabet (default: sorted distinct labels)");
  solve->add_option("--mode", mode_text, "rational | float (default: $HISTREL_MODE or rational)");
  solve->add_option("--tol", tol, "Float-mode tolerance")->check(CLI::PositiveNumber);
  solve->add_option("-o,--output", output, "Profile file (default: stdout)");

  auto* score = app.add_subcommand("score", "Score samples against a weight profile");
  score->add_option("profile", profile_path, "Weight profile written by 'solve'")->required();
  score->add_option("samples", samples_path, "CSV samples or JSON histogram file")->required();
  score->add_option("-o,--output", output, "Report file (default: stdout)");

  VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "Check the solver against the oracle on random instances");
  verify->add_option("--seed", verify_options.seed, "Random seed");
  verify->add_option("--trials", verify_options.trials, "Number of random instances");
  verify->add_option("--max-symbols", verify_options.shape.max_symbols, "Largest alphabet drawn")
      ->check(CLI::Range(2, 6));
  verify->add_option("--max-members", verify_options.shape.max_members, "Largest set drawn")->check(CLI::Range(1, 8));
  verify->add_option("--max-length", verify_options.shape.max_length, "Largest sample length drawn")
      ->check(CLI::Range(1, 1000));
  verify->add_option("--binary-length", verify_options.binary_sweep_length, "Binary sweep |T| (0 disables)");
  verify->add_option("-o,--output", output, "Report file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(ErrorCode::invalid_argument);
  }

  try {
    if (*ingest) {
      emit(to_json(ingest_samples(input, alphabet_option(alphabet))), output);
    } else if (*solve) {
      const Arithmetic mode = mode_text.empty() ? default_mode() : parse_arithmetic(mode_text);
      const auto set = ingest_samples(input, alphabet_option(alphabet));
      const std::string digest = "sha256:" + sha256_hex(read_file(input));
      SolveOptions options;
      options.tol = tol;
      if (mode == Arithmetic::exact) {
        const auto profile = build_profile<Rational>(set, digest, options);
        validate_profile(profile);
        emit(profile_to_json(profile), output);
      } else {
        const auto profile = build_profile<double>(set, digest, options);
        validate_profile(profile);
        emit(profile_to_json(profile), output);
      }
    } else if (*score) {
      const auto profile = load_profile(profile_path);
      std::visit(
          [&](const auto& p) {
            const auto samples = ingest_samples(samples_path, p.set.alphabet());
            emit(score_report_to_json(p, score_samples(p, samples)), output);
          },
          profile);
    } else if (*verify) {
      const auto report = run_verification(verify_options);
      emit(report.to_json(), output);
      if (!report.all_passed()) {
        std::cerr << "error: VerificationFailure: at least one property failed\n";
        return exit_code(ErrorCode::verification_failure);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
