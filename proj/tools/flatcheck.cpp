// flatcheck: exact flatness/projectivity workbench for finitely presented
// modules over small computable commutative rings.
//
// Exit codes: 0 success / all checks pass, 1 property violation, 2 input
// error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "flatcheck/decide.hpp"
#include "flatcheck/json_io.hpp"
#include "flatcheck/report.hpp"
#include "flatcheck/suites.hpp"

namespace {

using flatcheck::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw flatcheck::InputError("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw flatcheck::InputError("file '" + path + "': " + e.what());
  }
  return j;
}

int run_analyze(const std::string& ring_path, const std::string& module_path,
                std::size_t max_exterior, const std::string& format) {
  const flatcheck::Ring R = flatcheck::ring_from_json(load_json_file(ring_path));
  json mj = load_json_file(module_path);
  if (!mj.contains("ring")) mj["ring"] = flatcheck::ring_to_json(R);
  const flatcheck::PresentedModule M = flatcheck::module_from_json(mj);
  if (!(M.ring() == R))
    throw flatcheck::InputError("module document disagrees with --ring");
  const auto report = flatcheck::analyze_module(M, max_exterior);
  if (format == "json")
    std::cout << report.document.dump(2) << "\n";
  else
    std::cout << flatcheck::render_analysis_text(report.document);
  std::cerr << "elapsed: " << report.elapsed_seconds << "s\n";
  return 0;
}

int run_check(const std::string& suite, const std::string& config_path,
              bool corrupt, const std::string& format) {
  flatcheck::SuiteConfig cfg;
  if (!config_path.empty())
    cfg = flatcheck::suite_config_from_json(load_json_file(config_path));
  if (corrupt) cfg.corrupt_oracle = true;
  const auto start = std::chrono::steady_clock::now();
  const auto result = flatcheck::run_suite(suite, cfg);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (format == "json") {
    std::cout << flatcheck::suite_result_to_json(result).dump(2) << "\n";
  } else {
    std::cout << "suite " << result.suite << ": "
              << (result.pass() ? "PASS" : "FAIL") << " (" << result.instances
              << " instances)\n";
    if (!result.pass())
      std::cout << "first failing instance:\n"
                << result.failures.front().dump(2) << "\n";
  }
  std::cerr << "elapsed: " << elapsed << "s\n";
  return result.pass() ? 0 : 1;
}

int run_example1(const std::string& base_path, std::size_t samples,
                 std::uint64_t seed, const std::string& format) {
  const flatcheck::Ring base =
      flatcheck::ring_from_json(load_json_file(base_path));
  if (!base.is_finite())
    throw flatcheck::InputError("certificate base must be a finite ring");
  const auto cert = flatcheck::example1_certificate(base, samples, seed);
  const json j = flatcheck::certificate_to_json(cert);
  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "base: " << base.describe() << " (adaptation: "
              << cert.adaptation << ")\n"
              << "flat samples verified: " << cert.flat_samples.size() << "\n"
              << "idempotent candidates refuted: " << cert.refutations.size()
              << " (" << cert.tail_nonzero_case.instances_checked
              << " with nonzero tail, " << cert.tail_zero_case.instances_checked
              << " with finite support)\n"
              << "status: " << (cert.valid ? "VALID" : "INVALID") << "\n";
  }
  return cert.valid ? 0 : 1;
}

int run_pointwise(const std::string& ring_path, const std::string& subset_json,
                  const std::string& format) {
  const flatcheck::Ring R = flatcheck::ring_from_json(load_json_file(ring_path));
  json sj;
  try {
    sj = json::parse(subset_json);
  } catch (const json::parse_error& e) {
    throw flatcheck::InputError(std::string("--subset: ") + e.what());
  }
  if (!sj.is_array())
    throw flatcheck::InputError("--subset: expected a JSON array of elements");
  std::vector<flatcheck::Elem> S;
  for (const auto& x : sj) S.push_back(flatcheck::elem_from_json(R, x));
  const auto pl = flatcheck::pointwise_localization(R, S);
  if (format == "json") {
    std::cout << flatcheck::pointwise_to_json(pl).dump(2) << "\n";
  } else {
    std::cout << "source: " << R.describe() << "\n"
              << "result: " << pl.result.describe() << "\n";
    for (std::size_t i = 0; i < S.size(); ++i)
      std::cout << "eta(s_" << i
                << ") = " << flatcheck::elem_to_json(pl.result, pl.eta.apply(S[i])).dump()
                << ", x_s = "
                << flatcheck::elem_to_json(pl.result, pl.inverses[i]).dump()
                << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "flatcheck: flatness and projectivity of finitely presented modules "
      "over computable commutative rings"};
  app.require_subcommand(1);

  std::string ring_path, module_path, format = "text";
  std::size_t max_exterior = 8;
  auto* analyze = app.add_subcommand(
      "analyze", "full analysis of one module (flatness, invariant factors, "
                 "rank map, projectivity)");
  analyze->add_option("--ring", ring_path, "ring descriptor file")->required();
  analyze->add_option("--module", module_path, "module document file")->required();
  analyze->add_option("--max-exterior", max_exterior,
                      "highest exterior degree to report");
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string suite, config_path;
  bool corrupt = false;
  auto* check = app.add_subcommand("check", "run a named property suite");
  check->add_option("--suite", suite, "suite name")->required();
  check->add_option("--config", config_path, "suite configuration file");
  check->add_flag("--test-corrupt-oracle", corrupt,
                  "deliberately falsify the oracle comparison (failure-path "
                  "exercise)");
  check->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string base_path;
  std::size_t samples = 200;
  std::uint64_t seed = 7;
  auto* example1 = app.add_subcommand(
      "example1",
      "certificate that R/I over the eventually-constant sequence ring is "
      "finitely generated, flat, and not projective");
  example1->add_option("--base", base_path, "base ring descriptor file")->required();
  example1->add_option("--samples", samples, "number of random samples");
  example1->add_option("--seed", seed, "random seed");
  example1->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string subset_json = "[]";
  auto* pointwise =
      app.add_subcommand("pointwise", "pointwise localization S^(-1)R");
  pointwise->add_option("--ring", ring_path, "ring descriptor file")->required();
  pointwise->add_option("--subset", subset_json,
                        "JSON array of ring elements to localize at");
  pointwise->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze))
      return run_analyze(ring_path, module_path, max_exterior, format);
    if (app.got_subcommand(check))
      return run_check(suite, config_path, corrupt, format);
    if (app.got_subcommand(example1))
      return run_example1(base_path, samples, seed, format);
    if (app.got_subcommand(pointwise))
      return run_pointwise(ring_path, subset_json, format);
  } catch (const flatcheck::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const flatcheck::ConstructionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const flatcheck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
