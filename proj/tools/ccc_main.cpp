// Command-line front end: exact common-cause analysis in batch form.
// Results go to stdout, errors to stderr; exit codes are the machine
// contract (see README).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ccc/certificate_json.hpp"
#include "ccc/common_cause.hpp"
#include "ccc/errors.hpp"
#include "ccc/event.hpp"
#include "ccc/finite.hpp"
#include "ccc/horizontal_sum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotPositivelyCorrelated = 3;
constexpr int kExitDegenerateDistinctness = 4;
constexpr int kExitInternal = 5;

int exit_code_for(const ccc::Error& e) {
  switch (e.code()) {
    case ccc::errc::parse_error:
    case ccc::errc::endpoint_out_of_range:
      return kExitParse;
    case ccc::errc::not_positively_correlated:
      return kExitNotPositivelyCorrelated;
    case ccc::errc::degenerate_distinctness:
      return kExitDegenerateDistinctness;
    case ccc::errc::internal_invariant_violation:
      return kExitInternal;
    default:
      return kExitError;
  }
}

void print_report_lines(std::ostream& out, const ccc::RccpReport& r) {
  out << "p_a_given_c=" << ccc::format_rational(r.p_a_given_c) << "\n"
      << "p_b_given_c=" << ccc::format_rational(r.p_b_given_c) << "\n"
      << "p_ab_given_c=" << ccc::format_rational(r.p_ab_given_c) << "\n"
      << "p_a_given_cprime=" << ccc::format_rational(r.p_a_given_cprime) << "\n"
      << "p_b_given_cprime=" << ccc::format_rational(r.p_b_given_cprime) << "\n"
      << "p_ab_given_cprime=" << ccc::format_rational(r.p_ab_given_cprime) << "\n"
      << "rccp1=" << (r.rccp1 ? "true" : "false") << "\n"
      << "rccp2=" << (r.rccp2 ? "true" : "false") << "\n"
      << "rccp3=" << (r.rccp3 ? "true" : "false") << "\n"
      << "rccp4=" << (r.rccp4 ? "true" : "false") << "\n";
}

void print_certificate_text(std::ostream& out, const ccc::Certificate& cert) {
  out << "a=" << ccc::format_event(cert.a) << "\n"
      << "b=" << ccc::format_event(cert.b) << "\n"
      << "c=" << ccc::format_event(cert.c) << "\n"
      << "cov=" << ccc::format_rational(cert.covariance) << "\n"
      << "v=" << ccc::format_rational(cert.target_measure) << "\n";
  print_report_lines(out, cert.report);
  out << "distinct=" << (cert.distinct ? "true" : "false") << "\n"
      << "mode=" << ccc::to_string(cert.mode) << "\n";
}

struct CertArgs {
  std::string a;
  std::string b;
  std::string mode = "lenient";
  bool json = false;
};

int run_cov(const std::string& a_text, const std::string& b_text) {
  const ccc::Event a = ccc::parse_event(a_text);
  const ccc::Event b = ccc::parse_event(b_text);
  std::cout << ccc::format_rational(ccc::covariance(a, b)) << "\n";
  return kExitOk;
}

int run_cause(const CertArgs& args) {
  const ccc::Event a = ccc::parse_event(args.a);
  const ccc::Event b = ccc::parse_event(args.b);
  const ccc::Mode mode = ccc::parse_mode(args.mode);
  const ccc::Certificate cert = ccc::find_common_cause(a, b, mode);
  if (args.json) {
    std::cout << ccc::certificate_to_json(cert) << "\n";
  } else {
    print_certificate_text(std::cout, cert);
  }
  return kExitOk;
}

int run_verify(const std::string& a_text, const std::string& b_text,
               const std::string& c_text, bool json) {
  const ccc::Event a = ccc::parse_event(a_text);
  const ccc::Event b = ccc::parse_event(b_text);
  const ccc::Event c = ccc::parse_event(c_text);
  const ccc::RccpReport r = ccc::verify_rccp(a, b, c);
  if (json) {
    nlohmann::ordered_json j;
    j["a"] = ccc::format_event(a);
    j["b"] = ccc::format_event(b);
    j["c"] = ccc::format_event(c);
    j["p_a_given_c"] = ccc::format_rational(r.p_a_given_c);
    j["p_b_given_c"] = ccc::format_rational(r.p_b_given_c);
    j["p_ab_given_c"] = ccc::format_rational(r.p_ab_given_c);
    j["p_a_given_cprime"] = ccc::format_rational(r.p_a_given_cprime);
    j["p_b_given_cprime"] = ccc::format_rational(r.p_b_given_cprime);
    j["p_ab_given_cprime"] = ccc::format_rational(r.p_ab_given_cprime);
    j["rccp"] = nlohmann::ordered_json{
        {"rccp1", r.rccp1}, {"rccp2", r.rccp2}, {"rccp3", r.rccp3}, {"rccp4", r.rccp4}};
    j["all"] = r.all();
    std::cout << j.dump() << "\n";
  } else {
    print_report_lines(std::cout, r);
    std::cout << "all=" << (r.all() ? "true" : "false") << "\n";
  }
  return kExitOk;
}

int run_finite_check(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const ccc::FiniteAlgebra alg = ccc::parse_algebra_spec(buffer.str());
  const ccc::Classification result = ccc::classify(alg, cap);
  std::cout << "atoms=" << alg.atom_count() << "\n"
            << "verdict=" << ccc::to_string(result.verdict) << "\n"
            << "positively_correlated_pairs=" << result.witnesses.size() << "\n";
  for (const ccc::Witness& w : result.witnesses) {
    std::cout << "witness a=" << ccc::format_finite_event(w.a)
              << " b=" << ccc::format_finite_event(w.b) << " cause="
              << (w.cause ? ccc::format_finite_event(*w.cause) : std::string("none"))
              << "\n";
  }
  return kExitOk;
}

int run_finite_scan(int atoms, long long samples, std::uint64_t seed, int denominator,
                    int cap) {
  std::cout << ccc::format_scan_report(ccc::scan(atoms, samples, seed, denominator, cap));
  return kExitOk;
}

int run_hsum_cause(int blocks, const std::string& x_text, const std::string& y_text,
                   const std::string& mode_text, bool json) {
  const ccc::HSLogic logic(blocks);
  const ccc::HSElement x = logic.parse_element(x_text);
  const ccc::HSElement y = logic.parse_element(y_text);
  const ccc::Mode mode = ccc::parse_mode(mode_text);
  const ccc::HsCertificate cert = logic.find_common_cause(x, y, mode);
  if (json) {
    nlohmann::ordered_json j;
    j["k"] = blocks;
    j["block"] = cert.block;
    j["x"] = ccc::format_hs_element(x);
    j["y"] = ccc::format_hs_element(y);
    j["cause"] = ccc::format_hs_element(cert.cause());
    j["certificate"] = nlohmann::ordered_json::parse(
        ccc::certificate_to_json(cert.certificate));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "block=" << cert.block << "\n"
              << "cause=" << ccc::format_hs_element(cert.cause()) << "\n";
    print_certificate_text(std::cout, cert.certificate);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact common-cause analysis on the rational interval algebra"};
  app.require_subcommand(1);

  std::string a_text, b_text, c_text, x_text, y_text, mode_text = "lenient", spec_path;
  bool json = false;
  int atoms = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
  int denominator = 64;
  int cap = ccc::kDefaultAtomCap;
  int blocks = 2;

  CLI::App* cov = app.add_subcommand("cov", "Covariance of two events");
  cov->add_option("-a", a_text, "first event")->required();
  cov->add_option("-b", b_text, "second event")->required();

  CLI::App* cause = app.add_subcommand("cause", "Find a common cause for a,b");
  cause->add_option("-a", a_text, "first event")->required();
  cause->add_option("-b", b_text, "second event")->required();
  cause->add_option("--mode", mode_text, "strict|lenient (default lenient)");
  cause->add_flag("--json", json, "emit the certificate as JSON");

  CLI::App* verify = app.add_subcommand("verify", "Evaluate RCCP1-4 for a,b,c");
  verify->add_option("-a", a_text, "first event")->required();
  verify->add_option("-b", b_text, "second event")->required();
  verify->add_option("-c", c_text, "candidate cause")->required();
  verify->add_flag("--json", json, "emit the report as JSON");

  CLI::App* finite_check =
      app.add_subcommand("finite-check", "Classify a finite algebra spec file");
  finite_check->add_option("file", spec_path, "weights file (fractions on one line)")
      ->required();
  finite_check->add_option("--cap", cap, "atom enumeration cap");

  CLI::App* finite_scan =
      app.add_subcommand("finite-scan", "Classify seeded random finite algebras");
  finite_scan->add_option("-n", atoms, "atom count")->required();
  finite_scan->add_option("--samples", samples, "number of sampled algebras")->required();
  finite_scan->add_option("--seed", seed, "generator seed")->required();
  finite_scan->add_option("--denominator", denominator, "weight denominator (default 64)");
  finite_scan->add_option("--cap", cap, "atom enumeration cap");

  CLI::App* hsum =
      app.add_subcommand("hsum-cause", "Find a blockwise common cause in a horizontal sum");
  hsum->add_option("-k", blocks, "block count (default 2)");
  hsum->add_option("-x", x_text, "first element (0, 1 or B<i>:<event>)")->required();
  hsum->add_option("-y", y_text, "second element")->required();
  hsum->add_option("--mode", mode_text, "strict|lenient (default lenient)");
  hsum->add_flag("--json", json, "emit the certificate as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (cov->parsed()) return run_cov(a_text, b_text);
    if (cause->parsed()) return run_cause({a_text, b_text, mode_text, json});
    if (verify->parsed()) return run_verify(a_text, b_text, c_text, json);
    if (finite_check->parsed()) return run_finite_check(spec_path, cap);
    if (finite_scan->parsed())
      return run_finite_scan(atoms, samples, seed, denominator, cap);
    if (hsum->parsed())
      return run_hsum_cause(blocks, x_text, y_text, mode_text, json);
  } catch (const ccc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
