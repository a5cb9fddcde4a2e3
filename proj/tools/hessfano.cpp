#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hessfano/error.hpp"
#include "hessfano/harness.hpp"
#include "hessfano/hessfn.hpp"
#include "hessfano/schubert.hpp"
#include "hessfano/symgrp.hpp"
#include "hessfano/weightlat.hpp"
#include "hessfano/witness.hpp"

using namespace hessfano;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;

int enumeration_cap()
{
  const char *env = std::getenv("HESS_N_CAP");
  if (env == nullptr || *env == '\0')
    return kDefaultEnumerationCap;
  try {
    return std::stoi(env);
  } catch (const std::exception &) {
    throw Error(ErrorKind::ParseError, std::string("HESS_N_CAP is not an integer: ") + env);
  }
}

void print_trace(const WitnessReport &report)
{
  int depth = 0;
  for (const CaseRecord &rec : report.case_trace) {
    const std::string indent(static_cast<std::size_t>(2 * depth), ' ');
    std::cout << indent << "n=" << rec.n << " h=";
    for (std::size_t i = 0; i < rec.h.size(); ++i)
      std::cout << (i ? "," : "") << rec.h[i];
    std::cout << " case " << to_string(rec.tag) << " u=" << to_string(rec.u) << '\n';
    if (rec.data) {
      const Case2Data &d = *rec.data;
      auto seq = [](const std::vector<int> &v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
          s += (i ? " " : "") + std::to_string(v[i]);
        return s;
      };
      std::cout << indent << "  a=" << d.a << " b=" << d.b << " r=(" << seq(d.r) << ") m=("
                << seq(d.m) << ") q=(" << seq(d.q) << ") M="
                << (d.M ? std::to_string(*d.M) : "none") << '\n';
    }
    ++depth;
  }
}

void print_conditions(const WitnessReport &r)
{
  std::cout << "conditions: (i) " << r.cond_i << " (ii) " << r.cond_ii << " (iii) " << r.cond_iii
            << " (iv) " << r.cond_iv << " in S_J " << r.in_parabolic << '\n';
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Fano and weak Fano tests for regular semisimple Hessenberg varieties"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  std::string h_text;
  std::string mu_text;
  std::string format_name = "text";
  int n = 0;
  bool with_degree = false;
  bool verbose = false;

  auto *classify_cmd = app.add_subcommand("classify", "classify one Hessenberg function");
  classify_cmd->add_option("--h", h_text, "comma-separated h, e.g. 3,3,4,4")->required();
  classify_cmd->add_flag("--degree", with_degree, "compute the anti-canonical degree");
  classify_cmd->add_option("--format", format_name, "json, csv or text");
  classify_cmd->add_flag("--verbose", verbose, "print the witness case trace");

  auto *survey_cmd = app.add_subcommand("survey", "classify every connected h on [n]");
  survey_cmd->add_option("--n", n, "size")->required();
  survey_cmd->add_flag("--degree", with_degree, "compute anti-canonical degrees");
  survey_cmd->add_option("--format", format_name, "json, csv or text");

  auto *witness_cmd = app.add_subcommand("witness", "construct and certify the witness u");
  witness_cmd->add_option("--h", h_text, "comma-separated h")->required();

  auto *degree_cmd = app.add_subcommand("degree", "degree of Hess(S,h) under L_mu");
  degree_cmd->add_option("--h", h_text, "comma-separated h")->required();
  degree_cmd->add_option("--mu", mu_text, "comma-separated d_i; defaults to xi_h");

  auto *render_cmd = app.add_subcommand("render", "print the staircase diagram of h");
  render_cmd->add_option("--h", h_text, "comma-separated h")->required();

  auto *transpose_cmd = app.add_subcommand("transpose", "print h*");
  transpose_cmd->add_option("--h", h_text, "comma-separated h")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*classify_cmd) {
      const HessFn h = parse_hessfn(h_text);
      const Format format = parse_format(format_name);
      const ClassReport report = classify_one(h, with_degree);
      std::cout << export_reports({report}, format);
      if (verbose && report.nef)
        print_trace(construct_witness(h));
    } else if (*survey_cmd) {
      const Format format = parse_format(format_name);
      const Survey s = survey(n, with_degree, enumeration_cap());
      std::cout << export_reports(s.reports, format);
      if (format == Format::Text)
        std::cout << "total " << s.summary.total << "  nef " << s.summary.nef << "  fano "
                  << s.summary.fano << '\n';
    } else if (*witness_cmd) {
      const HessFn h = parse_hessfn(h_text);
      const WitnessReport report = construct_witness(h);
      std::cout << "u = " << to_string(report.u) << '\n';
      print_trace(report);
      print_conditions(report);
      const BignessCertificate cert = bigness_certificate(h);
      std::cout << "P-Bruhat chain of length " << cert.chain.length() << '\n';
      for (std::size_t k = 0; k < cert.chain.elements.size(); ++k) {
        std::cout << "  " << to_string(cert.chain.elements[k]);
        if (k < cert.chain.labels.size())
          std::cout << "  -- t(" << cert.chain.labels[k].first << ","
                    << cert.chain.labels[k].second << ")";
        std::cout << '\n';
      }
    } else if (*degree_cmd) {
      const HessFn h = parse_hessfn(h_text);
      std::optional<Weight> mu;
      if (!mu_text.empty())
        mu = parse_weight(h.n(), mu_text);
      std::cout << hessenberg_degree(h, mu).str() << '\n';
    } else if (*render_cmd) {
      std::cout << render_staircase(parse_hessfn(h_text, Connectivity::Allowed));
    } else if (*transpose_cmd) {
      std::cout << to_string(transpose(parse_hessfn(h_text, Connectivity::Allowed))) << '\n';
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_internal(e.kind()) ? kExitInternal : kExitInvalid;
  }
  return 0;
}
