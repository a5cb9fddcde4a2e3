// Runs the six acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "../checks.hpp"
#include "../golden.hpp"

using namespace hessfano;

namespace {

Perm pm(const char *text) { return parse_perm(text); }

std::string golden_example()
{
  checks::Failures f;
  const HessFn h = HessFn::validate(golden::h20);
  const HessFn hp = restrict_hessenberg(h);
  const Weight xi = anticanonical_weight(h), xip = anticanonical_weight(hp);
  if (xi.coeffs() != golden::xi20)
    f.add("(a) xi");
  if (hp.values() != golden::h19)
    f.add("(b) h'");
  if (xip.coeffs() != golden::xi19)
    f.add("(c) xi'");
  if (parabolic_blocks(xi).blocks() != std::vector<Block>{{7, 14}, {18, 20}} ||
      parabolic_blocks(xip).blocks() != std::vector<Block>{{6, 8}, {9, 13}, {17, 19}})
    f.add("(d) J");
  if (to_string(h.pivot()) != golden::wh20 || to_string(hp.pivot()) != golden::wh19)
    f.add("(e) w_h");
  const Perm ubar = embed_shift(pm(golden::u19));
  if (to_string(ubar) != golden::ubar20)
    f.add("(f) embed_shift");
  const Case2Data d = case2_data(h, ubar);
  if (d.m != std::vector<int>{2, 1, 0} || d.M != 1)
    f.add("(g) case2_data");
  if (to_string(case2b_transform(h, ubar, d)) != golden::u20)
    f.add("(h) case2b_transform");
  const WitnessReport r = verify_conditions(h, pm(golden::u20));
  const WitnessReport rp = verify_conditions(hp, pm(golden::u19));
  if (!r.all_conditions() || !rp.all_conditions())
    f.add("(i) conditions");
  return f.str();
}

std::string degree_criterion()
{
  checks::Failures f;
  const std::string pos = checks::degree_positive(6);
  if (!pos.empty())
    f.add("positivity: ", pos);
  const BigInt d233 = hessenberg_degree(HessFn::validate({2, 3, 3}));
  const BigInt o233 = oracle::chain_sum({1, 2, 3}, {2, 3, 1}, {1, 1}) +
                      oracle::chain_sum({1, 3, 2}, {3, 2, 1}, {1, 1});
  if (d233 != 6 || o233 != 6)
    f.add("(2,3,3) gave ", d233, " oracle ", o233);
  const BigInt d333 = hessenberg_degree(HessFn::validate({3, 3, 3}));
  const BigInt o333 = oracle::chain_sum({1, 2, 3}, {3, 2, 1}, {2, 2});
  if (d333 != 48 || o333 != 48)
    f.add("(3,3,3) gave ", d333, " oracle ", o333);
  const BigInt d22 = hessenberg_degree(HessFn::validate({2, 2}));
  if (d22 != 2)
    f.add("(2,2) gave ", d22);
  return f.str();
}

std::string property_suite()
{
  checks::Failures f;
  const std::vector<std::pair<const char *, std::function<std::string()>>> parts = {
      {"involution", [] { return checks::transpose_involution(10); }},
      {"two-path xi", [] { return checks::two_path_xi(9); }},
      {"d symmetry", [] { return checks::xi_transpose_symmetry(9); }},
      {"length = dim", [] { return checks::length_is_dimension(9); }},
      {"Catalan", [] { return checks::catalan_counts(10); }},
      {"Bruhat oracle", [] { return checks::bruhat_vs_closure(5); }},
      {"DP vs chains", [] { return checks::richardson_vs_chains(4); }},
      {"positivity vs P-Bruhat", [] { return checks::positivity_vs_p_bruhat(4); }},
      {"S_3 relation with J={1,2}", [] { return checks::s3_parabolic_relation(); }},
  };
  for (const auto &[name, run] : parts) {
    const std::string bad = run();
    if (!bad.empty())
      f.add(name, ": ", bad);
  }
  return f.str();
}

struct Criterion {
  const char *name;
  double limit_seconds;
  std::function<std::string()> run;
};

} // namespace

int main()
{
  const std::vector<Criterion> criteria = {
      {"golden n=20/19 example", 1, golden_example},
      {"strict dominance iff banded, 3 <= n <= 9", 10, [] { return checks::fano_iff_banded(3, 9); }},
      {"witness and certificate, nef n <= 8", 300,
       [] { return checks::witness_and_certificate(8); }},
      {"degree positivity, nef n <= 6", 600, degree_criterion},
      {"brute-force containment, nef n <= 6", 600,
       [] { return checks::witness_in_brute_force(6); }},
      {"property suite", 600, property_suite},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion &c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    std::string bad;
    try {
      bad = c.run();
    } catch (const std::exception &e) {
      bad = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (bad.empty() && secs >= c.limit_seconds)
      bad = "over time limit of " + std::to_string(c.limit_seconds) + " s";
    std::printf("%s criterion %zu: %s (%.3f s)%s%s\n", bad.empty() ? "PASS" : "FAIL", k + 1,
                c.name, secs, bad.empty() ? "" : ": ", bad.c_str());
    std::fflush(stdout);
    failed += bad.empty() ? 0 : 1;
  }
  return failed;
}
