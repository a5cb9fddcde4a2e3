#include "hessfano/witness.hpp"

#include <algorithm>
#include <numeric>

#include "hessfano/error.hpp"

namespace hessfano {

namespace {

// Everything the four conditions need that depends on h only.
struct Checker {
  const HessFn &h;
  Perm wh;
  int wh_length;
  ParabolicBlocks J;
  std::vector<Block> fixed_blocks; // blocks on which h is strictly increasing
  std::vector<int> L;              // L[i] for 1 ≤ i ≤ n-1

  explicit Checker(const HessFn &hh)
  : h(hh), wh(hh.pivot()), wh_length(length(wh))
  {
    if (!h.is_connected())
      throw Error(ErrorKind::Disconnected, "witness conditions need a connected h");
    const Weight xi = anticanonical_weight(h);
    if (!is_dominant(xi))
      throw Error(ErrorKind::NotNef, "xi_h = (" + to_string(xi) + ") is not dominant for h = " +
                                         to_string(h));
    J = parabolic_blocks(xi);
    for (const Block &b : J.blocks()) {
      bool strict = true;
      for (int j = b.first; j < b.last; ++j)
        strict = strict && h(j) < h(j + 1);
      if (strict)
        fixed_blocks.push_back(b);
    }
    L.assign(static_cast<std::size_t>(h.n()), 0);
    for (int i = 1; i <= h.n() - 1; ++i)
      L[static_cast<std::size_t>(i)] = limit_L(h, i);
  }

  bool in_parabolic(const Perm &u) const
  {
    for (int i = 1; i <= u.size(); ++i) {
      const Block *b = J.block_of(i);
      if (b == nullptr ? u(i) != i : !b->contains(u(i)))
        return false;
    }
    return true;
  }

  WitnessReport check(const Perm &u) const
  {
    if (u.size() != h.n())
      throw Error(ErrorKind::SizeMismatch, "witness has size " + std::to_string(u.size()) +
                                               ", h has n = " + std::to_string(h.n()));
    WitnessReport report;
    report.u = u;
    const Perm uw = compose(u, wh);
    report.cond_i = length(uw) == length(u) + wh_length;
    report.cond_ii = same_coset_part(u, uw, J);
    report.cond_iii = true;
    for (const Block &b : fixed_blocks)
      for (int j = b.first; j <= b.last; ++j)
        report.cond_iii = report.cond_iii && u(j) == j;
    report.cond_iv = true;
    for (int i = 1; i <= h.n() - 1 && report.cond_iv; ++i)
      for (int j = i + 1; j < L[static_cast<std::size_t>(i)]; ++j)
        if (uw(i) >= uw(j)) {
          report.cond_iv = false;
          break;
        }
    report.in_parabolic = in_parabolic(u);
    return report;
  }
};

Perm simple_product_on_values(int n, int from, int count, const Perm &target)
{
  // s_{from+count-1} ∘ ⋯ ∘ s_{from} ∘ target
  Perm out = target;
  for (int j = from; j < from + count; ++j)
    out = compose(Perm::simple(n, j), out);
  return out;
}

Perm construct(const HessFn &h, std::vector<CaseRecord> &trace)
{
  const int n = h.n();
  if (n == 2 || h(1) == n) {
    trace.push_back({n, h.values(), CaseTag::Base, std::nullopt, Perm::identity(n)});
    return trace.back().u;
  }
  const Perm u_prime = construct(restrict_hessenberg(h), trace);
  const Perm u_bar = embed_shift(u_prime);
  const Weight xi = anticanonical_weight(h);

  if (xi[h(1)] != 0) {
    trace.push_back({n, h.values(), CaseTag::Case1, std::nullopt, u_bar});
    return u_bar;
  }
  Case2Data data = case2_data(h, u_bar);
  if (!data.M) {
    trace.push_back({n, h.values(), CaseTag::Case2a, std::move(data), u_bar});
    return u_bar;
  }
  Perm u = case2b_transform(h, u_bar, data);
  trace.push_back({n, h.values(), CaseTag::Case2b, std::move(data), u});
  return u;
}

} // namespace

const char *to_string(CaseTag tag)
{
  switch (tag) {
  case CaseTag::Base: return "base";
  case CaseTag::Case1: return "1";
  case CaseTag::Case2a: return "2-a";
  case CaseTag::Case2b: return "2-b";
  }
  return "?";
}

WitnessReport verify_conditions(const HessFn &h, const Perm &u) { return Checker(h).check(u); }

HessFn restrict_hessenberg(const HessFn &h)
{
  const int n = h.n();
  if (n == 2 || h(1) == n)
    throw Error(ErrorKind::NotRestrictable,
                "h' needs n >= 3 and h(1) < n, got h = " + to_string(h));
  std::vector<int> values(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    values[static_cast<std::size_t>(i - 1)] = h(i + 1) - 1;
  return HessFn::validate(values);
}

Perm embed_shift(const Perm &u_prime)
{
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(u_prime.size()) + 1);
  values.push_back(1);
  for (int v : u_prime.one_line())
    values.push_back(v + 1);
  return Perm(std::move(values));
}

Case2Data case2_data(const HessFn &h, const Perm &u_bar)
{
  const int n = h.n();
  if (u_bar.size() != n)
    throw Error(ErrorKind::SizeMismatch, "case2_data: u_bar has the wrong size");
  const int h1 = h(1);
  const Weight xi = anticanonical_weight(h);
  if (h1 >= n || xi[h1] != 0)
    throw Error(ErrorKind::NotCase2, "d_{h(1)} != 0 for h = " + to_string(h));
  const ParabolicBlocks J = parabolic_blocks(xi);
  const Block *block = J.block_of(h1);
  if (block == nullptr)
    throw Error(ErrorKind::InvariantViolation, "no block through h(1)");

  const Perm x = compose(u_bar, h.pivot());
  Case2Data data;
  data.a = h1 - block->first;
  data.b = block->last - h1 - 1;
  for (int k = 0; k <= data.a; ++k) {
    const int rk = x(h1 - k);
    data.r.push_back(rk);
    int count = 0;
    for (int q = 1; q <= data.b + 1; ++q)
      if (x(h1 + q) < rk)
        ++count;
    data.m.push_back(count);
  }
  for (int q = 1; q <= data.b + 1; ++q)
    if (x(h1 + q) < data.r[0])
      data.q.push_back(q);
  std::sort(data.q.begin(), data.q.end(), [&](int p, int s) { return x(h1 + p) < x(h1 + s); });
  for (int k = 0; k <= data.a; ++k) {
    const int next = k + 1 <= data.a ? data.m[static_cast<std::size_t>(k + 1)] : 0;
    data.delta.push_back(data.m[static_cast<std::size_t>(k)] - next);
    if (data.delta.back() >= 1)
      data.M = k;
  }
  return data;
}

Perm case2b_transform(const HessFn &h, const Perm &u_bar, const Case2Data &data)
{
  if (!data.M)
    throw Error(ErrorKind::NotCase2b, "case2b_transform requires M");
  const int n = h.n();
  Perm u = u_bar;
  for (int k = 0; k <= *data.M; ++k)
    u = simple_product_on_values(n, h(1) - k, data.m[static_cast<std::size_t>(k)], u);
  return u;
}

WitnessReport construct_witness(const HessFn &h)
{
  Checker checker(h); // throws Disconnected or NotNef before any recursion
  std::vector<CaseRecord> trace;
  const Perm u = construct(h, trace);
  WitnessReport report = checker.check(u);
  std::reverse(trace.begin(), trace.end());
  report.case_trace = std::move(trace);
  return report;
}

std::vector<Perm> brute_force_witness(const HessFn &h, bool require_iii_iv, std::uint64_t cap)
{
  const Checker checker(h);
  const auto &blocks = checker.J.blocks();

  std::uint64_t size = 1;
  for (const Block &b : blocks)
    for (int f = 2; f <= b.size(); ++f) {
      if (size > cap / static_cast<std::uint64_t>(f))
        throw Error(ErrorKind::SearchSpaceTooLarge, "|S_J| exceeds " + std::to_string(cap));
      size *= static_cast<std::uint64_t>(f);
    }

  std::vector<Perm> out;
  std::vector<int> values(static_cast<std::size_t>(h.n()));
  std::iota(values.begin(), values.end(), 1);
  // odometer over the blocks, last block fastest, which is lexicographic order
  while (true) {
    const Perm u(values);
    const WitnessReport r = checker.check(u);
    if (r.cond_i && r.cond_ii && (!require_iii_iv || (r.cond_iii && r.cond_iv)))
      out.push_back(u);
    std::size_t idx = blocks.size();
    while (idx > 0) {
      const Block &b = blocks[idx - 1];
      if (std::next_permutation(values.begin() + (b.first - 1), values.begin() + b.last))
        break;
      --idx; // wrapped back to increasing order; carry
    }
    if (idx == 0)
      break;
  }
  return out;
}

BignessCertificate bigness_certificate(const HessFn &h)
{
  const WitnessReport report = construct_witness(h);
  if (!report.all_conditions() || !report.in_parabolic)
    throw Error(ErrorKind::CertificateFailure,
                "constructed u = " + to_string(report.u) + " fails verification for " +
                    to_string(h));
  const ParabolicBlocks J = parabolic_blocks(anticanonical_weight(h));
  auto chain = p_bruhat_leq(report.u, compose(report.u, h.pivot()), J);
  if (!chain)
    throw Error(ErrorKind::CertificateFailure,
                "no P-Bruhat chain from u = " + to_string(report.u) + " for " + to_string(h));
  return {report.u, std::move(*chain)};
}

} // namespace hessfano
