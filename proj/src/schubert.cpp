#include "hessfano/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hessfano/error.hpp"
#include "hessfano/symgrp.hpp"

namespace hessfano {

namespace {

void require_dominant(const Weight &mu)
{
  if (!is_dominant(mu))
    throw Error(ErrorKind::NonDominantWeight, "weight (" + to_string(mu) + ") is not dominant");
}

} // namespace

int coroot_pairing(const Weight &mu, int a, int b)
{
  int c = 0;
  for (int i = a; i < b; ++i)
    c += mu[i];
  return c;
}

std::vector<ChevalleyTerm> chevalley_expand(const Perm &w, const Weight &mu)
{
  require_dominant(mu);
  if (mu.n() != w.size())
    throw Error(ErrorKind::SizeMismatch, "chevalley_expand: weight and permutation differ in n");
  std::vector<ChevalleyTerm> out;
  for (Cover &c : covers_up(w))
    out.push_back({std::move(c.perm), coroot_pairing(mu, c.a, c.b)});
  return out;
}

RichardsonSpec::RichardsonSpec(Perm v, Perm w) : v_(std::move(v)), w_(std::move(w))
{
  if (!bruhat_leq(v_, w_))
    throw Error(ErrorKind::NotComparable, to_string(v_) + " is not below " + to_string(w_));
}

BigInt richardson_degree(const RichardsonSpec &spec, const Weight &mu)
{
  require_dominant(mu);
  if (mu.n() != spec.w().size())
    throw Error(ErrorKind::SizeMismatch, "richardson_degree: weight and permutations differ in n");
  const Perm &top = spec.w();
  const int top_length = length(top);
  std::unordered_map<Perm, BigInt, PermHash> memo;

  // f(x) = weighted number of saturated chains from x up to top
  auto f = [&](auto &&self, const Perm &x, int len) -> BigInt {
    if (len == top_length)
      return x == top ? BigInt(1) : BigInt(0);
    if (auto it = memo.find(x); it != memo.end())
      return it->second;
    BigInt total = 0;
    for (const Cover &c : covers_up(x)) {
      const int coeff = coroot_pairing(mu, c.a, c.b);
      if (coeff == 0 || !bruhat_leq(c.perm, top))
        continue;
      total += coeff * self(self, c.perm, len + 1);
    }
    memo.emplace(x, total);
    return total;
  };
  return f(f, spec.v(), length(spec.v()));
}

std::vector<Perm> at_summands(const HessFn &h)
{
  const Perm &wh = h.pivot();
  const int wh_length = length(wh);
  std::vector<int> values(static_cast<std::size_t>(h.n()));
  std::iota(values.begin(), values.end(), 1);
  std::vector<Perm> out;
  do {
    Perm u(values);
    if (length(compose(u, wh)) == length(u) + wh_length)
      out.push_back(std::move(u));
  } while (std::next_permutation(values.begin(), values.end()));
  return out;
}

BigInt hessenberg_degree(const HessFn &h, const std::optional<Weight> &mu)
{
  if (!h.is_connected())
    throw Error(ErrorKind::Disconnected, "hessenberg_degree requires a connected h");
  const Weight weight = mu ? *mu : anticanonical_weight(h);
  require_dominant(weight);
  if (weight.n() != h.n())
    throw Error(ErrorKind::LengthMismatch, "weight rank does not match h");

  BigInt total = 0;
  for (const Perm &u : at_summands(h)) {
    Perm top = compose(u, h.pivot());
    if (!bruhat_leq(u, top))
      continue;
    total += richardson_degree(RichardsonSpec(u, std::move(top)), weight);
  }
  return total;
}

} // namespace hessfano
