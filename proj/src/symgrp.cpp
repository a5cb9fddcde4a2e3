#include "hessfano/symgrp.hpp"

#include <algorithm>
#include <unordered_set>

#include "hessfano/error.hpp"

namespace hessfano {

namespace {

void require_same_size(const Perm &u, const Perm &w, const char *what)
{
  if (u.size() != w.size())
    throw Error(ErrorKind::SizeMismatch, std::string(what) + ": permutations of different size");
}

void require_blocks(const Perm &w, const ParabolicBlocks &J, const char *what)
{
  if (!J.empty() && J.n() != w.size())
    throw Error(ErrorKind::SizeMismatch, std::string(what) + ": blocks and permutation differ in n");
}

// ℓ(w_J): inversions inside the blocks
int parabolic_length(const Perm &w, const ParabolicBlocks &J)
{
  int inv = 0;
  for (const Block &b : J.blocks())
    for (int i = b.first; i <= b.last; ++i)
      for (int j = i + 1; j <= b.last; ++j)
        if (w(i) > w(j))
          ++inv;
  return inv;
}

} // namespace

bool bruhat_leq(const Perm &u, const Perm &w)
{
  require_same_size(u, w, "bruhat_leq");
  const int n = u.size();
  // above_u[k] = #{j <= i : u(j) >= k}; sorted-prefix dominance is
  // above_u[k] <= above_w[k] for every prefix i and threshold k
  std::vector<int> above_u(static_cast<std::size_t>(n) + 2, 0);
  std::vector<int> above_w(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i < n; ++i) {
    for (int k = 1; k <= u(i); ++k)
      ++above_u[static_cast<std::size_t>(k)];
    for (int k = 1; k <= w(i); ++k)
      ++above_w[static_cast<std::size_t>(k)];
    for (int k = 1; k <= n; ++k)
      if (above_u[static_cast<std::size_t>(k)] > above_w[static_cast<std::size_t>(k)])
        return false;
  }
  return true;
}

std::vector<Cover> covers_up(const Perm &w)
{
  std::vector<Cover> out;
  const int n = w.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (w(a) > w(b))
        continue;
      bool blocked = false;
      for (int k = a + 1; k < b && !blocked; ++k)
        blocked = w(a) < w(k) && w(k) < w(b);
      if (!blocked)
        out.push_back({w.swap_positions(a, b), a, b});
    }
  return out;
}

CosetFactorization coset_factorize(const Perm &w, const ParabolicBlocks &J)
{
  require_blocks(w, J, "coset_factorize");
  auto rep = w.one_line();
  for (const Block &b : J.blocks())
    std::sort(rep.begin() + (b.first - 1), rep.begin() + b.last);
  Perm min_rep(std::move(rep));
  Perm parabolic = compose(min_rep.inverse(), w);
  return {std::move(min_rep), std::move(parabolic)};
}

bool same_coset_part(const Perm &u, const Perm &w, const ParabolicBlocks &J)
{
  require_same_size(u, w, "same_coset_part");
  require_blocks(u, J, "same_coset_part");
  for (const Block &b : J.blocks())
    for (int j1 = b.first; j1 <= b.last; ++j1)
      for (int j2 = j1 + 1; j2 <= b.last; ++j2)
        if ((u(j1) < u(j2)) != (w(j1) < w(j2)))
          return false;
  return true;
}

bool coset_leq(const Perm &u, const Perm &w, const ParabolicBlocks &J)
{
  require_same_size(u, w, "coset_leq");
  return bruhat_leq(coset_factorize(u, J).min_rep, coset_factorize(w, J).min_rep);
}

std::optional<BruhatChain> p_bruhat_leq(const Perm &v, const Perm &w, const ParabolicBlocks &J)
{
  require_same_size(v, w, "p_bruhat_leq");
  require_blocks(v, J, "p_bruhat_leq");
  if (!bruhat_leq(v, w))
    return std::nullopt;

  const int target_length = length(w);
  // Each step raises ℓ(x^J) by at least one, so ℓ(x_J) never increases along
  // a chain; states with ℓ(x_J) < ℓ(w_J) cannot reach w.
  const int floor_J = parabolic_length(w, J);
  if (parabolic_length(v, J) < floor_J)
    return std::nullopt;
  BruhatChain chain;
  chain.elements.push_back(v);
  std::unordered_set<Perm, PermHash> dead;

  // depth-first in label order, so the first chain found is lexicographically least
  auto search = [&](auto &&self, Perm x, int len) -> bool {
    if (len == target_length)
      return x == w;
    for (Cover &c : covers_up(x)) {
      if (!changes_coset(c.a, c.b, J) || parabolic_length(c.perm, J) < floor_J ||
          dead.count(c.perm) || !bruhat_leq(c.perm, w))
        continue;
      chain.elements.push_back(c.perm);
      chain.labels.emplace_back(c.a, c.b);
      if (self(self, chain.elements.back(), len + 1))
        return true;
      chain.elements.pop_back();
      chain.labels.pop_back();
      dead.insert(std::move(c.perm));
    }
    return false;
  };
  if (!search(search, v, length(v)))
    return std::nullopt;
  return chain;
}

} // namespace hessfano
