#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hessfano/perm.hpp"
#include "hessfano/weightlat.hpp"

namespace hessfano {

/// Bruhat order by the sorted-prefix dominance criterion. Throws SizeMismatch.
bool bruhat_leq(const Perm &u, const Perm &w);

struct Cover {
  Perm perm;
  int a = 0;
  int b = 0;
};

/// All w·t_{a,b} covering w, ordered by (a, b).
std::vector<Cover> covers_up(const Perm &w);

struct CosetFactorization {
  Perm min_rep;   // w^J
  Perm parabolic; // w_J
};

/// w = w^J ∘ w_J with w^J increasing on every block.
CosetFactorization coset_factorize(const Perm &w, const ParabolicBlocks &J);

/// u_J = w_J, i.e. u and w induce the same relative order on every block.
bool same_coset_part(const Perm &u, const Perm &w, const ParabolicBlocks &J);

/// π_J(u) ≤ π_J(w) in the Bruhat order on 𝔖_n / 𝔖_J.
bool coset_leq(const Perm &u, const Perm &w, const ParabolicBlocks &J);

/// Whether moving from w to w·t_{a,b} changes the coset w𝔖_J.
inline bool changes_coset(int a, int b, const ParabolicBlocks &J) { return !J.same_block(a, b); }

struct BruhatChain {
  std::vector<Perm> elements;
  std::vector<std::pair<int, int>> labels; // labels[k] takes elements[k] to elements[k+1]

  int length() const noexcept { return static_cast<int>(labels.size()); }
};

/// A chain v = u_0 ⋖ u_1 ⋖ ⋯ ⋖ u_k = w whose projections to 𝔖_n/𝔖_J strictly
/// increase, or nullopt. The chain returned is the lexicographically least by
/// cover labels.
std::optional<BruhatChain> p_bruhat_leq(const Perm &v, const Perm &w, const ParabolicBlocks &J);

} // namespace hessfano
