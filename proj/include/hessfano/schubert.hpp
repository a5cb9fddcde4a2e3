#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hessfano/hessfn.hpp"
#include "hessfano/perm.hpp"
#include "hessfano/weightlat.hpp"

namespace hessfano {

using BigInt = boost::multiprecision::cpp_int;

/// ⟨μ, α_{a,b}^∨⟩ = d_a + ⋯ + d_{b-1}.
int coroot_pairing(const Weight &mu, int a, int b);

struct ChevalleyTerm {
  Perm perm;
  int coeff = 0;
};

/// The covers w·t_{a,b} of w with coefficient ⟨μ, α_{a,b}^∨⟩, zero terms
/// included, ordered by (a, b). Throws NonDominantWeight.
std::vector<ChevalleyTerm> chevalley_expand(const Perm &w, const Weight &mu);

/// The Richardson variety X_w^v; requires v ≤ w.
class RichardsonSpec {
public:
  /// Throws SizeMismatch or NotComparable.
  RichardsonSpec(Perm v, Perm w);

  const Perm &v() const noexcept { return v_; }
  const Perm &w() const noexcept { return w_; }
  int dimension() const { return length(w_) - length(v_); }

private:
  Perm v_;
  Perm w_;
};

/// ∫_{X_w^v} c_1(L_μ)^{dim}: weighted count of saturated chains from v to w.
/// Throws NonDominantWeight or SizeMismatch.
BigInt richardson_degree(const RichardsonSpec &spec, const Weight &mu);

/// Every u with ℓ(u) + ℓ(w_h) = ℓ(u∘w_h), in lexicographic order.
std::vector<Perm> at_summands(const HessFn &h);

/// ∫_{Hess(S,h)} c_1(L_μ)^{dim}. μ defaults to ξ_h. Throws Disconnected or
/// NonDominantWeight.
BigInt hessenberg_degree(const HessFn &h, const std::optional<Weight> &mu = std::nullopt);

} // namespace hessfano
