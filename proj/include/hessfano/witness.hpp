#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hessfano/hessfn.hpp"
#include "hessfano/perm.hpp"
#include "hessfano/symgrp.hpp"
#include "hessfano/weightlat.hpp"

namespace hessfano {

/// Data of the Case 2 correction step, read off x = ū'∘w_h on the block
/// J_{h(1)} = J⁻ ⊔ J⁺ with J⁻ = [h(1)-a, h(1)] and J⁺ = [h(1)+1, h(1)+b+1].
struct Case2Data {
  int a = 0;
  int b = 0;
  std::vector<int> r;     // r_k = x(h(1)-k), 0 ≤ k ≤ a
  std::vector<int> m;     // m_k = #{q ∈ [1,b+1] : x(h(1)+q) < r_k}
  std::vector<int> q;     // the m_0 indices for k = 0, by increasing x(h(1)+q)
  std::vector<int> delta; // Δ_k = m_k - m_{k+1}, with m_{a+1} = 0
  std::optional<int> M;   // max{k : Δ_k ≥ 1}

  friend bool operator==(const Case2Data &, const Case2Data &) = default;
};

enum class CaseTag { Base, Case1, Case2a, Case2b };

const char *to_string(CaseTag tag);

struct CaseRecord {
  int n = 0;
  std::vector<int> h;
  CaseTag tag = CaseTag::Base;
  std::optional<Case2Data> data;
  Perm u; // the witness produced at this level
};

struct WitnessReport {
  Perm u;
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool cond_iv = false;
  bool in_parabolic = false; // u ∈ 𝔖_J
  std::vector<CaseRecord> case_trace; // outermost level first; empty from verify_conditions

  bool all_conditions() const noexcept { return cond_i && cond_ii && cond_iii && cond_iv; }
};

/// Checks conditions (i)-(iv) for u against w_h and J = J(ξ_h). Throws NotNef
/// when ξ_h is not dominant and SizeMismatch when u is not in 𝔖_n.
WitnessReport verify_conditions(const HessFn &h, const Perm &u);

/// h'(i) = h(i+1) - 1 on [n-1]. Throws NotRestrictable when n = 2 or h(1) = n.
HessFn restrict_hessenberg(const HessFn &h);

/// ū'(1) = 1 and ū'(i) = u'(i-1) + 1.
Perm embed_shift(const Perm &u_prime);

/// Throws NotCase2 unless d_{h(1)} = 0.
Case2Data case2_data(const HessFn &h, const Perm &u_bar);

/// v_M ∘ ⋯ ∘ v_0 ∘ ū' with v_k = s_{h(1)-k+m_k-1} ⋯ s_{h(1)-k}. Throws
/// NotCase2b when data.M is empty.
Perm case2b_transform(const HessFn &h, const Perm &u_bar, const Case2Data &data);

/// Inductive construction of u. Throws Disconnected or NotNef.
WitnessReport construct_witness(const HessFn &h);

inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

/// Every u ∈ 𝔖_J satisfying (i) and (ii), and (iii), (iv) when requested, in
/// lexicographic order. Throws SearchSpaceTooLarge when |𝔖_J| > cap.
std::vector<Perm> brute_force_witness(const HessFn &h, bool require_iii_iv,
                                      std::uint64_t cap = kDefaultSearchCap);

struct BignessCertificate {
  Perm u;
  BruhatChain chain; // u ≤_P u∘w_h for P = P(ξ_h)
};

/// Throws NotNef, or CertificateFailure when the construction does not yield
/// a verified witness with a P-Bruhat chain.
BignessCertificate bigness_certificate(const HessFn &h);

} // namespace hessfano
