#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hessfano/hessfn.hpp"

namespace hessfano {

/// An SL_n weight Σ d_i ϖ_i stored by its fundamental coordinates d_1..d_{n-1}.
class Weight {
public:
  Weight() = default;
  /// Throws LengthMismatch unless coeffs.size() == n-1.
  Weight(int n, std::vector<int> coeffs);

  static Weight zero(int n) { return Weight(n, std::vector<int>(static_cast<std::size_t>(n - 1))); }
  static Weight fundamental(int n, int i);

  int n() const noexcept { return n_; }
  /// d_i, 1 ≤ i ≤ n-1.
  int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const Weight &, const Weight &) = default;

private:
  int n_ = 0;
  std::vector<int> coeffs_;
};

Weight operator+(const Weight &a, const Weight &b);

/// Comma-separated d_i.
std::string to_string(const Weight &w);
/// Parses comma-separated d_i for an SL_n weight.
Weight parse_weight(int n, std::string_view text);

/// Σ c_i x_i written in fundamental coordinates: d_i = c_i - c_{i+1}.
Weight weight_from_x_basis(std::span<const int> c);

/// The positive root α_{i,j} = x_i - x_j.
Weight root_weight(int n, int i, int j);

/// d_i = h(i) - h(i+1) + 2 - h*(n+1-i) + h*(n-i).
Weight anticanonical_weight(const HessFn &h);

/// Σ_{1 ≤ i < j ≤ h(i)} α_{i,j}, accumulated in the x-basis. Used to
/// cross-check anticanonical_weight.
Weight anticanonical_weight_by_roots(const HessFn &h);

bool is_dominant(const Weight &w);
bool is_strictly_dominant(const Weight &w);

/// Verdicts read off ξ_h. `weak_fano` is reported equal to `nef`: nef
/// anti-canonical bundles of these varieties are always big, which the
/// degree computation in schubert.hpp corroborates numerically.
struct FanoVerdict {
  Weight xi;
  bool nef = false;
  bool fano = false;
  bool weak_fano = false;
  /// h is the banded h_k with 2k ≥ n-1; decided from the shape of h alone.
  bool fano_by_shape = false;
  std::optional<int> band;
};

/// Throws DisconnectedInput-style Error(Disconnected) for disconnected h.
FanoVerdict classify(const HessFn &h);

/// If h = h_k for some k, returns k.
std::optional<int> band_of(const HessFn &h);

/// A closed integer interval [first, last] ⊆ [n].
struct Block {
  int first = 0;
  int last = 0;

  int size() const noexcept { return last - first + 1; }
  bool contains(int i) const noexcept { return first <= i && i <= last; }
  friend bool operator==(const Block &, const Block &) = default;
};

/// The Young subgroup 𝔖_J = ∏ 𝔖_{J_i} given by disjoint intervals J_i.
class ParabolicBlocks {
public:
  ParabolicBlocks() = default;
  /// Blocks must be sorted, pairwise disjoint, of size ≥ 2 and inside [n];
  /// throws OutOfRange otherwise.
  ParabolicBlocks(int n, std::vector<Block> blocks);

  static ParabolicBlocks none(int n) { return ParabolicBlocks(n, {}); }

  int n() const noexcept { return n_; }
  const std::vector<Block> &blocks() const noexcept { return blocks_; }
  bool empty() const noexcept { return blocks_.empty(); }

  /// The block containing position i, if any.
  const Block *block_of(int i) const noexcept;
  /// True iff t_{a,b} ∈ 𝔖_J.
  bool same_block(int a, int b) const noexcept;

  friend bool operator==(const ParabolicBlocks &, const ParabolicBlocks &) = default;

private:
  int n_ = 0;
  std::vector<Block> blocks_;
};

/// Blocks {a, ..., b+1} for each maximal run [a, b] of zero coefficients.
ParabolicBlocks parabolic_blocks(const Weight &w);

/// "7-14 18-20"; empty string for no blocks.
std::string to_string(const ParabolicBlocks &blocks);

} // namespace hessfano
