#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hessfano/perm.hpp"

namespace hessfano {

namespace detail {
struct PivotCache;
}

enum class Connectivity { Required, Allowed };

/// A validated Hessenberg function h:[n]→[n]. Immutable; `h(i)` is 1-indexed.
///
/// The transpose values are computed on construction. The pivot permutation
/// w_h is computed on first use and shared between copies; first access is
/// thread-safe.
class HessFn {
public:
  /// Throws Error with kind TooShort, OutOfRange, NotIncreasing or
  /// Disconnected (the latter only when connectivity is Required).
  static HessFn validate(std::span<const int> values,
                         Connectivity connectivity = Connectivity::Required);
  static HessFn validate(std::initializer_list<int> values,
                         Connectivity connectivity = Connectivity::Required)
  {
    return validate(std::span<const int>(values.begin(), values.size()), connectivity);
  }

  int n() const noexcept { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &values() const noexcept { return values_; }

  /// h*(i), 1-indexed.
  int star(int i) const { return star_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &star_values() const noexcept { return star_; }

  /// h(i) ≥ i+1 for all i < n.
  bool is_connected() const noexcept;

  /// Cached w_h.
  const Perm &pivot() const;

  friend bool operator==(const HessFn &a, const HessFn &b) { return a.values_ == b.values_; }
  friend auto operator<=>(const HessFn &a, const HessFn &b) { return a.values_ <=> b.values_; }

private:
  HessFn(std::vector<int> values, std::vector<int> star);

  std::vector<int> values_;
  std::vector<int> star_;
  std::shared_ptr<detail::PivotCache> pivot_cache_;
};

/// Parses "3,4,4,5,5".
HessFn parse_hessfn(std::string_view text, Connectivity connectivity = Connectivity::Required);
std::string to_string(const HessFn &h);

/// h*(i) = #{k : n+1-i ≤ h(k)}.
HessFn transpose(const HessFn &h);

/// The k-banded function h_k(i) = min(i+k, n); 1 ≤ k ≤ n-1, else BadBand.
HessFn banded(int n, int k);

/// Σ (h(i) - i).
int dimension(const HessFn &h);

inline constexpr int kDefaultEnumerationCap = 12;

/// All Hessenberg functions on [n] in lexicographic order. Connected only
/// unless `allow_disconnected`. Throws CapExceeded when n > cap and
/// TooShort when n < 2.
std::vector<HessFn> enumerate(int n, bool allow_disconnected = false,
                              int cap = kDefaultEnumerationCap);

/// n×n grid, row i column j is '#' iff i ≤ h(j), '.' otherwise. One line per
/// row, each terminated by '\n'.
std::string render_staircase(const HessFn &h);

/// Inverse of render_staircase. Columns must be filled contiguously from the top.
HessFn parse_staircase(std::string_view text,
                       Connectivity connectivity = Connectivity::Required);

/// w_h(1) = h(1); w_h(i) is the (n+1-h(i))-th largest unused value.
/// Always recomputes; HessFn::pivot() caches the result.
Perm pivot_permutation(const HessFn &h);

// The remaining operators are used by the witness construction.

/// D(i) = n - h*(n+1-i), 1 ≤ i ≤ n.
int distance_D(const HessFn &h, int i);

/// h(i) = h(i-1), 2 ≤ i ≤ n.
bool is_stable_at(const HessFn &h, int i);

/// i^{(+)} for 1 ≤ i ≤ n-1: i itself when the first repeat h(j+1)=h(j) at or
/// after i comes before the first jump h(j+1)=h(j)+2, and w_h^{-1}(h(î)+1)
/// otherwise, î being the first jump.
int plus_step(const HessFn &h, int i);

/// i^{(+∞)}: plus_step iterated to its fixed point (at most n rounds).
int plus_closure(const HessFn &h, int i);

/// L_i = min{j ≥ i^{(+∞)} : h(j) = h(j+1)} + 1, 1 ≤ i ≤ n-1.
int limit_L(const HessFn &h, int i);

} // namespace hessfano
