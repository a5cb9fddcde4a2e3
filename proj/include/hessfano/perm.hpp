#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hessfano {

/// A permutation of [n] in one-line notation. All indexing is 1-based:
/// `w(i)` is the value at position i.
class Perm {
public:
  Perm() = default;

  /// Throws Error(ParseError) unless `one_line` is a bijection of [n].
  explicit Perm(std::vector<int> one_line);

  static Perm identity(int n);
  static Perm longest(int n);
  /// Simple transposition s_i = t_{i,i+1}.
  static Perm simple(int n, int i);
  static Perm transposition(int n, int a, int b);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int> &one_line() const noexcept { return one_line_; }

  Perm inverse() const;

  /// Right multiplication by t_{a,b}: swaps the values at positions a and b.
  Perm swap_positions(int a, int b) const;

  bool is_identity() const noexcept;

  // lexicographic on the one-line notation
  friend auto operator<=>(const Perm &, const Perm &) = default;
  friend bool operator==(const Perm &, const Perm &) = default;

private:
  struct Unchecked {};
  Perm(std::vector<int> one_line, Unchecked) : one_line_(std::move(one_line)) {}

  friend Perm compose(const Perm &u, const Perm &w);

  std::vector<int> one_line_;
};

/// (u∘w)(i) = u(w(i)). Throws Error(SizeMismatch).
Perm compose(const Perm &u, const Perm &w);

inline Perm operator*(const Perm &u, const Perm &w) { return compose(u, w); }

/// Inversion count.
int length(const Perm &w);

/// Space-separated one-line notation, e.g. "3 4 2 5 1".
std::string to_string(const Perm &w);

/// Inverse of to_string; accepts any whitespace between entries.
Perm parse_perm(std::string_view text);

struct PermHash {
  std::size_t operator()(const Perm &w) const noexcept;
};

} // namespace hessfano
