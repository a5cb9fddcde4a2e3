#include "hessfano/perm.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "hessfano/error.hpp"

namespace hessfano {

Perm::Perm(std::vector<int> one_line) : one_line_(std::move(one_line))
{
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::ParseError, "not a permutation of [" + std::to_string(n) + "]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::identity(int n)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = i + 1;
  return Perm(std::move(v), Unchecked{});
}

Perm Perm::longest(int n)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<std::size_t>(i)] = n - i;
  return Perm(std::move(v), Unchecked{});
}

Perm Perm::simple(int n, int i) { return transposition(n, i, i + 1); }

Perm Perm::transposition(int n, int a, int b)
{
  if (a < 1 || b < 1 || a > n || b > n)
    throw Error(ErrorKind::IndexOutOfRange, "transposition outside [n]");
  return identity(n).swap_positions(a, b);
}

Perm Perm::inverse() const
{
  std::vector<int> inv(one_line_.size());
  for (int i = 1; i <= size(); ++i)
    inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm(std::move(inv), Unchecked{});
}

Perm Perm::swap_positions(int a, int b) const
{
  auto v = one_line_;
  std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
  return Perm(std::move(v), Unchecked{});
}

bool Perm::is_identity() const noexcept
{
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i)
      return false;
  return true;
}

Perm compose(const Perm &u, const Perm &w)
{
  if (u.size() != w.size())
    throw Error(ErrorKind::SizeMismatch, "compose: permutations of different size");
  std::vector<int> v(static_cast<std::size_t>(w.size()));
  for (int i = 1; i <= w.size(); ++i)
    v[static_cast<std::size_t>(i - 1)] = u(w(i));
  return Perm(std::move(v), Perm::Unchecked{});
}

int length(const Perm &w)
{
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j))
        ++inv;
  return inv;
}

std::string to_string(const Perm &w)
{
  std::string out;
  for (int i = 1; i <= w.size(); ++i) {
    if (i > 1)
      out += ' ';
    out += std::to_string(w(i));
  }
  return out;
}

Perm parse_perm(std::string_view text)
{
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == text.size())
      break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw Error(ErrorKind::ParseError, "bad permutation entry in '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    values.push_back(value);
  }
  if (values.empty())
    throw Error(ErrorKind::ParseError, "empty permutation");
  return Perm(std::move(values));
}

std::size_t PermHash::operator()(const Perm &w) const noexcept
{
  // FNV-1a over the one-line entries
  std::size_t hash = 1469598103934665603ULL;
  for (int v : w.one_line()) {
    hash ^= static_cast<std::size_t>(v);
    hash *= 1099511628211ULL;
  }
  return hash;
}

} // namespace hessfano
