#include "hessfano/weightlat.hpp"

#include <algorithm>
#include <charconv>

#include "hessfano/error.hpp"

namespace hessfano {

Weight::Weight(int n, std::vector<int> coeffs) : n_(n), coeffs_(std::move(coeffs))
{
  if (n < 1 || static_cast<int>(coeffs_.size()) != n - 1)
    throw Error(ErrorKind::LengthMismatch, "an SL_" + std::to_string(n) + " weight has " +
                                               std::to_string(n - 1) + " coefficients, got " +
                                               std::to_string(coeffs_.size()));
}

Weight Weight::fundamental(int n, int i)
{
  Weight w = zero(n);
  w.coeffs_.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

Weight operator+(const Weight &a, const Weight &b)
{
  if (a.n() != b.n())
    throw Error(ErrorKind::LengthMismatch, "adding weights of different rank");
  std::vector<int> sum(a.coeffs());
  for (std::size_t i = 0; i < sum.size(); ++i)
    sum[i] += b.coeffs()[i];
  return Weight(a.n(), std::move(sum));
}

std::string to_string(const Weight &w)
{
  std::string out;
  for (std::size_t i = 0; i < w.coeffs().size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(w.coeffs()[i]);
  }
  return out;
}

Weight parse_weight(int n, std::string_view text)
{
  std::vector<int> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw Error(ErrorKind::ParseError, "bad weight '" + std::string(text) + "'");
    coeffs.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw Error(ErrorKind::ParseError, "bad weight '" + std::string(text) + "'");
    ++pos;
  }
  return Weight(n, std::move(coeffs));
}

Weight weight_from_x_basis(std::span<const int> c)
{
  const int n = static_cast<int>(c.size());
  if (n < 2)
    throw Error(ErrorKind::LengthMismatch, "x-basis vector needs n >= 2 entries");
  std::vector<int> d(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    d[static_cast<std::size_t>(i - 1)] =
        c[static_cast<std::size_t>(i - 1)] - c[static_cast<std::size_t>(i)];
  return Weight(n, std::move(d));
}

Weight root_weight(int n, int i, int j)
{
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c.at(static_cast<std::size_t>(i - 1)) += 1;
  c.at(static_cast<std::size_t>(j - 1)) -= 1;
  return weight_from_x_basis(c);
}

Weight anticanonical_weight(const HessFn &h)
{
  const int n = h.n();
  std::vector<int> d(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    d[static_cast<std::size_t>(i - 1)] = h(i) - h(i + 1) + 2 - h.star(n + 1 - i) + h.star(n - i);
  return Weight(n, std::move(d));
}

Weight anticanonical_weight_by_roots(const HessFn &h)
{
  const int n = h.n();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= h(i); ++j) {
      c[static_cast<std::size_t>(i - 1)] += 1;
      c[static_cast<std::size_t>(j - 1)] -= 1;
    }
  return weight_from_x_basis(c);
}

bool is_dominant(const Weight &w)
{
  return std::all_of(w.coeffs().begin(), w.coeffs().end(), [](int d) { return d >= 0; });
}

bool is_strictly_dominant(const Weight &w)
{
  return std::all_of(w.coeffs().begin(), w.coeffs().end(), [](int d) { return d > 0; });
}

std::optional<int> band_of(const HessFn &h)
{
  const int n = h.n();
  const int k = h(1) - 1;
  if (k < 1 || k > n - 1)
    return std::nullopt;
  for (int i = 1; i <= n; ++i)
    if (h(i) != std::min(i + k, n))
      return std::nullopt;
  return k;
}

FanoVerdict classify(const HessFn &h)
{
  if (!h.is_connected())
    throw Error(ErrorKind::Disconnected, "classification requires a connected h, got " +
                                             to_string(h));
  FanoVerdict verdict;
  verdict.xi = anticanonical_weight(h);
  verdict.nef = is_dominant(verdict.xi);
  verdict.fano = is_strictly_dominant(verdict.xi);
  verdict.weak_fano = verdict.nef;
  verdict.band = band_of(h);
  verdict.fano_by_shape = verdict.band && 2 * *verdict.band >= h.n() - 1;
  return verdict;
}

ParabolicBlocks::ParabolicBlocks(int n, std::vector<Block> blocks)
: n_(n), blocks_(std::move(blocks))
{
  int prev_last = 0;
  for (const Block &b : blocks_) {
    if (b.first <= prev_last || b.size() < 2 || b.last > n)
      throw Error(ErrorKind::OutOfRange, "blocks must be sorted, disjoint, of size >= 2, in [n]");
    prev_last = b.last;
  }
}

const Block *ParabolicBlocks::block_of(int i) const noexcept
{
  for (const Block &b : blocks_)
    if (b.contains(i))
      return &b;
  return nullptr;
}

bool ParabolicBlocks::same_block(int a, int b) const noexcept
{
  const Block *block = block_of(a);
  return block != nullptr && block->contains(b);
}

ParabolicBlocks parabolic_blocks(const Weight &w)
{
  std::vector<Block> blocks;
  const int n = w.n();
  int i = 1;
  while (i <= n - 1) {
    if (w[i] != 0) {
      ++i;
      continue;
    }
    int end = i;
    while (end + 1 <= n - 1 && w[end + 1] == 0)
      ++end;
    blocks.push_back({i, end + 1});
    i = end + 1;
  }
  return ParabolicBlocks(n, std::move(blocks));
}

std::string to_string(const ParabolicBlocks &blocks)
{
  std::string out;
  for (const Block &b : blocks.blocks()) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(b.first) + "-" + std::to_string(b.last);
  }
  return out;
}

} // namespace hessfano
