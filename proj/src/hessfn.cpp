#include "hessfano/hessfn.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <optional>

#include "hessfano/error.hpp"

namespace hessfano {

namespace detail {
struct PivotCache {
  std::once_flag once;
  std::optional<Perm> value;
};
} // namespace detail

namespace {

std::vector<int> transpose_values(const std::vector<int> &values)
{
  const int n = static_cast<int>(values.size());
  std::vector<int> star(values.size());
  for (int i = 1; i <= n; ++i) {
    const int threshold = n + 1 - i;
    star[static_cast<std::size_t>(i - 1)] = static_cast<int>(
        std::count_if(values.begin(), values.end(), [&](int v) { return v >= threshold; }));
  }
  return star;
}

void require_index(const HessFn &h, int i, int lo, int hi, const char *what)
{
  if (i < lo || i > hi)
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + ": index " + std::to_string(i) +
                                                " outside [" + std::to_string(lo) + ", " +
                                                std::to_string(hi) + "] for n=" +
                                                std::to_string(h.n()));
}

} // namespace

HessFn::HessFn(std::vector<int> values, std::vector<int> star)
: values_(std::move(values)), star_(std::move(star)),
  pivot_cache_(std::make_shared<detail::PivotCache>())
{}

HessFn HessFn::validate(std::span<const int> values, Connectivity connectivity)
{
  const int n = static_cast<int>(values.size());
  if (n < 2)
    throw Error(ErrorKind::TooShort, "a Hessenberg function needs n >= 2");
  for (int i = 1; i <= n; ++i) {
    const int v = values[static_cast<std::size_t>(i - 1)];
    if (v < i || v > n)
      throw Error(ErrorKind::OutOfRange, "h(" + std::to_string(i) + ")=" + std::to_string(v) +
                                             " must lie in [" + std::to_string(i) + ", " +
                                             std::to_string(n) + "]");
  }
  for (int i = 1; i < n; ++i)
    if (values[static_cast<std::size_t>(i - 1)] > values[static_cast<std::size_t>(i)])
      throw Error(ErrorKind::NotIncreasing,
                  "h(" + std::to_string(i) + ") > h(" + std::to_string(i + 1) + ")");
  if (connectivity == Connectivity::Required) {
    for (int i = 1; i < n; ++i)
      if (values[static_cast<std::size_t>(i - 1)] == i)
        throw Error(ErrorKind::Disconnected, "h(" + std::to_string(i) + ")=" + std::to_string(i));
  }
  std::vector<int> owned(values.begin(), values.end());
  auto star = transpose_values(owned);
  return HessFn(std::move(owned), std::move(star));
}

bool HessFn::is_connected() const noexcept
{
  for (int i = 1; i < n(); ++i)
    if ((*this)(i) < i + 1)
      return false;
  return true;
}

const Perm &HessFn::pivot() const
{
  std::call_once(pivot_cache_->once, [this] { pivot_cache_->value = pivot_permutation(*this); });
  return *pivot_cache_->value;
}

HessFn parse_hessfn(std::string_view text, Connectivity connectivity)
{
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw Error(ErrorKind::ParseError, "expected comma-separated integers, got '" +
                                             std::string(text) + "'");
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
    if (pos == text.size())
      break;
    if (text[pos] != ',')
      throw Error(ErrorKind::ParseError, "unexpected character in '" + std::string(text) + "'");
    ++pos;
  }
  return HessFn::validate(values, connectivity);
}

std::string to_string(const HessFn &h)
{
  std::string out;
  for (int i = 1; i <= h.n(); ++i) {
    if (i > 1)
      out += ',';
    out += std::to_string(h(i));
  }
  return out;
}

HessFn transpose(const HessFn &h)
{
  return HessFn::validate(h.star_values(),
                          h.is_connected() ? Connectivity::Required : Connectivity::Allowed);
}

HessFn banded(int n, int k)
{
  if (n < 2 || k < 1 || k > n - 1)
    throw Error(ErrorKind::BadBand, "band k=" + std::to_string(k) + " requires 1 <= k <= n-1");
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    values[static_cast<std::size_t>(i - 1)] = std::min(i + k, n);
  return HessFn::validate(values);
}

int dimension(const HessFn &h)
{
  int dim = 0;
  for (int i = 1; i <= h.n(); ++i)
    dim += h(i) - i;
  return dim;
}

std::vector<HessFn> enumerate(int n, bool allow_disconnected, int cap)
{
  if (n < 2)
    throw Error(ErrorKind::TooShort, "enumerate needs n >= 2");
  if (n > cap)
    throw Error(ErrorKind::CapExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));

  const Connectivity conn = allow_disconnected ? Connectivity::Allowed : Connectivity::Required;
  std::vector<HessFn> out;
  std::vector<int> values(static_cast<std::size_t>(n));

  // depth-first in lexicographic order
  auto lower = [&](int i) {
    int lo = allow_disconnected || i == n ? i : i + 1;
    if (i > 1)
      lo = std::max(lo, values[static_cast<std::size_t>(i - 2)]);
    return lo;
  };
  auto rec = [&](auto &&self, int i) -> void {
    if (i > n) {
      out.push_back(HessFn::validate(values, conn));
      return;
    }
    for (int v = lower(i); v <= n; ++v) {
      values[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

std::string render_staircase(const HessFn &h)
{
  const int n = h.n();
  std::string out;
  out.reserve(static_cast<std::size_t>(n * (n + 1)));
  for (int row = 1; row <= n; ++row) {
    for (int col = 1; col <= n; ++col)
      out += row <= h(col) ? '#' : '.';
    out += '\n';
  }
  return out;
}

HessFn parse_staircase(std::string_view text, Connectivity connectivity)
{
  std::vector<std::string_view> rows;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    rows.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  const std::size_t n = rows.size();
  if (n == 0)
    throw Error(ErrorKind::ParseError, "empty staircase");
  std::vector<int> values(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw Error(ErrorKind::ParseError, "staircase is not square");
    for (std::size_t c = 0; c < n; ++c) {
      const char ch = rows[r][c];
      if (ch == '#') {
        if (values[c] != static_cast<int>(r))
          throw Error(ErrorKind::ParseError, "column " + std::to_string(c + 1) + " has a gap");
        values[c] = static_cast<int>(r) + 1;
      } else if (ch != '.') {
        throw Error(ErrorKind::ParseError, std::string("unexpected character '") + ch + "'");
      }
    }
  }
  return HessFn::validate(values, connectivity);
}

Perm pivot_permutation(const HessFn &h)
{
  const int n = h.n();
  // remaining values kept in decreasing order
  std::vector<int> remaining(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    remaining[static_cast<std::size_t>(v)] = n - v;

  std::vector<int> one_line;
  one_line.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    // w_h(1) = h(1) is the (n+1-h(1))-th largest of [n], so one rule covers all i
    const auto rank = static_cast<std::size_t>(n - h(i));
    one_line.push_back(remaining[rank]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(rank));
  }
  return Perm(std::move(one_line));
}

int distance_D(const HessFn &h, int i)
{
  require_index(h, i, 1, h.n(), "distance_D");
  return h.n() - h.star(h.n() + 1 - i);
}

bool is_stable_at(const HessFn &h, int i)
{
  require_index(h, i, 2, h.n(), "is_stable_at");
  return h(i) == h(i - 1);
}

int plus_step(const HessFn &h, int i)
{
  require_index(h, i, 1, h.n() - 1, "plus_step");
  const int n = h.n();
  int first_repeat = 0;
  int first_jump = 0;
  for (int j = i; j <= n - 1; ++j) {
    if (first_repeat == 0 && h(j + 1) == h(j))
      first_repeat = j;
    if (first_jump == 0 && h(j + 1) == h(j) + 2)
      first_jump = j;
  }
  if (first_jump == 0 || (first_repeat != 0 && first_repeat < first_jump))
    return i;
  const Perm inv = h.pivot().inverse();
  return inv(h(first_jump) + 1);
}

int plus_closure(const HessFn &h, int i)
{
  int current = i;
  for (int round = 0; round <= h.n(); ++round) {
    const int next = plus_step(h, current);
    if (next == current)
      return current;
    current = next;
  }
  throw Error(ErrorKind::NonTermination,
              "plus_closure did not stabilise for " + to_string(h) + " at i=" + std::to_string(i));
}

int limit_L(const HessFn &h, int i)
{
  require_index(h, i, 1, h.n() - 1, "limit_L");
  const int start = plus_closure(h, i);
  for (int j = start; j <= h.n() - 1; ++j)
    if (h(j) == h(j + 1))
      return j + 1;
  // h(n-1) = h(n) for connected h; a disconnected input can land here
  throw Error(ErrorKind::InvariantViolation, "no repeat after i^(+inf) in " + to_string(h));
}

} // namespace hessfano
