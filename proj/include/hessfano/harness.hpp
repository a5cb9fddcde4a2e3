#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hessfano/hessfn.hpp"
#include "hessfano/perm.hpp"
#include "hessfano/schubert.hpp"
#include "hessfano/weightlat.hpp"

namespace hessfano {

struct ClassReport {
  int n = 0;
  std::vector<int> h;
  std::vector<int> h_star;
  int dim = 0;
  std::vector<int> xi;
  bool nef = false;
  bool fano = false;
  bool fano_by_shape = false;
  bool weak_fano = false;
  Perm w_h;
  std::vector<Block> blocks;
  std::optional<Perm> witness_u;                       // present iff nef
  std::optional<std::array<bool, 4>> witness_conditions; // (i)-(iv)
  std::optional<BigInt> degree;
  std::optional<bool> degree_positive;

  friend bool operator==(const ClassReport &, const ClassReport &) = default;
};

/// Degree fields are filled iff `compute_degree` and h is nef.
ClassReport classify_one(const HessFn &h, bool compute_degree);

struct SurveySummary {
  int total = 0;
  int nef = 0;
  int fano = 0;
};

struct Survey {
  int n = 0;
  std::vector<ClassReport> reports;
  SurveySummary summary;
};

/// classify_one over enumerate(n), lexicographic. Throws CapExceeded.
Survey survey(int n, bool compute_degree, int cap = kDefaultEnumerationCap);

SurveySummary summarize(const std::vector<ClassReport> &reports);

enum class Format { Json, Csv, Text };

/// Throws ParseError for anything but "json", "csv" or "text".
Format parse_format(std::string_view name);

/// Serializes reports. Throws InvariantViolation if a report contradicts
/// fano ⇒ nef, weak_fano = nef or fano = fano_by_shape.
std::string export_reports(const std::vector<ClassReport> &reports, Format format);

/// Inverse of export_reports(..., Format::Json). Throws ParseError.
std::vector<ClassReport> parse_json_reports(std::string_view text);

} // namespace hessfano
