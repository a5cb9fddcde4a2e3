#include "hessfano/harness.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "hessfano/error.hpp"
#include "hessfano/witness.hpp"

namespace hessfano {

namespace {

using nlohmann::json;

std::string join(const std::vector<int> &values, char sep)
{
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0)
      out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

std::string blocks_text(const std::vector<Block> &blocks)
{
  std::string out;
  for (const Block &b : blocks) {
    if (!out.empty())
      out += ' ';
    out += std::to_string(b.first) + "-" + std::to_string(b.last);
  }
  return out;
}

std::string conditions_text(const std::array<bool, 4> &c)
{
  std::string out;
  for (bool b : c)
    out += b ? 'T' : 'F';
  return out;
}

const char *flag(bool b) { return b ? "true" : "false"; }

void check_invariants(const ClassReport &r)
{
  auto fail = [&](const char *what) {
    throw Error(ErrorKind::InvariantViolation,
                std::string(what) + " for h = " + join(r.h, ','));
  };
  if (r.fano && !r.nef)
    fail("fano without nef");
  if (r.weak_fano != r.nef)
    fail("weak_fano differs from nef");
  if (r.fano != r.fano_by_shape)
    fail("coefficient test and band shape disagree on fano");
  if (r.witness_u.has_value() != r.nef)
    fail("witness present iff nef violated");
}

json to_json(const ClassReport &r)
{
  json j;
  j["n"] = r.n;
  j["h"] = r.h;
  j["h_star"] = r.h_star;
  j["dim"] = r.dim;
  j["xi"] = r.xi;
  j["nef"] = r.nef;
  j["fano"] = r.fano;
  j["fano_by_shape"] = r.fano_by_shape;
  j["weak_fano"] = r.weak_fano;
  j["w_h"] = to_string(r.w_h);
  json blocks = json::array();
  for (const Block &b : r.blocks)
    blocks.push_back({b.first, b.last});
  j["blocks"] = blocks;
  if (r.witness_u)
    j["witness_u"] = to_string(*r.witness_u);
  if (r.witness_conditions)
    j["witness_conditions"] = *r.witness_conditions;
  if (r.degree)
    j["degree"] = r.degree->str();
  if (r.degree_positive)
    j["degree_positive"] = *r.degree_positive;
  return j;
}

ClassReport from_json(const json &j)
{
  ClassReport r;
  r.n = j.at("n").get<int>();
  r.h = j.at("h").get<std::vector<int>>();
  r.h_star = j.at("h_star").get<std::vector<int>>();
  r.dim = j.at("dim").get<int>();
  r.xi = j.at("xi").get<std::vector<int>>();
  r.nef = j.at("nef").get<bool>();
  r.fano = j.at("fano").get<bool>();
  r.fano_by_shape = j.at("fano_by_shape").get<bool>();
  r.weak_fano = j.at("weak_fano").get<bool>();
  r.w_h = parse_perm(j.at("w_h").get<std::string>());
  for (const json &b : j.at("blocks"))
    r.blocks.push_back({b.at(0).get<int>(), b.at(1).get<int>()});
  if (j.contains("witness_u"))
    r.witness_u = parse_perm(j["witness_u"].get<std::string>());
  if (j.contains("witness_conditions"))
    r.witness_conditions = j["witness_conditions"].get<std::array<bool, 4>>();
  if (j.contains("degree"))
    r.degree = BigInt(j["degree"].get<std::string>());
  if (j.contains("degree_positive"))
    r.degree_positive = j["degree_positive"].get<bool>();
  return r;
}

std::string export_json(const std::vector<ClassReport> &reports)
{
  json doc;
  const bool uniform =
      !reports.empty() && std::all_of(reports.begin(), reports.end(), [&](const ClassReport &r) {
        return r.n == reports.front().n;
      });
  doc["n"] = uniform ? json(reports.front().n) : json(nullptr);
  doc["reports"] = json::array();
  for (const ClassReport &r : reports)
    doc["reports"].push_back(to_json(r));
  return doc.dump() + "\n";
}

std::string export_csv(const std::vector<ClassReport> &reports)
{
  std::ostringstream out;
  out << "n,h,h_star,dim,xi,nef,fano,fano_by_shape,weak_fano,w_h,blocks,witness_u,"
         "witness_conditions,degree,degree_positive\n";
  auto quoted = [](const std::string &s) { return "\"" + s + "\""; };
  for (const ClassReport &r : reports) {
    out << r.n << ',' << quoted(join(r.h, ' ')) << ',' << quoted(join(r.h_star, ' ')) << ','
        << r.dim << ',' << quoted(join(r.xi, ' ')) << ',' << flag(r.nef) << ',' << flag(r.fano)
        << ',' << flag(r.fano_by_shape) << ',' << flag(r.weak_fano) << ','
        << quoted(to_string(r.w_h)) << ',' << quoted(blocks_text(r.blocks)) << ',';
    if (r.witness_u)
      out << quoted(to_string(*r.witness_u));
    out << ',';
    if (r.witness_conditions) {
      std::string c;
      for (bool b : *r.witness_conditions)
        c += std::string(c.empty() ? "" : " ") + flag(b);
      out << quoted(c);
    }
    out << ',';
    if (r.degree)
      out << r.degree->str();
    out << ',';
    if (r.degree_positive)
      out << flag(*r.degree_positive);
    out << '\n';
  }
  return out.str();
}

std::string export_text(const std::vector<ClassReport> &reports)
{
  const std::vector<std::string> header = {"h",    "dim",    "xi",      "nef",    "fano",
                                           "weak", "w_h",    "blocks",  "witness", "conds",
                                           "degree"};
  std::vector<std::vector<std::string>> rows;
  for (const ClassReport &r : reports) {
    rows.push_back({join(r.h, ','), std::to_string(r.dim), join(r.xi, ','), flag(r.nef),
                    flag(r.fano), flag(r.weak_fano), to_string(r.w_h), blocks_text(r.blocks),
                    r.witness_u ? to_string(*r.witness_u) : "-",
                    r.witness_conditions ? conditions_text(*r.witness_conditions) : "-",
                    r.degree ? r.degree->str() : "-"});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto &row : rows)
      width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string> &row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0)
        line += "  ";
      line += row[c];
      line.append(width[c] - row[c].size(), ' ');
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    out << line << '\n';
  };
  emit(header);
  for (const auto &row : rows)
    emit(row);
  return out.str();
}

} // namespace

ClassReport classify_one(const HessFn &h, bool compute_degree)
{
  const FanoVerdict verdict = classify(h);
  ClassReport r;
  r.n = h.n();
  r.h = h.values();
  r.h_star = h.star_values();
  r.dim = dimension(h);
  r.xi = verdict.xi.coeffs();
  r.nef = verdict.nef;
  r.fano = verdict.fano;
  r.fano_by_shape = verdict.fano_by_shape;
  r.weak_fano = verdict.weak_fano;
  r.w_h = h.pivot();
  r.blocks = parabolic_blocks(verdict.xi).blocks();
  if (r.nef) {
    const WitnessReport witness = construct_witness(h);
    r.witness_u = witness.u;
    r.witness_conditions =
        std::array<bool, 4>{witness.cond_i, witness.cond_ii, witness.cond_iii, witness.cond_iv};
    if (compute_degree) {
      r.degree = hessenberg_degree(h, verdict.xi);
      r.degree_positive = *r.degree > 0;
    }
  }
  return r;
}

SurveySummary summarize(const std::vector<ClassReport> &reports)
{
  SurveySummary s;
  for (const ClassReport &r : reports) {
    ++s.total;
    s.nef += r.nef ? 1 : 0;
    s.fano += r.fano ? 1 : 0;
  }
  return s;
}

Survey survey(int n, bool compute_degree, int cap)
{
  Survey out;
  out.n = n;
  for (const HessFn &h : enumerate(n, false, cap))
    out.reports.push_back(classify_one(h, compute_degree));
  out.summary = summarize(out.reports);
  return out;
}

Format parse_format(std::string_view name)
{
  if (name == "json")
    return Format::Json;
  if (name == "csv")
    return Format::Csv;
  if (name == "text")
    return Format::Text;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string export_reports(const std::vector<ClassReport> &reports, Format format)
{
  for (const ClassReport &r : reports)
    check_invariants(r);
  switch (format) {
  case Format::Json: return export_json(reports);
  case Format::Csv: return export_csv(reports);
  case Format::Text: return export_text(reports);
  }
  return {};
}

std::vector<ClassReport> parse_json_reports(std::string_view text)
{
  try {
    const json doc = json::parse(text);
    std::vector<ClassReport> out;
    for (const json &r : doc.at("reports"))
      out.push_back(from_json(r));
    return out;
  } catch (const json::exception &e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

} // namespace hessfano
