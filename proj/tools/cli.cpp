#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include <chowcount/errors.hpp>

namespace chowcount::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string dec(std::int64_t v) { return std::to_string(v); }

struct ChowOptions {
  std::int64_t p = 0, n = 0, d = 0;
  std::string method = "closed";
  std::string format = "json";
};

struct SeriesOptions {
  std::int64_t p = 0, n = 0, order = 10;
  std::string method = "closed";
  std::string format = "json";
};

struct TableOptions {
  std::int64_t p = 0, n = 0, max_d = 10;
  std::string method = "closed";
  std::string format = "json";
};

struct QuaternionicOptions {
  std::int64_t p = 0, qn = 1, d = 0;
  std::string oracle = "none";
  std::string format = "json";
};

struct VerifyOptions {
  std::string suite = "all";
  SweepBounds bounds;
  bool timing = false;
};

Json query(std::string_view subcommand, Json params) {
  Json q;
  q["subcommand"] = subcommand;
  q["params"] = std::move(params);
  return q;
}

void emit_json(std::ostream &out, const Json &doc) { out << doc.dump(2) << '\n'; }

ExactInt chow_value(const PathSet &paths, const ChowParams &params, std::string_view method) {
  if (method == "closed")
    return paths.closed(params);
  if (method == "recursive")
    return paths.recursive(params);
  return paths.series(params.p(), params.n(), params.d(), SeriesMethod::functional)
      .coefficient(params.d());
}

int cmd_chow(const ChowOptions &opt, const PathSet &paths, std::ostream &out) {
  const ChowParams params(opt.p, opt.n, opt.d);
  std::vector<std::string> methods;
  if (opt.method == "all")
    methods = {"closed", "recursive", "series"};
  else
    methods = {opt.method};

  std::vector<std::pair<std::string, ExactInt>> values;
  for (const auto &m : methods)
    values.emplace_back(m, chow_value(paths, params, m));
  const bool all_match = std::all_of(values.begin(), values.end(),
                                     [&](const auto &v) { return v.second == values.front().second; });

  if (opt.format == "csv") {
    out << "method,value\n";
    for (const auto &[m, v] : values)
      out << m << ',' << to_decimal(v) << '\n';
    if (methods.size() > 1)
      out << "match," << (all_match ? 1 : 0) << '\n';
  } else {
    Json doc;
    doc["query"] = query("chow", {{"p", dec(opt.p)}, {"n", dec(opt.n)}, {"d", dec(opt.d)},
                                  {"method", opt.method}});
    doc["results"] = Json::array();
    for (const auto &[m, v] : values)
      doc["results"].push_back({{"method", m}, {"value", to_decimal(v)}});
    if (methods.size() > 1)
      doc["match"] = all_match;
    emit_json(out, doc);
  }
  return all_match ? kSuccess : kVerificationFailed;
}

int emit_rows(std::string_view subcommand, Json params, std::string_view header_value,
              const std::vector<std::pair<std::string, TruncatedSeries>> &columns,
              const std::string &format, std::ostream &out) {
  const auto order = columns.front().second.order();
  bool all_match = true;
  for (const auto &[name, s] : columns)
    all_match = all_match && s == columns.front().second;

  if (format == "csv") {
    out << 'd';
    if (columns.size() == 1)
      out << ',' << header_value;
    else
      for (const auto &[name, s] : columns)
        out << ',' << name;
    out << '\n';
    for (std::int64_t d = 0; d <= order; ++d) {
      out << d;
      for (const auto &[name, s] : columns)
        out << ',' << to_decimal(s.coefficient(d));
      out << '\n';
    }
  } else {
    Json doc;
    doc["query"] = query(subcommand, std::move(params));
    if (columns.size() == 1) {
      Json coeffs = Json::array();
      for (const auto &c : columns.front().second.coefficients())
        coeffs.push_back(to_decimal(c));
      doc["coefficients"] = std::move(coeffs);
    }
    doc["results"] = Json::array();
    for (const auto &[name, s] : columns)
      for (std::int64_t d = 0; d <= order; ++d)
        doc["results"].push_back(
            {{"method", name}, {"d", dec(d)}, {"value", to_decimal(s.coefficient(d))}});
    if (columns.size() > 1)
      doc["match"] = all_match;
    emit_json(out, doc);
  }
  return all_match ? kSuccess : kVerificationFailed;
}

int cmd_series(const SeriesOptions &opt, const PathSet &paths, std::ostream &out) {
  if (opt.order < 0)
    throw ParameterError("--order must be nonnegative");
  std::vector<std::pair<std::string, TruncatedSeries>> columns;
  if (opt.method == "closed" || opt.method == "all")
    columns.emplace_back("closed", paths.series(opt.p, opt.n, opt.order, SeriesMethod::closed));
  if (opt.method == "functional" || opt.method == "all")
    columns.emplace_back("functional",
                         paths.series(opt.p, opt.n, opt.order, SeriesMethod::functional));
  return emit_rows("series",
                   {{"p", dec(opt.p)}, {"n", dec(opt.n)}, {"order", dec(opt.order)},
                    {"method", opt.method}},
                   "chi", columns, opt.format, out);
}

int cmd_table(const TableOptions &opt, const PathSet &paths, std::ostream &out) {
  if (opt.max_d < 0)
    throw ParameterError("--max-d must be nonnegative");
  std::vector<ExactInt> coeffs;
  for (std::int64_t d = 0; d <= opt.max_d; ++d)
    coeffs.push_back(chow_value(paths, ChowParams(opt.p, opt.n, d), opt.method));
  return emit_rows("table",
                   {{"p", dec(opt.p)}, {"n", dec(opt.n)}, {"max_d", dec(opt.max_d)},
                    {"method", opt.method}},
                   "chi", {{opt.method, TruncatedSeries(std::move(coeffs))}}, opt.format, out);
}

int cmd_quaternionic(const QuaternionicOptions &opt, const PathSet &paths, std::ostream &out,
                     std::ostream &err) {
  const QuaternionicParams params(opt.p, opt.qn, opt.d);
  std::vector<std::pair<std::string, ExactInt>> values;
  values.emplace_back("closed", paths.quaternionic(params));
  std::string note;
  if (opt.oracle == "auto") {
    if (opt.p == 0)
      values.emplace_back("p0-oracle", paths.quaternionic_p0(opt.qn, opt.d));
    if (opt.d == 1)
      values.emplace_back("d1-oracle", paths.quaternionic_d1(opt.p, opt.qn));
    if (values.size() == 1)
      note = "no decomposition oracle applies (needs p = 0 or d = 1)";
  }
  const bool all_match = std::all_of(values.begin(), values.end(),
                                     [&](const auto &v) { return v.second == values.front().second; });
  const bool compared = values.size() > 1;

  if (opt.format == "csv") {
    out << "method,value\n";
    for (const auto &[m, v] : values)
      out << m << ',' << to_decimal(v) << '\n';
    if (compared)
      out << "match," << (all_match ? 1 : 0) << '\n';
    if (!note.empty())
      err << "note: " << note << '\n';
  } else {
    Json doc;
    doc["query"] = query("quaternionic", {{"p", dec(opt.p)}, {"qn", dec(opt.qn)},
                                          {"d", dec(opt.d)}, {"oracle", opt.oracle}});
    doc["results"] = Json::array();
    for (const auto &[m, v] : values)
      doc["results"].push_back({{"method", m}, {"value", to_decimal(v)}});
    if (compared)
      doc["match"] = all_match;
    if (!note.empty())
      doc["note"] = note;
    emit_json(out, doc);
  }
  return all_match ? kSuccess : kVerificationFailed;
}

Json inputs_json(const std::vector<std::pair<std::string, std::int64_t>> &inputs) {
  Json j = Json::object();
  for (const auto &[k, v] : inputs)
    j[k] = dec(v);
  return j;
}

int cmd_verify(const VerifyOptions &opt, const PathSet &paths, std::ostream &out) {
  const auto suite = parse_suite(opt.suite);
  const VerificationReport report = run_verification(*suite, opt.bounds, paths);

  Json doc;
  doc["suite"] = report.suite;
  doc["bounds"] = {{"max_p", dec(opt.bounds.max_p)},
                   {"max_n", dec(opt.bounds.max_n)},
                   {"max_d", dec(opt.bounds.max_d)},
                   {"order", dec(opt.bounds.order)}};
  doc["cases_run"] = dec(report.cases_run);
  doc["failures"] = Json::array();
  for (const auto &f : report.failures)
    doc["failures"].push_back({{"check", f.check},
                               {"inputs", inputs_json(f.inputs)},
                               {"expected", to_decimal(f.expected)},
                               {"actual", to_decimal(f.actual)}});
  doc["passed"] = report.passed();
  if (opt.timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", report.elapsed_ms);
    doc["elapsed_ms"] = buf;
  }
  emit_json(out, doc);
  return report.passed() ? kSuccess : kVerificationFailed;
}

void add_format(CLI::App *cmd, std::string &format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        const PathSet &paths) {
  CLI::App app{"Euler characteristics of Chow varieties of projective space", "chowcount"};
  app.require_subcommand(1);

  ChowOptions chow;
  auto *chow_cmd = app.add_subcommand("chow", "Euler characteristic of C_{p,d}(P^n)");
  chow_cmd->add_option("--p", chow.p, "Cycle dimension")->required();
  chow_cmd->add_option("--n", chow.n, "Ambient projective dimension")->required();
  chow_cmd->add_option("--d", chow.d, "Degree")->required();
  chow_cmd->add_option("--method", chow.method, "Computation path")
      ->check(CLI::IsMember({"closed", "recursive", "series", "all"}))
      ->capture_default_str();
  add_format(chow_cmd, chow.format);

  SeriesOptions series;
  auto *series_cmd = app.add_subcommand("series", "Coefficients of the generating function Q_{p,n}(t)");
  series_cmd->add_option("--p", series.p, "Cycle dimension")->required();
  series_cmd->add_option("--n", series.n, "Ambient projective dimension")->required();
  series_cmd->add_option("--order", series.order, "Truncation order")->capture_default_str();
  series_cmd->add_option("--method", series.method, "Series construction")
      ->check(CLI::IsMember({"closed", "functional", "all"}))
      ->capture_default_str();
  add_format(series_cmd, series.format);

  QuaternionicOptions quat;
  auto *quat_cmd = app.add_subcommand("quaternionic", "Euler characteristic of quaternionic cycles C_{p,d}(n)");
  quat_cmd->add_option("--p", quat.p, "Cycle dimension")->required();
  quat_cmd->add_option("--qn", quat.qn, "Quaternionic dimension (ambient P^{2qn-1})")->required();
  quat_cmd->add_option("--d", quat.d, "Degree")->required();
  quat_cmd->add_option("--oracle", quat.oracle, "Cross-check with a decomposition oracle")
      ->check(CLI::IsMember({"none", "auto"}))
      ->capture_default_str();
  add_format(quat_cmd, quat.format);

  VerifyOptions verify;
  auto *verify_cmd = app.add_subcommand("verify", "Run consistency sweeps and report failures as JSON");
  verify_cmd->add_option("--suite", verify.suite, "Sweep to run")
      ->check(CLI::IsMember({"recursion", "series", "quaternionic", "base-cases", "all"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-p", verify.bounds.max_p)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--max-n", verify.bounds.max_n)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--max-d", verify.bounds.max_d)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_option("--order", verify.bounds.order)->check(CLI::NonNegativeNumber)->capture_default_str();
  verify_cmd->add_flag("--timing", verify.timing, "Include elapsed_ms in the report");

  TableOptions table;
  auto *table_cmd = app.add_subcommand("table", "Rows (d, chi) for d = 0..max-d");
  table_cmd->add_option("--p", table.p, "Cycle dimension")->required();
  table_cmd->add_option("--n", table.n, "Ambient projective dimension")->required();
  table_cmd->add_option("--max-d", table.max_d, "Largest degree")->capture_default_str();
  table_cmd->add_option("--method", table.method, "Computation path")
      ->check(CLI::IsMember({"closed", "recursive", "series"}))
      ->capture_default_str();
  add_format(table_cmd, table.format);

  std::vector<const char *> argv{"chowcount"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (chow_cmd->parsed())
      return cmd_chow(chow, paths, out);
    if (series_cmd->parsed())
      return cmd_series(series, paths, out);
    if (quat_cmd->parsed())
      return cmd_quaternionic(quat, paths, out, err);
    if (verify_cmd->parsed())
      return cmd_verify(verify, paths, out);
    if (table_cmd->parsed())
      return cmd_table(table, paths, out);
  } catch (const ParameterError &e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

} // namespace chowcount::cli
