#include "mvm/report.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace mvm {

namespace {

nlohmann::json env_json(const Env& env) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : env) out.push_back(v.str());
  return out;
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw InputError("unknown status '" + s + "'");
}

template <class T>
T field(const nlohmann::json& doc, const char* key, const std::string& path) {
  if (!doc.contains(key)) throw InputError(path + "." + key + ": missing");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(path + "." + key + ": wrong type");
  }
}

}  // namespace

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j{{"id", r.id}, {"status", status_name(r.status)}, {"tuples", r.tuples}};
  if (r.sampled) j["sampled"] = true;
  if (!r.lhs_term.empty()) {
    j["lhs_term"] = r.lhs_term;
    j["rhs_term"] = r.rhs_term;
    j["cmp"] = r.cmp == Comparison::eq ? "=" : "<=";
  }
  if (r.counterexample) j["counterexample"] = env_json(*r.counterexample);
  if (r.lhs) j["lhs"] = r.lhs->str();
  if (r.rhs) j["rhs"] = r.rhs->str();
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

nlohmann::json to_json(const VerificationReport& rep) {
  nlohmann::json axioms = nlohmann::json::array();
  for (const auto& ax : rep.axioms) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : ax.checks) checks.push_back(to_json(c));
    axioms.push_back({{"id", ax.id},
                      {"status", status_name(ax.status())},
                      {"tuples", ax.tuples()},
                      {"sampled", ax.sampled()},
                      {"checks", checks}});
  }
  return {{"suite", rep.suite},
          {"model", rep.model},
          {"strategy", rep.strategy},
          {"schema_depth", rep.schema_depth},
          {"status", rep.passed() ? "pass" : "fail"},
          {"axioms", axioms}};
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("report: expected an object");
  VerificationReport rep;
  rep.suite = field<std::string>(doc, "suite", "report");
  rep.model = field<std::string>(doc, "model", "report");
  rep.strategy = field<std::string>(doc, "strategy", "report");
  rep.schema_depth = doc.value("schema_depth", 0U);
  const auto axioms = field<nlohmann::json>(doc, "axioms", "report");
  for (std::size_t a = 0; a < axioms.size(); ++a) {
    const std::string apath = "report.axioms[" + std::to_string(a) + "]";
    AxiomResult ax{field<std::string>(axioms[a], "id", apath), {}};
    const auto checks = field<nlohmann::json>(axioms[a], "checks", apath);
    for (std::size_t c = 0; c < checks.size(); ++c) {
      const auto& cj = checks[c];
      const std::string cpath = apath + ".checks[" + std::to_string(c) + "]";
      CheckResult r;
      r.id = field<std::string>(cj, "id", cpath);
      r.status = parse_status(field<std::string>(cj, "status", cpath));
      r.tuples = cj.value("tuples", std::size_t{0});
      r.sampled = cj.value("sampled", false);
      r.lhs_term = cj.value("lhs_term", "");
      r.rhs_term = cj.value("rhs_term", "");
      r.cmp = cj.value("cmp", "=") == "<=" ? Comparison::leq : Comparison::eq;
      r.reason = cj.value("reason", "");
      if (cj.contains("counterexample")) {
        Env env;
        for (const auto& v : cj.at("counterexample")) env.push_back(parse_value_text(v.get<std::string>()));
        r.counterexample = std::move(env);
      }
      if (cj.contains("lhs")) r.lhs = parse_value_text(cj.at("lhs").get<std::string>());
      if (cj.contains("rhs")) r.rhs = parse_value_text(cj.at("rhs").get<std::string>());
      ax.checks.push_back(std::move(r));
    }
    rep.axioms.push_back(std::move(ax));
  }
  return rep;
}

std::string to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "suite " << rep.suite << " on " << rep.model << " (" << rep.strategy;
  if (rep.schema_depth) os << ", depth " << rep.schema_depth;
  os << ")\n";
  std::size_t width = 4;
  for (const auto& ax : rep.axioms) width = std::max(width, ax.id.size());
  for (const auto& ax : rep.axioms) {
    const Status s = ax.status();
    std::string label = status_name(s);
    for (auto& ch : label) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << "  " << ax.id << std::string(width - ax.id.size() + 2, ' ') << label << "  " << ax.tuples() << " tuples";
    if (ax.sampled()) os << " (sampled)";
    os << "\n";
    if (const CheckResult* f = ax.first_failure()) {
      os << "    " << f->id;
      if (!f->lhs_term.empty()) os << ": " << f->lhs_term << (f->cmp == Comparison::eq ? " = " : " <= ") << f->rhs_term;
      os << "\n";
      if (f->counterexample) os << "    at " << format_env(*f->counterexample) << "\n";
      if (f->lhs && f->rhs) os << "    lhs " << f->lhs->str() << ", rhs " << f->rhs->str() << "\n";
      if (!f->reason.empty()) os << "    " << f->reason << "\n";
    } else if (s == Status::skipped && !ax.checks.empty() && !ax.checks.front().reason.empty()) {
      os << "    " << ax.checks.front().reason << "\n";
    }
  }
  return os.str();
}

bool RunReport::passed() const {
  if (failed) return false;
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

nlohmann::json to_json(const RunReport& run) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : run.reports) reports.push_back(to_json(r));
  return {{"command", run.command},
          {"seed", run.seed},
          {"version", "mvmcheck 0.1.0"},
          {"status", run.passed() ? "pass" : "fail"},
          {"reports", reports},
          {"results", run.results}};
}

std::string to_text(const RunReport& run) {
  std::ostringstream os;
  for (const auto& r : run.reports) os << to_text(r) << "\n";
  if (!run.results.empty()) os << run.results.dump(2) << "\n";
  os << (run.passed() ? "PASS" : "FAIL") << "  seed " << run.seed << "  " << run.wall_seconds << " s\n";
  return os.str();
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::json;
  if (text == "text") return Format::text;
  throw InputError("unknown format '" + text + "' (expected json or text)");
}

void write_report(const RunReport& run, const std::string& path, Format format) {
  const std::string body = format == Format::json ? to_json(run).dump(2) + "\n" : to_text(run);
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  if (std::filesystem::is_directory(path)) throw InputError(path + " is a directory");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << body;
  if (!out) throw InputError("write to " + path + " failed");
}

}  // namespace mvm
