#include "bimult/report.hpp"

#include <cstdio>
#include <cstring>
#include <fstream>

namespace bimult {

std::string witness_digest(const std::vector<cplx>& f, const std::vector<cplx>& g) {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const std::vector<cplx>& v) {
    for (const cplx& z : v) {
      double parts[2] = {z.real(), z.imag()};
      unsigned char bytes[sizeof(parts)];
      std::memcpy(bytes, parts, sizeof(parts));
      for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
    }
  };
  mix(f);
  mix(g);
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

nlohmann::json to_json(const InequalityReport& rep) {
  return nlohmann::json{
      {"check", rep.check},
      {"theorem_ref", rep.provenance},
      {"lhs", rep.lhs},
      {"rhs", rep.rhs},
      {"constant", rep.constant},
      {"slack", rep.slack},
      {"pass", rep.pass},
      {"seed", rep.seed},
      {"trials", rep.trials},
      {"witness_digest", ""},
      {"note", rep.note},
  };
}

nlohmann::json to_json(const NormEstimate& est) {
  return nlohmann::json{
      {"check", "norm_estimate"},
      {"theorem_ref", "operator-norm-lower-bound"},
      {"lhs", est.value},
      {"rhs", 0.0},
      {"constant", 0.0},
      {"slack", 0.0},
      {"pass", true},
      {"seed", est.seed},
      {"trials", est.trials},
      {"witness_digest", witness_digest(est.witness_f, est.witness_g)},
      {"note", "value is a lower bound; best trial " + std::to_string(est.best_trial)},
  };
}

void write_report(const std::string& path, const std::string& format,
                  const std::vector<nlohmann::json>& records) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(r);
    out << arr.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    out << "check,theorem_ref,lhs,rhs,constant,slack,pass,seed,trials,witness_digest\n";
    for (const auto& r : records) {
      out << r.value("check", "") << ',' << r.value("theorem_ref", "") << ','
          << format_full(r.value("lhs", 0.0)) << ',' << format_full(r.value("rhs", 0.0)) << ','
          << format_full(r.value("constant", 0.0)) << ','
          << format_full(r.value("slack", 0.0)) << ','
          << (r.value("pass", false) ? "true" : "false") << ',' << r.value("seed", 0ULL) << ','
          << r.value("trials", 0) << ',' << r.value("witness_digest", "") << "\n";
    }
    return;
  }
  throw ConfigError("config field 'format': expected json or csv, got '" + format + "'");
}

void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_full(row[i]);
    out << "\n";
  }
}

}  // namespace bimult
