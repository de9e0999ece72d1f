#include "report.hpp"

#include <cstdio>

namespace cubulate::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
  case ErrorCode::ComplexityBudgetExceeded:
  case ErrorCode::BudgetExceeded:
    return kExitBudget;
  case ErrorCode::FlagViolation:
  case ErrorCode::ContractionStuck:
  case ErrorCode::EquivarianceViolation:
  case ErrorCode::AdmissibilityAssertionFailed:
    return kExitCertificate;
  default:
    return kExitInput;
  }
}

std::string digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

nlohmann::ordered_json status(bool passed, const std::string &witness) {
  nlohmann::ordered_json out;
  out["status"] = passed ? "pass" : "fail";
  if (!passed) {
    out["witness"] = witness;
  }
  return out;
}

nlohmann::ordered_json skipped(const std::string &reason) {
  nlohmann::ordered_json out;
  out["status"] = "skipped";
  out["reason"] = reason;
  return out;
}

nlohmann::ordered_json counts(const WallSpace &ws, const CubeComplex &complex) {
  nlohmann::ordered_json out;
  out["points"] = ws.point_count();
  out["walls"] = ws.wall_count();
  out["vertices"] = complex.vertex_count();
  out["edges"] = complex.edge_count();
  nlohmann::ordered_json cubes = nlohmann::ordered_json::object();
  for (std::size_t k = 2; k <= complex.dimension(); ++k) {
    cubes[std::to_string(k)] = complex.cubes(k).size();
  }
  out["cubes"] = std::move(cubes);
  return out;
}

nlohmann::ordered_json flag_status(const FlagReport &report) {
  if (report.flag()) {
    auto out = status(true);
    out["cliques_checked"] = report.cliques_checked;
    return out;
  }
  std::string witness = "vertex " + std::to_string(report.violation->vertex) + " clique [";
  for (std::size_t i = 0; i < report.violation->clique.size(); ++i) {
    witness += (i ? "," : "") + std::to_string(report.violation->clique[i]);
  }
  witness += "] spans no cube";
  return status(false, witness);
}

nlohmann::ordered_json metric_status(const MetricReport &report) {
  if (report.ok()) {
    auto out = status(true);
    out["pairs_checked"] = report.pairs_checked;
    return out;
  }
  const auto [p, q] = *report.violation;
  return status(false, p == q ? "special vertex of point " + std::to_string(p) + " missing"
                              : "d(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") differs from d_1");
}

} // namespace cubulate::cli
