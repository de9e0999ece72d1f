#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cubulate/cubing.hpp"
#include "cubulate/error.hpp"
#include "cubulate/homotopy.hpp"

namespace cubulate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitCertificate = 3;

int exit_code_for(ErrorCode code);

/// 64-bit FNV-1a of the raw input bytes, as 16 hex digits.
std::string digest(std::string_view bytes);

/// Certificate status: "pass", "fail" or "skipped", plus a witness on fail.
nlohmann::ordered_json status(bool passed, const std::string &witness = {});
nlohmann::ordered_json skipped(const std::string &reason);

nlohmann::ordered_json counts(const WallSpace &ws, const CubeComplex &complex);
nlohmann::ordered_json flag_status(const FlagReport &report);
nlohmann::ordered_json metric_status(const MetricReport &report);

} // namespace cubulate::cli
