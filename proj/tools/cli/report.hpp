#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lensfill/arith.hpp"
#include "lensfill/dinv.hpp"
#include "lensfill/embed.hpp"

namespace lensfill::cli {

inline constexpr const char* kReportSchema = "lensfill.report/1";

struct Report {
  LensSpace subject{2, 1};
  ContinuedFraction cf;
  ContinuedFraction cf_dual;
  Verdict dehn;
  Verdict h1_filling;
  bool qr_topological = false;
  SpinVerdict spin;  // spin_d is spin.values when spin.applicable
  std::optional<DSquareResult> d_square;
  std::vector<std::string> notes;

  bool complete() const;  // neither verdict is indeterminate
};

bool operator==(const Report& a, const Report& b);

Report build_report(const LensSpace& lens, std::uint64_t budget);

nlohmann::json to_json(const Report& r);
// Throws std::invalid_argument on documents that do not follow the schema.
Report report_from_json(const nlohmann::json& j);

nlohmann::json int_json(const Int& x);
Int json_int(const nlohmann::json& j);

// Human-readable rendering; `quiet` drops witnesses and notes.
std::string render_text(const Report& r, bool quiet);

}  // namespace lensfill::cli
