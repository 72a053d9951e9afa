#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "arbor/canonical.hpp"
#include "arbor/game.hpp"
#include "arbor/rational.hpp"
#include "arbor/tree.hpp"

namespace arbor {

/// Theorem failures indicate an implementation bug; conjecture failures are
/// mathematical findings; observations never fail and only collect examples.
enum class CheckKind { Theorem, Conjecture, Observation };
enum class CheckStatus { Pass, Fail };

const char* to_string(CheckKind k);
const char* to_string(CheckStatus s);

struct Witness {
  std::uint64_t class_index = 0;
  CanonKey key;
  std::string tree_text;  // edge-list format, reparseable with parse_tree
  std::vector<std::pair<std::string, std::string>> values;
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Theorem;
  std::string description;
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t violations = 0;
  std::vector<Witness> witnesses;
};

struct Extreme {
  std::string model;
  Rational min, max;
  std::uint64_t min_index = 0, max_index = 0;
  CanonKey min_key, max_key;
  std::string min_tree, max_tree;
};

struct ValueRow {
  std::uint64_t class_index = 0;
  CanonKey key;
  std::string model;
  Rational value;
};

struct SweepReport {
  std::string sweep;
  int order = 0;
  std::optional<int> k;
  std::uint64_t class_count = 0;
  std::vector<CheckResult> checks;
  std::vector<Extreme> extremes;
  std::vector<ValueRow> values;  // filled only with SweepOptions::keep_values
  double wall_time_s = 0;

  const CheckResult* find_check(std::string_view name) const;
  const Extreme* find_extreme(std::string_view model) const;
  bool theorem_failed() const;
  bool conjecture_failed() const;
  /// 0 all pass, 2 conjecture violated, 3 theorem check failed.
  int exit_code() const;
};

struct SweepOptions {
  int threads = 1;
  bool keep_values = false;
  std::size_t max_witnesses = 20;
  /// Shared value cache; a fresh table is used when null.
  std::shared_ptr<MemoTable> memo;
};

class InvalidRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SweepReport verify_semirandom_bounds(int n, const SweepOptions& opts = {});
SweepReport verify_allrandom_bounds(int n, const SweepOptions& opts = {});
SweepReport verify_limb_lemmas(int n, const SweepOptions& opts = {});
SweepReport verify_alternating_inequality(int n, int k, const SweepOptions& opts = {});
SweepReport verify_fixed_target(int n, const SweepOptions& opts = {});
SweepReport verify_oo_closed_form(int n, const SweepOptions& opts = {});

/// Dispatch by CLI name: semirandom, allrandom, limbs, alternating, fixed-target, oo.
SweepReport run_named_sweep(std::string_view name, int n, std::optional<int> k, const SweepOptions& opts = {});
bool is_sweep_name(std::string_view name);

// --- report serialization -------------------------------------------------

inline constexpr const char* kReportSchema = "arbor.sweep/1";

nlohmann::json report_to_json(const SweepReport& report);
SweepReport report_from_json(const nlohmann::json& j);

/// Writes `report` as "json" or "csv". Output is byte-identical for identical
/// reports. Throws std::invalid_argument for any other format name.
void export_report(const SweepReport& report, std::string_view format, std::ostream& out);
/// As above, writing to a file; throws std::runtime_error on IO failure.
void export_report(const SweepReport& report, std::string_view format, const std::string& path);

}  // namespace arbor
