// A catalog of checkable assertions, each bound to a verification routine
// and run over parameter grids.
//
// Parameters are JSON objects. A value may be an integer, a string, a list
// (each entry is tried) or a range "lo..hi"; ranges and lists are expanded
// into the cartesian product of instances. Instances drawn from a range or
// list that miss a guard's domain (prime power, parity, power of two) are
// skipped, while explicit scalars that miss it are rejected.

#ifndef OMEGA_CLAIMS_HPP_
#define OMEGA_CLAIMS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/json.hpp"
#include "omega/store.hpp"

namespace omega {

enum class Strategy { Arithmetic, Descriptor, Oracle, Skipped };
enum class Verdict { Pass, Fail, Skipped };

std::string_view to_string(Strategy s);
std::string_view to_string(Verdict v);
std::optional<Strategy> parse_strategy(std::string_view text);

/// Thrown for unknown claim ids and for parameters that violate a guard.
class ClaimError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ParamGuard {
  enum class Domain { Integer, PrimePower, OddPrimePower, EvenPrimePower, PowerOfTwo, Sign, Text };
  std::string name;
  Domain domain = Domain::Integer;
  i64 min = 0;
  i64 max = 0;  // inclusive; ignored for Text
  bool required = true;
  std::vector<std::string> choices;  // Text only
};

struct Claim {
  std::string id;
  std::string name;
  std::vector<std::string> topics;
  Strategy strategy = Strategy::Skipped;
  std::string anchor;
  std::string check;  // key of the verification routine
  std::vector<ParamGuard> guards;
  std::vector<json> grid;  // default parameter sets
  std::string skip_reason;
};

struct ClaimResult {
  std::string id;
  json params;
  Verdict verdict = Verdict::Skipped;
  json evidence;
  std::string anchor;
};

void to_json(json& j, const ClaimResult& r);

struct RunContext {
  EnumerationStore* store = nullptr;  // required by oracle claims
};

/// The catalog in id order.
const std::vector<Claim>& claim_catalog();
const Claim& find_claim(std::string_view id);

/// Expands the parameter grid of a claim into checked instances. Throws
/// ClaimError on guard violations.
std::vector<json> expand_instances(const Claim& claim, const json& params);

/// Runs one claim on one parameter set (which may contain ranges).
ClaimResult run_claim(std::string_view id, const json& params, RunContext& ctx);

struct SuiteFilter {
  enum class Kind { All, Strategy, Ids } kind = Kind::All;
  Strategy strategy = Strategy::Arithmetic;
  std::vector<std::string> ids;

  /// "all", a strategy name, or a comma-separated id list ("" gives an
  /// empty id list). Throws ClaimError on unknown ids.
  static SuiteFilter parse(std::string_view text);
  bool matches(const Claim& c) const;
};

/// Every matching claim over each of its default parameter sets, in
/// catalog order.
std::vector<ClaimResult> run_suite(const SuiteFilter& filter, RunContext& ctx);

struct SuiteSummary {
  std::size_t pass = 0, fail = 0, skipped = 0;
};
SuiteSummary summarize(const std::vector<ClaimResult>& results);

}  // namespace omega

#endif  // OMEGA_CLAIMS_HPP_
