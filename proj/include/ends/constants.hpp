#ifndef ENDS_CONSTANTS_HPP
#define ENDS_CONSTANTS_HPP

#include "ends/rational.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace ends {

enum class Provenance { formula, estimated, override_value, user, default_value };
enum class LedgerMode { certified, empirical };

std::string to_string(Provenance p);
std::string to_string(LedgerMode m);

/// Every constant of the end-counting pipeline with where it came from.
/// Radii are BigInt because the certified outer radius is exponential in R0.
struct ConstantsLedger {
  LedgerMode mode = LedgerMode::empirical;
  Rational delta_X;
  Rational epsilon;
  Rational eta;
  Rational tau;
  int n0 = 1;
  Rational alpha;
  Rational diam_core;
  Rational rho;
  Rational delta_XH;
  Rational mu;
  BigInt M;
  BigInt R0;
  Rational inner_offset;
  Rational dag_offset;
  std::optional<BigInt> outer_radius;  ///< empty when too large to write down
  int generator_count = 2;
  bool geodesic_extension_adjusted = false;
  std::map<std::string, Provenance> provenance;

  /// R0 - inner_offset: the closed ball removed when comparing sphere points.
  Rational inner_radius() const { return Rational(R0) - inner_offset; }

  friend bool operator==(const ConstantsLedger&, const ConstantsLedger&) = default;
};

struct CertifiedInputs {
  Rational delta_X;
  Rational epsilon;
  std::optional<Rational> eta;  ///< defaults to delta_X
  int n0 = 1;
  Rational diam_core;
  int generator_count = 2;
  /// Replace delta_XH by 4 delta_XH + delta_X before deriving M and the radii.
  bool geodesic_extension_adjusted = false;
  std::map<std::string, Provenance> provenance;  ///< tags for the inputs; default "user"
};

/// Largest R0 for which the certified outer radius is still expanded.
inline constexpr long kMaxExpandedR0 = 1'000'000;

ConstantsLedger derive_certified(const CertifiedInputs& in);
ConstantsLedger derive_certified(const Rational& delta_X, const Rational& epsilon, const Rational& eta, int n0,
                                 const Rational& diam_core);

struct Estimates {
  Rational delta_X;
  Rational epsilon;
  Rational diam_core;
  Provenance delta_source = Provenance::default_value;
  Provenance epsilon_source = Provenance::default_value;
  Provenance diam_source = Provenance::default_value;
};

struct EmpiricalRadii {
  long R0 = 0;
  Rational inner_offset;
  long outer_radius = 0;
  std::optional<long> M;             ///< defaults to R0
  std::optional<Rational> dag_offset;  ///< defaults to inner_offset
};

/// Throws PreconditionError unless 0 <= inner_offset < R0 < outer_radius.
ConstantsLedger empirical_ledger(const EmpiricalRadii& radii, const Estimates& estimates);

nlohmann::json to_json(const ConstantsLedger& ledger);
ConstantsLedger ledger_from_json(const nlohmann::json& j);

}  // namespace ends

#endif  // ENDS_CONSTANTS_HPP
