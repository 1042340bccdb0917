#include "ends/constants.hpp"

#include "ends/errors.hpp"

namespace ends {

namespace {

const std::map<std::string, Provenance>& provenance_names() {
  static const std::map<std::string, Provenance> names{
      {"formula", Provenance::formula},   {"estimated", Provenance::estimated},
      {"override", Provenance::override_value}, {"user", Provenance::user},
      {"default", Provenance::default_value},
  };
  return names;
}

Provenance parse_provenance(const std::string& s) {
  const auto& names = provenance_names();
  if (auto it = names.find(s); it != names.end()) return it->second;
  throw ParseError("unknown provenance tag '" + s + "'");
}

// Fills the tau/alpha/rho/mu chain that both modes share.
void derive_shared(ConstantsLedger& l) {
  l.tau = 12 * l.delta_X + 2 * l.epsilon + 2 * l.eta;
  l.alpha = Rational(132 + 100 * l.n0) * l.delta_X;
  l.rho = l.diam_core + l.alpha + l.delta_X;
  for (const char* key : {"tau", "alpha", "rho", "delta_XH", "mu"}) l.provenance[key] = Provenance::formula;
}

BigInt pow_int(int base, long exponent) {
  BigInt out = 1;
  BigInt b = base;
  for (long e = exponent; e > 0; e >>= 1) {
    if (e & 1) out *= b;
    b *= b;
  }
  return out;
}

}  // namespace

std::string to_string(Provenance p) {
  for (const auto& [name, value] : provenance_names()) {
    if (value == p) return name;
  }
  return "unknown";
}

std::string to_string(LedgerMode m) { return m == LedgerMode::certified ? "certified" : "empirical"; }

ConstantsLedger derive_certified(const CertifiedInputs& in) {
  if (in.delta_X < 0 || in.epsilon < 0 || in.diam_core < 0 || (in.eta && *in.eta < 0)) {
    throw PreconditionError("certified constants need nonnegative inputs");
  }
  if (in.n0 < 1) throw PreconditionError("n0 must be at least 1");
  if (in.generator_count < 1) throw PreconditionError("generator count must be positive");

  ConstantsLedger l;
  l.mode = LedgerMode::certified;
  l.delta_X = in.delta_X;
  l.epsilon = in.epsilon;
  l.eta = in.eta.value_or(in.delta_X);
  l.n0 = in.n0;
  l.diam_core = in.diam_core;
  l.generator_count = in.generator_count;
  l.geodesic_extension_adjusted = in.geodesic_extension_adjusted;
  for (const char* key : {"delta_X", "epsilon", "n0", "diam_core"}) l.provenance[key] = Provenance::user;
  l.provenance["eta"] = in.eta ? Provenance::user : Provenance::default_value;
  for (const auto& [k, v] : in.provenance) l.provenance[k] = v;

  derive_shared(l);
  const Rational base = 2 * (l.diam_core + l.alpha + l.epsilon) + 65 * l.delta_X;
  l.mu = 4 * base + l.delta_X;
  l.delta_XH = in.geodesic_extension_adjusted ? l.mu : base;
  l.M = ceil(43 * l.delta_XH + 4);
  l.R0 = ceil(Rational(l.M) + l.delta_XH);
  l.inner_offset = 3 * l.delta_XH;
  l.dag_offset = 8 * l.delta_XH;
  if (l.R0 <= kMaxExpandedR0) {
    l.outer_radius = l.R0 + ceil(10 * l.delta_X * Rational(pow_int(l.generator_count, static_cast<long>(l.R0))));
  }
  for (const char* key : {"M", "R0", "inner_offset", "dag_offset", "outer_radius"}) l.provenance[key] = Provenance::formula;
  return l;
}

ConstantsLedger derive_certified(const Rational& delta_X, const Rational& epsilon, const Rational& eta, int n0,
                                 const Rational& diam_core) {
  CertifiedInputs in;
  in.delta_X = delta_X;
  in.epsilon = epsilon;
  in.eta = eta;
  in.n0 = n0;
  in.diam_core = diam_core;
  return derive_certified(in);
}

ConstantsLedger empirical_ledger(const EmpiricalRadii& radii, const Estimates& estimates) {
  if (radii.inner_offset < 0) throw PreconditionError("inner offset must be nonnegative");
  if (radii.inner_offset >= radii.R0) throw PreconditionError("inner offset must be smaller than R0");
  if (radii.outer_radius <= radii.R0) throw PreconditionError("outer radius must exceed R0");

  ConstantsLedger l;
  l.mode = LedgerMode::empirical;
  l.delta_X = estimates.delta_X;
  l.epsilon = estimates.epsilon;
  l.eta = estimates.delta_X;
  l.diam_core = estimates.diam_core;
  l.provenance["delta_X"] = estimates.delta_source;
  l.provenance["epsilon"] = estimates.epsilon_source;
  l.provenance["diam_core"] = estimates.diam_source;
  l.provenance["eta"] = Provenance::default_value;
  l.provenance["n0"] = Provenance::default_value;
  derive_shared(l);
  l.delta_XH = 2 * (l.diam_core + l.alpha + l.epsilon) + 65 * l.delta_X;
  l.mu = 4 * l.delta_XH + l.delta_X;

  l.R0 = radii.R0;
  l.inner_offset = radii.inner_offset;
  l.outer_radius = BigInt(radii.outer_radius);
  l.M = radii.M.value_or(radii.R0);
  l.dag_offset = radii.dag_offset.value_or(radii.inner_offset);
  for (const char* key : {"R0", "inner_offset", "outer_radius"}) l.provenance[key] = Provenance::user;
  l.provenance["M"] = radii.M ? Provenance::user : Provenance::default_value;
  l.provenance["dag_offset"] = radii.dag_offset ? Provenance::user : Provenance::default_value;
  return l;
}

nlohmann::json to_json(const ConstantsLedger& l) {
  nlohmann::json j;
  j["mode"] = to_string(l.mode);
  j["delta_X"] = to_string(l.delta_X);
  j["epsilon"] = to_string(l.epsilon);
  j["eta"] = to_string(l.eta);
  j["tau"] = to_string(l.tau);
  j["n0"] = l.n0;
  j["alpha"] = to_string(l.alpha);
  j["diam_core"] = to_string(l.diam_core);
  j["rho"] = to_string(l.rho);
  j["delta_XH"] = to_string(l.delta_XH);
  j["mu"] = to_string(l.mu);
  j["M"] = l.M.str();
  j["R0"] = l.R0.str();
  j["inner_offset"] = to_string(l.inner_offset);
  j["dag_offset"] = to_string(l.dag_offset);
  j["outer_radius"] = l.outer_radius ? nlohmann::json(l.outer_radius->str()) : nlohmann::json(nullptr);
  j["generator_count"] = l.generator_count;
  j["geodesic_extension_adjusted"] = l.geodesic_extension_adjusted;
  nlohmann::json prov = nlohmann::json::object();
  for (const auto& [k, v] : l.provenance) prov[k] = to_string(v);
  j["provenance"] = prov;
  return j;
}

ConstantsLedger ledger_from_json(const nlohmann::json& j) {
  try {
    ConstantsLedger l;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "certified" && mode != "empirical") throw ParseError("unknown ledger mode '" + mode + "'");
    l.mode = mode == "certified" ? LedgerMode::certified : LedgerMode::empirical;
    const auto q = [&](const char* key) { return parse_rational(j.at(key).get<std::string>()); };
    const auto z = [&](const char* key) { return BigInt(j.at(key).get<std::string>()); };
    l.delta_X = q("delta_X");
    l.epsilon = q("epsilon");
    l.eta = q("eta");
    l.tau = q("tau");
    l.n0 = j.at("n0").get<int>();
    l.alpha = q("alpha");
    l.diam_core = q("diam_core");
    l.rho = q("rho");
    l.delta_XH = q("delta_XH");
    l.mu = q("mu");
    l.M = z("M");
    l.R0 = z("R0");
    l.inner_offset = q("inner_offset");
    l.dag_offset = q("dag_offset");
    if (!j.at("outer_radius").is_null()) l.outer_radius = z("outer_radius");
    l.generator_count = j.at("generator_count").get<int>();
    l.geodesic_extension_adjusted = j.at("geodesic_extension_adjusted").get<bool>();
    for (const auto& [k, v] : j.at("provenance").items()) l.provenance[k] = parse_provenance(v.get<std::string>());
    return l;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ledger JSON: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    throw ParseError(std::string("malformed number in ledger JSON: ") + e.what());
  }
}

}  // namespace ends
