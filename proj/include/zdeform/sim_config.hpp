#pragma once

#include <map>
#include <optional>
#include <string>

#include "zdeform/poly.hpp"

namespace zdeform {

/// Normalized virtual-side parameters of the hybrid oscillator:
/// K = K_phys * T^2 / m, B = B_phys * T / m.
struct DiscreteParams {
    double K = 0.0;
    double B = 0.0;
};

enum class Provenance { builtin, file };

/// Which reading of the real-damping mass term to use. The literal printed
/// form z(z-1)*b0/(1-e^{-b0}) is degree 2 and loses the rigid-body double
/// pole; the reconstructed form z(z-1)(z-e^{-b0})*b0/(1-e^{-b0}) restores it
/// and converges to the unit-delay form as b0 -> 0. Reconstructed is the
/// default; both stay available for comparison.
enum class Variant { as_printed, reconstructed };

const char* variant_name(Variant v);
Variant variant_from_name(const std::string& name);

/// One simulator configuration, defined by the characteristic form
/// P(z)*K + Q(z)*B + R(z) = 0.
struct CharacteristicForm {
    std::string name;
    Polynomial P;
    Polynomial Q;
    Polynomial R;
    std::map<std::string, double> params;
    Provenance provenance = Provenance::builtin;
    std::optional<std::string> variant;
};

/// Built-in configurations: "no_delay", "unit_delay", "real_damping".
/// b0 and variant apply to real_damping only (b0 must be > 0).
/// Throws UnknownName / InvalidParam.
CharacteristicForm builtin_form(const std::string& name, double b0 = 0.5,
                                Variant variant = Variant::reconstructed);

/// K*P + B*Q + R as a single trimmed polynomial.
Polynomial assemble(const CharacteristicForm& f, const DiscreteParams& d);

/// Load a characteristic form from a JSON config file.
/// Throws ParseError (malformed), SchemaError (missing/mistyped field),
/// InvariantError (all-zero triple).
CharacteristicForm load_config(const std::string& path);

/// Write a form back to disk; coefficients are printed with 17 significant
/// digits so that save followed by load reproduces the triple bit-for-bit.
void save_config(const CharacteristicForm& f, const std::string& path);

/// Serialize a form to its config-file JSON text.
std::string config_to_json(const CharacteristicForm& f);

}  // namespace zdeform
