#include "kgt/physical_params.hpp"

#include <cmath>

#include "kgt/errors.hpp"

namespace kgt {

void PhysicalParams::validate() const {
    if (!(mass > 0.0)) throw domain_error("PhysicalParams: mass must be > 0");
    if (!(alpha > 0.0)) throw domain_error("PhysicalParams: alpha must be > 0");
    if (!(c > 0.0)) throw domain_error("PhysicalParams: c must be > 0");
    if (!(v0 >= 0.0)) throw domain_error("PhysicalParams: v0 must be >= 0");
    if (!(epsilon0 > 0.0)) throw domain_error("PhysicalParams: epsilon0 must be > 0");
    if (!(hbar > 0.0)) throw domain_error("PhysicalParams: hbar must be > 0");
}

double wave_speed(const PhysicalParams& p) {
    p.validate();
    return p.alpha * p.c;
}

double relaxation_time(const PhysicalParams& p) {
    p.validate();
    const double v = p.alpha * p.c;
    return p.hbar / (p.mass * v * v);
}

double q_squared(const PhysicalParams& p) {
    p.validate();
    const double v = p.alpha * p.c;
    const double mv2 = p.mass * v * v;
    // 2 V0 m v^2 / hbar^2 - (m v^2 / (2 hbar))^2; negative when V0 < m v^2 / 8.
    const double half_rate = mv2 / (2.0 * p.hbar);  // = 1/(2 tau)
    return 2.0 * p.v0 * mv2 / (p.hbar * p.hbar) - half_rate * half_rate;
}

double conductivity(const PhysicalParams& p) {
    p.validate();
    const double v = p.alpha * p.c;
    return p.epsilon0 * p.mass * v * v / p.hbar;
}

double de_broglie_wavelength(const PhysicalParams& p) {
    p.validate();
    return p.hbar / (p.mass * p.alpha * p.c);
}

IdentityCheck conductivity_identity_check(const PhysicalParams& p,
                                          std::optional<double> lambda_b_override) {
    const double direct = conductivity(p);
    const double lambda_b = lambda_b_override.value_or(de_broglie_wavelength(p));
    const double via_wavelength = p.epsilon0 * p.alpha * p.c / lambda_b;
    const double residual = std::abs(direct - via_wavelength) / std::abs(direct);
    return {residual <= 1e-12, residual};
}

DerivedParams derive(const PhysicalParams& p) {
    return DerivedParams{
        wave_speed(p), relaxation_time(p), q_squared(p),
        conductivity(p), de_broglie_wavelength(p),
    };
}

} // namespace kgt
