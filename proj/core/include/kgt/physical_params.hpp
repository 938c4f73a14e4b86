#pragma once

#include <optional>

namespace kgt {

/// Fundamental inputs of the heat-carrier model, strict SI.
///
/// Defaults are CODATA 2018 with the electron as the carrier ("heaton"):
/// the interaction speed is v = alpha*c and the relaxation time
/// tau = hbar/(m alpha^2 c^2) ~ 2.4e-17 s.
struct PhysicalParams {
    double mass     = 9.1093837015e-31;  // kg, carrier mass m
    double alpha    = 7.2973525693e-3;   // fine-structure constant
    double c        = 2.99792458e8;      // m/s, speed of light
    double v0       = 0.0;               // J, potential V0 (>= 0)
    double epsilon0 = 8.8541878128e-12;  // F/m, vacuum permittivity
    double hbar     = 1.054571817e-34;   // J*s, reduced Planck constant

    /// Throws kgt::domain_error unless mass, alpha, c, epsilon0, hbar > 0 and v0 >= 0.
    void validate() const;
};

/// Derived chain computed from PhysicalParams.
struct DerivedParams {
    double v;         // m/s, interaction speed alpha*c
    double tau;       // s, relaxation time hbar/(m v^2)
    double q_sq;      // 1/s^2, may be negative; sign is preserved
    double sigma0;    // 1/(Ohm*m), inner-atomic conductivity
    double lambda_b;  // m, de Broglie wavelength of the carrier
};

struct IdentityCheck {
    bool ok;
    double relative_residual;
};

double wave_speed(const PhysicalParams& p);            // alpha * c
double relaxation_time(const PhysicalParams& p);       // hbar / (m alpha^2 c^2)
double q_squared(const PhysicalParams& p);             // 2 V0 m v^2/hbar^2 - (m v^2/(2 hbar))^2
double conductivity(const PhysicalParams& p);          // epsilon0 m alpha^2 c^2 / hbar
double de_broglie_wavelength(const PhysicalParams& p); // hbar / (m alpha c)

/// Compares the two algebraic routes to sigma0:
///   direct      epsilon0 * m alpha^2 c^2 / hbar
///   wavelength  epsilon0 * alpha * c / lambda_b
/// They agree identically unless lambda_b is overridden (diagnostic mode).
IdentityCheck conductivity_identity_check(const PhysicalParams& p,
                                          std::optional<double> lambda_b_override = std::nullopt);

DerivedParams derive(const PhysicalParams& p);

} // namespace kgt
