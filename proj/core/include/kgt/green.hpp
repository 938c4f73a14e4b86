#pragma once

namespace kgt {

/// Parameters of the undamped hyperbolic form u_tt - v^2 Lap(u) + q^2 u = 0.
struct KGParams {
    double v;     // m/s, wave speed (> 0)
    double q_sq;  // 1/s^2, may be negative (modified-Bessel regime)

    void validate() const;  // throws kgt::domain_error unless v > 0 and q_sq finite
};

enum class ConeTag { Interior, OnCone, Exterior };

/// Position of a spacetime point relative to the wave cone r = v t.
struct ConeRegion {
    ConeTag tag;
    double cone_distance;  // s^2, value of t^2 - r^2/v^2
};

/// Default cone classification band, relative so it is scale-free.
inline double default_cone_eps(double t) { return 1e-12 * t * t; }

/// Classifies (r, t) against the cone using cone_distance = t^2 - r^2/v^2:
/// Interior if > cone_eps, Exterior if < -cone_eps, OnCone otherwise.
/// Requires r >= 0 and t >= 0.
ConeRegion classify(double r, double t, const KGParams& kg, double cone_eps);
ConeRegion classify(double r, double t, const KGParams& kg);

/// 1D propagator (units s/m):
///   exterior            0 (bit-exact)
///   q_sq >= 0 inside    J0(q sqrt(t^2 - x^2/v^2)) / (2v)
///   q_sq <  0 inside    I0(|q| sqrt(t^2 - x^2/v^2)) / (2v)
/// Even in x; equals 1/(2v) on the cone and everywhere when q = 0.
double green_1d(double x, double t, const KGParams& kg);

/// Exact time derivative of green_1d at an interior/on-cone point,
/// -q_sq * t * [J1(z)/z] / (2v) with z = q sqrt(t^2 - x^2/v^2)
/// (I1 branch for q_sq < 0).  Zero outside the cone and for q = 0.
double green_1d_dt(double x, double t, const KGParams& kg);

/// The two pieces of the 3D propagator.
///
/// `regular` is the smooth interior term of units s/m^3,
///   -q_sq/(4 pi v^3) * J1(z)/z,  z = q sqrt(t^2 - r^2/v^2)
/// (I1 branch with the sign carried by -q_sq when q_sq < 0; the small-z
/// limit is -q_sq/(8 pi v^3) on the cone).  Zero outside the cone, and
/// identically zero when q = 0.
///
/// `cone_layer_coefficient` represents the singular surface term
/// delta(v^2 t^2 - r^2)/(2 pi v): acting on data f it contributes
/// cone_layer_coefficient * (spherical mean of f over the sphere of
/// radius v t), and equals t for every t > 0.  It is never sampled
/// pointwise.
struct GreenEval3D {
    double regular;
    double cone_layer_coefficient;
};

/// Requires t > 0, r >= 0.
GreenEval3D green_3d(double r, double t, const KGParams& kg);

/// Time derivative of the regular part at an interior/on-cone point:
///   q_sq^2 * t/(4 pi v^3) * J2(z)/z^2   (I2 branch for q_sq < 0),
/// with the 1/8 small-z limit.  Used by the 3D initial-value assembly.
double green_3d_regular_dt(double r, double t, const KGParams& kg);

/// Finite-difference oracle for the 3D regular part via the radial relation
///   regular(r, t) = -(1/(2 pi r)) d/dr green_1d(r, t),
/// centered step h.  Requires an interior point with the whole stencil
/// inside the cone; r < h switches to the even-extension second difference
/// (the r -> 0 limit).  Oracle use only, not a primary evaluator.
double green_3d_from_1d(double r, double t, const KGParams& kg, double h);

} // namespace kgt
