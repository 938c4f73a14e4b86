#include "kgt/green.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kgt/bessel.hpp"
#include "kgt/errors.hpp"

namespace kgt {

namespace {

constexpr double kPi = std::numbers::pi;

// J0(q s) continued in q^2: I0 branch when q_sq < 0.
double b0_branch(double q_sq, double s) {
    if (q_sq >= 0.0) return bessel_j0(std::sqrt(q_sq) * s);
    return bessel_i0(std::sqrt(-q_sq) * s);
}

// J1(z)/z continued in q^2 (z = q s); -> 1/2 as s -> 0 on both branches.
double r1_branch(double q_sq, double s) {
    if (q_sq >= 0.0) return bessel_j1_over_x(std::sqrt(q_sq) * s);
    return bessel_i1_over_x(std::sqrt(-q_sq) * s);
}

// J2(z)/z^2 continued in q^2; -> 1/8 as s -> 0.
double r2_branch(double q_sq, double s) {
    if (q_sq >= 0.0) return bessel_j2_over_x2(std::sqrt(q_sq) * s);
    return bessel_i2_over_x2(std::sqrt(-q_sq) * s);
}

} // namespace

void KGParams::validate() const {
    if (!(v > 0.0)) throw domain_error("KGParams: v must be > 0");
    if (!std::isfinite(q_sq)) throw domain_error("KGParams: q_sq must be finite");
}

ConeRegion classify(double r, double t, const KGParams& kg, double cone_eps) {
    kg.validate();
    if (r < 0.0) throw domain_error("classify: r must be >= 0");
    if (t < 0.0) throw domain_error("classify: t must be >= 0");
    const double rv = r / kg.v;
    const double d = t * t - rv * rv;
    if (d > cone_eps) return {ConeTag::Interior, d};
    if (d < -cone_eps) return {ConeTag::Exterior, d};
    return {ConeTag::OnCone, d};
}

ConeRegion classify(double r, double t, const KGParams& kg) {
    return classify(r, t, kg, default_cone_eps(t));
}

double green_1d(double x, double t, const KGParams& kg) {
    const ConeRegion region = classify(std::abs(x), t, kg);
    if (region.tag == ConeTag::Exterior) return 0.0;
    const double s = std::sqrt(std::max(region.cone_distance, 0.0));
    return b0_branch(kg.q_sq, s) / (2.0 * kg.v);
}

double green_1d_dt(double x, double t, const KGParams& kg) {
    const ConeRegion region = classify(std::abs(x), t, kg);
    if (region.tag == ConeTag::Exterior) return 0.0;
    const double s = std::sqrt(std::max(region.cone_distance, 0.0));
    return -kg.q_sq * t * r1_branch(kg.q_sq, s) / (2.0 * kg.v);
}

GreenEval3D green_3d(double r, double t, const KGParams& kg) {
    if (!(t > 0.0)) throw domain_error("green_3d: t must be > 0");
    const ConeRegion region = classify(r, t, kg);
    if (region.tag == ConeTag::Exterior) return {0.0, t};
    const double s = std::sqrt(std::max(region.cone_distance, 0.0));
    const double v3 = kg.v * kg.v * kg.v;
    return {-kg.q_sq / (4.0 * kPi * v3) * r1_branch(kg.q_sq, s), t};
}

double green_3d_regular_dt(double r, double t, const KGParams& kg) {
    if (!(t > 0.0)) throw domain_error("green_3d_regular_dt: t must be > 0");
    const ConeRegion region = classify(r, t, kg);
    if (region.tag == ConeTag::Exterior) return 0.0;
    const double s = std::sqrt(std::max(region.cone_distance, 0.0));
    const double v3 = kg.v * kg.v * kg.v;
    return kg.q_sq * kg.q_sq * t / (4.0 * kPi * v3) * r2_branch(kg.q_sq, s);
}

double green_3d_from_1d(double r, double t, const KGParams& kg, double h) {
    if (!(t > 0.0)) throw domain_error("green_3d_from_1d: t must be > 0");
    if (!(h > 0.0)) throw domain_error("green_3d_from_1d: h must be > 0");
    if (r < 0.0) throw domain_error("green_3d_from_1d: r must be >= 0");
    if (classify(r + h, t, kg).tag != ConeTag::Interior) {
        throw domain_error("green_3d_from_1d: stencil point r + h = " + std::to_string(r + h) +
                           " is not interior; point too close to the cone for step h");
    }
    if (r < h) {
        // r -> 0: G is even in r, so -(1/(2 pi r)) dG/dr -> -(1/(2 pi)) G''(0).
        const double g0 = green_1d(0.0, t, kg);
        const double gh = green_1d(h, t, kg);
        return -(gh - g0) / (kPi * h * h);
    }
    const double gp = green_1d(r + h, t, kg);
    const double gm = green_1d(r - h, t, kg);
    return -(gp - gm) / (2.0 * h) / (2.0 * kPi * r);
}

} // namespace kgt
