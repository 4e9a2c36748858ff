#include "casimir_knob/electrostatics.hpp"

#include <string>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

void require_exterior(double radius_m, double z, const char* where) {
  if (!(radius_m >= 0.0) || !(z > radius_m) || !std::isfinite(z)) {
    throw DomainError(std::string(where) + ": atom must lie outside the sphere (z_a > R)");
  }
}

double static_sphere(const DielectricModel& material, double radius_m) {
  return sphere_polarizability(material, radius_m, AngularFrequency{0.0}).value;
}

}  // namespace

FieldConfig FieldConfig::make(double magnitude_v_per_m, double theta_rad) {
  if (!(magnitude_v_per_m >= 0.0) || !std::isfinite(magnitude_v_per_m)) {
    throw DomainError("FieldConfig: field magnitude must be finite and >= 0");
  }
  if (!std::isfinite(theta_rad)) throw DomainError("FieldConfig: theta must be finite");
  constexpr double two_pi = 2.0 * kPi;
  double t = std::fmod(theta_rad, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t = 0.0;
  return FieldConfig{magnitude_v_per_m, t};
}

Vector3 sphere_field_at_atom(const DielectricModel& material, double radius_m,
                             double center_distance_m, const FieldConfig& field) {
  require_exterior(radius_m, center_distance_m, "sphere_field_at_atom");
  const double z = center_distance_m;
  const double s = static_sphere(material, radius_m) / (kFourPiEps0 * z * z * z);
  const Vector3 e0 = field.vector();
  return s * (3.0 * e0.z * kUnitZ - e0);
}

Vector3 induced_atomic_dipole(Polarizability atom_static, const DielectricModel& material,
                              double radius_m, double center_distance_m, const FieldConfig& field) {
  require_exterior(radius_m, center_distance_m, "induced_atomic_dipole");
  const double z = center_distance_m;
  const double s = static_sphere(material, radius_m) / (kFourPiEps0 * z * z * z);
  const double a = atom_static.value;
  const Vector3 e0 = field.vector();
  return (a * (1.0 - s)) * e0 + (3.0 * a * s * field.magnitude * std::cos(field.theta)) * kUnitZ;
}

Vector3 dipole_dipole_force(Vector3 p, Vector3 p_prime, Vector3 r_hat, double r) {
  if (std::abs(r_hat.norm() - 1.0) > 1e-12) {
    throw DomainError("dipole_dipole_force: r_hat must be a unit vector");
  }
  if (!(r > 0.0)) throw DomainError("dipole_dipole_force: r must be > 0");
  const double pr = p.dot(r_hat);
  const double ppr = p_prime.dot(r_hat);
  const double r2 = r * r;
  const double scale = 1.0 / (kFourPiEps0 * r2 * r2);
  return scale * (3.0 * pr * p_prime + 3.0 * ppr * p + 3.0 * p.dot(p_prime) * r_hat -
                  15.0 * pr * ppr * r_hat);
}

double electrostatic_force_z(Polarizability atom_static, const DielectricModel& material,
                             double radius_m, double center_distance_m, const FieldConfig& field) {
  require_exterior(radius_m, center_distance_m, "electrostatic_force_z");
  const double z = center_distance_m;
  const double alpha_s = static_sphere(material, radius_m);
  const double s = alpha_s / (kFourPiEps0 * z * z * z);
  const double c = std::cos(field.theta);
  const double z2 = z * z;
  const double e2 = field.magnitude * field.magnitude;
  return 3.0 * atom_static.value * alpha_s * e2 / (kFourPiEps0 * z2 * z2) *
         (1.0 - s - 3.0 * c * c * (1.0 + s));
}

double electrostatic_force_z_small_sphere(Polarizability atom_static, Polarizability sphere_static,
                                          double center_distance_m, const FieldConfig& field) {
  if (!(center_distance_m > 0.0)) {
    throw DomainError("electrostatic_force_z_small_sphere: z_a must be > 0");
  }
  const double z2 = center_distance_m * center_distance_m;
  const double c = std::cos(field.theta);
  const double e2 = field.magnitude * field.magnitude;
  return 3.0 * atom_static.value * sphere_static.value * e2 / (kFourPiEps0 * z2 * z2) *
         (1.0 - 3.0 * c * c);
}

double zero_force_angle(const DielectricModel& material, double radius_m,
                        double center_distance_m) {
  require_exterior(radius_m, center_distance_m, "zero_force_angle");
  const double z = center_distance_m;
  const double s = static_sphere(material, radius_m) / (kFourPiEps0 * z * z * z);
  return std::acos(std::sqrt((1.0 - s) / (3.0 * (1.0 + s))));
}

}  // namespace casimir_knob
