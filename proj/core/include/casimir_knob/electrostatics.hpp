#pragma once

#include <cmath>

#include "casimir_knob/response.hpp"

namespace casimir_knob {

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vector3 operator+(Vector3 a, Vector3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vector3 operator-(Vector3 a, Vector3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vector3 operator*(double s, Vector3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vector3 operator*(Vector3 v, double s) { return s * v; }
  friend constexpr bool operator==(Vector3, Vector3) = default;

  constexpr double dot(Vector3 o) const { return x * o.x + y * o.y + z * o.z; }
  double norm() const { return std::sqrt(dot(*this)); }
};

inline constexpr Vector3 kUnitZ{0.0, 0.0, 1.0};

/// Uniform applied field of magnitude E0 (V/m) tilted by theta0 from the z
/// axis, lying in the x-z plane.
struct FieldConfig {
  double magnitude = 0.0;  // V/m
  double theta = 0.0;      // rad, in [0, 2 pi)

  /// Throws DomainError for negative or non-finite E0; theta is wrapped
  /// into [0, 2 pi).
  static FieldConfig make(double magnitude_v_per_m, double theta_rad);

  Vector3 vector() const { return {magnitude * std::sin(theta), 0.0, magnitude * std::cos(theta)}; }
};

// All functions below use static (xi = 0) polarizabilities and require the
// atom outside the sphere, z_a > R (DomainError otherwise).

/// Exterior field of the polarized sphere at the atom:
/// alpha_s / (4 pi eps0) (3 E0 cos(theta0) z_hat - E0) / z_a^3.
Vector3 sphere_field_at_atom(const DielectricModel& material, double radius_m,
                             double center_distance_m, const FieldConfig& field);

/// p_a = alpha_a [E0 + E_s(r_a)].
Vector3 induced_atomic_dipole(Polarizability atom_static, const DielectricModel& material,
                              double radius_m, double center_distance_m, const FieldConfig& field);

/// Force on dipole p at r = r r_hat exerted by dipole p_prime at the origin:
/// [3(p.r)p' + 3(p'.r)p + 3(p.p')r - 15(p.r)(p'.r)r] / (4 pi eps0 r^4).
/// Throws DomainError if |r_hat| differs from 1 by more than 1e-12 or r <= 0.
Vector3 dipole_dipole_force(Vector3 p, Vector3 p_prime, Vector3 r_hat, double r);

/// z-force on the atom, closed form:
/// 3 alpha_a alpha_s E0^2 / (4 pi eps0 z^4) [1 - s - 3 cos^2(theta0)(1 + s)],
/// s = alpha_s / (4 pi eps0 z^3).
double electrostatic_force_z(Polarizability atom_static, const DielectricModel& material,
                             double radius_m, double center_distance_m, const FieldConfig& field);

/// Same with the O((R/z)^3) corrections dropped:
/// 3 alpha_a alpha_s E0^2 / (4 pi eps0 z^4) (1 - 3 cos^2(theta0)).
double electrostatic_force_z_small_sphere(Polarizability atom_static, Polarizability sphere_static,
                                          double center_distance_m, const FieldConfig& field);

/// Angle in [0, pi/2] at which electrostatic_force_z vanishes, from
/// cos^2(theta) = (1 - s) / (3 (1 + s)).
double zero_force_angle(const DielectricModel& material, double radius_m,
                        double center_distance_m);

}  // namespace casimir_knob
