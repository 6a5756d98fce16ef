/*
 * geometry.hpp — real and complex 3-vector algebra.
 *
 * The Euclidean scalar product is extended C-bilinearly to C^3 (no
 * conjugation): dot(a,b) = sum_i a_i b_i. Hermitian quantities are formed
 * explicitly, e.g. dot(conj(a), a). The cross product is likewise extended
 * C-linearly.
 *
 * An IsotropicFrame is a complex 3-vector z with dot(z,z) = 0 and
 * dot(conj(z),z) = 1; such z encode oriented orthonormal frames, and
 * u = (conj(z) x z)/i is the real unit vector the frame points along.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "spinoptics/errors.hpp"

namespace spinoptics {

using complex = std::complex<double>;

// Global constraint tolerance (relative). Overridable at runtime; the CLI
// maps the SPINOPTICS_TOL environment variable onto this.
double constraint_tolerance();
void set_constraint_tolerance(double tol);

struct Real3 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    constexpr Real3() = default;
    constexpr Real3(double a, double b, double c) : x1(a), x2(b), x3(c) {}

    double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

    Real3 operator+(const Real3& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    Real3 operator-(const Real3& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
    Real3 operator-() const { return {-x1, -x2, -x3}; }
    Real3 operator*(double s) const { return {x1 * s, x2 * s, x3 * s}; }
    Real3 operator/(double s) const { return {x1 / s, x2 / s, x3 / s}; }
    Real3& operator+=(const Real3& o) { x1 += o.x1; x2 += o.x2; x3 += o.x3; return *this; }
    Real3& operator-=(const Real3& o) { x1 -= o.x1; x2 -= o.x2; x3 -= o.x3; return *this; }
    Real3& operator*=(double s) { x1 *= s; x2 *= s; x3 *= s; return *this; }

    static constexpr Real3 e1() { return {1.0, 0.0, 0.0}; }
    static constexpr Real3 e2() { return {0.0, 1.0, 0.0}; }
    static constexpr Real3 e3() { return {0.0, 0.0, 1.0}; }
};

inline Real3 operator*(double s, const Real3& v) { return v * s; }

struct Complex3 {
    complex z1{}, z2{}, z3{};

    constexpr Complex3() = default;
    constexpr Complex3(complex a, complex b, complex c) : z1(a), z2(b), z3(c) {}
    constexpr Complex3(const Real3& v) : z1(v.x1), z2(v.x2), z3(v.x3) {}  // NOLINT: implicit promotion intended

    complex operator[](int i) const { return i == 0 ? z1 : (i == 1 ? z2 : z3); }
    complex& operator[](int i) { return i == 0 ? z1 : (i == 1 ? z2 : z3); }

    Complex3 operator+(const Complex3& o) const { return {z1 + o.z1, z2 + o.z2, z3 + o.z3}; }
    Complex3 operator-(const Complex3& o) const { return {z1 - o.z1, z2 - o.z2, z3 - o.z3}; }
    Complex3 operator-() const { return {-z1, -z2, -z3}; }
    Complex3 operator*(complex s) const { return {z1 * s, z2 * s, z3 * s}; }
    Complex3 operator*(double s) const { return {z1 * s, z2 * s, z3 * s}; }
    Complex3 operator/(complex s) const { return {z1 / s, z2 / s, z3 / s}; }
    Complex3& operator+=(const Complex3& o) { z1 += o.z1; z2 += o.z2; z3 += o.z3; return *this; }

    Real3 real() const { return {z1.real(), z2.real(), z3.real()}; }
    Real3 imag() const { return {z1.imag(), z2.imag(), z3.imag()}; }
};

inline Complex3 operator*(complex s, const Complex3& v) { return v * s; }
inline Complex3 operator*(double s, const Complex3& v) { return v * s; }

// bilinear products
inline double dot(const Real3& a, const Real3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }
inline complex dot(const Complex3& a, const Complex3& b) { return a.z1 * b.z1 + a.z2 * b.z2 + a.z3 * b.z3; }

inline Complex3 conj(const Complex3& a) { return {std::conj(a.z1), std::conj(a.z2), std::conj(a.z3)}; }

// Hermitian pairing <conj(a), b> and norms
inline complex hdot(const Complex3& a, const Complex3& b) { return dot(conj(a), b); }
inline double norm(const Real3& v) { return std::sqrt(dot(v, v)); }
inline double hnorm2(const Complex3& v) { return std::norm(v.z1) + std::norm(v.z2) + std::norm(v.z3); }
inline double hnorm(const Complex3& v) { return std::sqrt(hnorm2(v)); }

inline Real3 cross(const Real3& a, const Real3& b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

// cross product C-linearly extended
inline Complex3 complex_cross(const Complex3& a, const Complex3& b) {
    return {a.z2 * b.z3 - a.z3 * b.z2, a.z3 * b.z1 - a.z1 * b.z3, a.z1 * b.z2 - a.z2 * b.z1};
}

inline Complex3 cross(const Complex3& a, const Complex3& b) { return complex_cross(a, b); }

inline Real3 normalized(const Real3& v) { return v / norm(v); }

// Some unit vector perpendicular to u (deterministic choice).
Real3 any_perpendicular(const Real3& u);

struct IsotropicFrame {
    Complex3 z;

    // residuals of dot(z,z) = 0 and dot(conj(z),z) = 1
    double isotropy_residual() const { return std::abs(dot(z, z)); }
    double normalization_residual() const { return std::abs(hdot(z, z) - 1.0); }
};

// u = (conj(z) x z)/i; throws NonIsotropicInput if the frame invariants are
// violated beyond tolerance. The imaginary residue is dropped after checking
// it is below tolerance.
Real3 direction_of_frame(const IsotropicFrame& f, double tol = constraint_tolerance());

// z = (v + i w)/sqrt(2) from an orthonormal real pair; throws NotOrthonormal.
IsotropicFrame frame_of_axes(const Real3& v, const Real3& w, double tol = constraint_tolerance());

}  // namespace spinoptics
