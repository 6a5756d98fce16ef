/*
 * polarization.hpp — polarization observables on the transverse plane.
 *
 * States are pairs (u, e): a real unit direction u and a complex unit
 * polarization vector e with dot(u,e) = 0. The spin function
 *
 *     s = (hbar/i) <u, conj(e) x e>      in [-hbar, +hbar]
 *
 * measures circular content: +-hbar circular, 0 linear. On the transverse
 * plane e decomposes on the circular basis (z, conj(z)) of an isotropic
 * frame as e = psi_plus z + psi_minus conj(z); psi is the Jones vector and
 * its Pauli expectations hbar psi^* sigma_k psi form the Stokes vector.
 */
#pragma once

#include <complex>

#include "spinoptics/geometry.hpp"

namespace spinoptics {

struct JonesVector {
    complex psi_plus{}, psi_minus{};

    double norm2() const { return std::norm(psi_plus) + std::norm(psi_minus); }
};

struct StokesVector {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;  // units of hbar

    double norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }
};

// minimal 3x3 complex matrix, row-major
struct Mat3c {
    complex m[3][3]{};

    complex operator()(int i, int j) const { return m[i][j]; }
    complex& operator()(int i, int j) { return m[i][j]; }

    Complex3 apply(const Complex3& v) const {
        Complex3 r;
        for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        return r;
    }
    complex trace() const { return m[0][0] + m[1][1] + m[2][2]; }
};

// Hermitian rank-one projector pi = e e^*
struct PolarizationProjector {
    Mat3c pi;

    double idempotency_residual() const;  // ||pi^2 - pi||_max
    double hermiticity_residual() const;  // ||pi - pi^*||_max
    double trace_residual() const { return std::abs(pi.trace() - 1.0); }
    double kernel_residual(const Real3& u) const { return hnorm(pi.apply(Complex3(u))); }
};

struct PolarizationClass {
    enum class Tag { Circular, Linear, Elliptic };
    Tag tag = Tag::Linear;
    int chi = 0;  // helicity, +-1; 0 for Linear
};

// s = (hbar/i) <u, conj(e) x e>. Throws ConstraintViolation if (u,e) violate
// the unit/orthogonality constraints beyond tol.
double spin(const Real3& u, const Complex3& e, double hbar = 1.0,
            double tol = constraint_tolerance());

// sign of the spin; 0 when ||conj(e) x e|| < linear_tol (linear polarization)
int helicity(const Real3& u, const Complex3& e, double tol = constraint_tolerance(),
             double linear_tol = 1e-9);

// Circular if |<e,e>| < tol, Linear if ||conj(e) x e|| < tol, Elliptic otherwise
PolarizationClass classify(const Real3& u, const Complex3& e,
                           double tol = constraint_tolerance());

// u = (conj(z) x z)/i, e = psi_plus z + psi_minus conj(z)
std::pair<Real3, Complex3> jones_to_polarization(const IsotropicFrame& f, const JonesVector& psi,
                                                 double tol = constraint_tolerance());

// psi_plus = <conj(z), e>, psi_minus = <z, e>; throws OutOfPlane if e does not
// lie in span{z, conj(z)}
JonesVector polarization_to_jones(const IsotropicFrame& f, const Complex3& e,
                                  double tol = constraint_tolerance());

// s_k = hbar psi^* sigma_k psi, standard Pauli ordering with sigma_3 diagonal
StokesVector stokes(const JonesVector& psi, double hbar = 1.0,
                    double tol = constraint_tolerance());

PolarizationProjector projector(const Complex3& e, double tol = constraint_tolerance());

// spin recovered from the projector: hbar Tr(i pi j(u)), j(u) v = u x v
double spin_from_projector(const PolarizationProjector& p, const Real3& u, double hbar = 1.0);

// residuals of the evolution-space constraints <u,u> = 1, <conj e,e> = 1,
// <u,e> = 0 (Euclidean form)
struct ConstraintResiduals {
    double unit_u = 0.0;
    double unit_e = 0.0;
    double ortho_ue = 0.0;

    double max() const;
};
ConstraintResiduals constraint_residuals(const Real3& u, const Complex3& e);

}  // namespace spinoptics
