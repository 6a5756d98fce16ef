#include "spinoptics/polarization.hpp"

#include <algorithm>
#include <sstream>

namespace spinoptics {

namespace {
const complex kI(0.0, 1.0);

void require_valid_state(const Real3& u, const Complex3& e, double tol) {
    const ConstraintResiduals r = constraint_residuals(u, e);
    if (r.max() > tol) {
        std::ostringstream os;
        os << "state violates constraints: |<u,u>-1| = " << r.unit_u
           << ", |<conj e,e>-1| = " << r.unit_e << ", |<u,e>| = " << r.ortho_ue;
        throw ConstraintViolation(os.str());
    }
}
}  // namespace

double ConstraintResiduals::max() const { return std::max({unit_u, unit_e, ortho_ue}); }

ConstraintResiduals constraint_residuals(const Real3& u, const Complex3& e) {
    ConstraintResiduals r;
    r.unit_u = std::abs(dot(u, u) - 1.0);
    r.unit_e = std::abs(hdot(e, e).real() - 1.0);
    r.ortho_ue = std::abs(dot(Complex3(u), e));
    return r;
}

double PolarizationProjector::idempotency_residual() const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            complex sq{};
            for (int k = 0; k < 3; ++k) sq += pi.m[i][k] * pi.m[k][j];
            worst = std::max(worst, std::abs(sq - pi.m[i][j]));
        }
    }
    return worst;
}

double PolarizationProjector::hermiticity_residual() const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(pi.m[i][j] - std::conj(pi.m[j][i])));
    return worst;
}

double spin(const Real3& u, const Complex3& e, double hbar, double tol) {
    require_valid_state(u, e, tol);
    const complex s = (hbar / kI) * dot(Complex3(u), complex_cross(conj(e), e));
    return s.real();
}

int helicity(const Real3& u, const Complex3& e, double tol, double linear_tol) {
    require_valid_state(u, e, tol);
    const Complex3 ebe = complex_cross(conj(e), e);
    if (hnorm(ebe) < linear_tol) return 0;
    const double s = ((1.0 / kI) * dot(Complex3(u), ebe)).real();
    return s > 0.0 ? +1 : -1;
}

PolarizationClass classify(const Real3& u, const Complex3& e, double tol) {
    require_valid_state(u, e, tol);
    PolarizationClass c;
    if (std::abs(dot(e, e)) < tol) {
        c.tag = PolarizationClass::Tag::Circular;
        c.chi = helicity(u, e, tol);
    } else if (hnorm(complex_cross(conj(e), e)) < tol) {
        c.tag = PolarizationClass::Tag::Linear;
        c.chi = 0;
    } else {
        c.tag = PolarizationClass::Tag::Elliptic;
        c.chi = helicity(u, e, tol);
    }
    return c;
}

std::pair<Real3, Complex3> jones_to_polarization(const IsotropicFrame& f, const JonesVector& psi,
                                                 double tol) {
    if (std::abs(psi.norm2() - 1.0) > tol)
        throw NotNormalized("Jones vector is not on S^3");
    const Real3 u = direction_of_frame(f, tol);
    const Complex3 e = psi.psi_plus * f.z + psi.psi_minus * conj(f.z);
    return {u, e};
}

JonesVector polarization_to_jones(const IsotropicFrame& f, const Complex3& e, double tol) {
    if (std::abs(hdot(e, e).real() - 1.0) > tol)
        throw NotNormalized("polarization vector is not unit");
    JonesVector psi;
    psi.psi_plus = hdot(f.z, e);
    psi.psi_minus = dot(f.z, e);
    const Complex3 back = psi.psi_plus * f.z + psi.psi_minus * conj(f.z);
    if (hnorm(e - back) > tol)
        throw OutOfPlane("polarization vector is not in span{z, conj(z)}");
    return psi;
}

StokesVector stokes(const JonesVector& psi, double hbar, double tol) {
    if (std::abs(psi.norm2() - 1.0) > tol)
        throw NotNormalized("Jones vector is not on S^3");
    const complex w = std::conj(psi.psi_plus) * psi.psi_minus;
    StokesVector s;
    s.s1 = hbar * 2.0 * w.real();
    s.s2 = hbar * 2.0 * w.imag();
    s.s3 = hbar * (std::norm(psi.psi_plus) - std::norm(psi.psi_minus));
    return s;
}

PolarizationProjector projector(const Complex3& e, double tol) {
    if (std::abs(hdot(e, e).real() - 1.0) > tol)
        throw NotNormalized("polarization vector is not unit");
    PolarizationProjector p;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            p.pi.m[i][j] = e[i] * std::conj(e[j]);
    return p;
}

double spin_from_projector(const PolarizationProjector& p, const Real3& u, double hbar) {
    // j(u) in matrix form
    const double j[3][3] = {{0.0, -u.x3, u.x2}, {u.x3, 0.0, -u.x1}, {-u.x2, u.x1, 0.0}};
    complex tr{};
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            tr += p.pi.m[a][b] * j[b][a];
    return hbar * (kI * tr).real();
}

}  // namespace spinoptics
