#include "spinoptics/geometry.hpp"

#include <atomic>
#include <sstream>

namespace spinoptics {

namespace {
std::atomic<double> g_tol{1e-9};
}

double constraint_tolerance() { return g_tol.load(std::memory_order_relaxed); }

void set_constraint_tolerance(double tol) { g_tol.store(tol, std::memory_order_relaxed); }

Real3 any_perpendicular(const Real3& u) {
    // pick the coordinate axis least aligned with u, then Gram-Schmidt
    const double a1 = std::abs(u.x1), a2 = std::abs(u.x2), a3 = std::abs(u.x3);
    Real3 axis = Real3::e1();
    if (a2 <= a1 && a2 <= a3) axis = Real3::e2();
    else if (a3 <= a1 && a3 <= a2) axis = Real3::e3();
    const Real3 p = axis - u * (dot(axis, u) / dot(u, u));
    return normalized(p);
}

Real3 direction_of_frame(const IsotropicFrame& f, double tol) {
    const double r_iso = f.isotropy_residual();
    const double r_norm = f.normalization_residual();
    if (r_iso > tol || r_norm > tol) {
        std::ostringstream os;
        os << "frame is not isotropic/normalized: |<z,z>| = " << r_iso
           << ", |<conj z,z> - 1| = " << r_norm;
        throw NonIsotropicInput(os.str());
    }
    const Complex3 u_c = complex_cross(conj(f.z), f.z) / complex(0.0, 1.0);
    const Real3 residue = u_c.imag();
    if (norm(residue) > tol) {
        std::ostringstream os;
        os << "direction has imaginary residue " << norm(residue);
        throw NonIsotropicInput(os.str());
    }
    return u_c.real();
}

IsotropicFrame frame_of_axes(const Real3& v, const Real3& w, double tol) {
    const double rv = std::abs(dot(v, v) - 1.0);
    const double rw = std::abs(dot(w, w) - 1.0);
    const double rvw = std::abs(dot(v, w));
    if (rv > tol || rw > tol || rvw > tol) {
        std::ostringstream os;
        os << "axes not orthonormal: |<v,v>-1| = " << rv << ", |<w,w>-1| = " << rw
           << ", |<v,w>| = " << rvw;
        throw NotOrthonormal(os.str());
    }
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Complex3 z;
    z.z1 = complex(v.x1, w.x1) * inv_sqrt2;
    z.z2 = complex(v.x2, w.x2) * inv_sqrt2;
    z.z3 = complex(v.x3, w.x3) * inv_sqrt2;
    return IsotropicFrame{z};
}

}  // namespace spinoptics
