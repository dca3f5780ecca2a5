// Parameter validation and the dressed frame.

#include "oqb/model.hpp"

#include <string>

#include "oqb/errors.hpp"

namespace oqb {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ConfigError(what);
}

bool finite(double x) { return std::isfinite(x); }

} // namespace

SystemParams validate(const SystemParams& p) {
    require(finite(p.delta_A) && finite(p.delta_B) && finite(p.delta_L),
            "detunings must be finite");
    require(finite(p.omega_drive) && p.omega_drive >= 0.0, "omega_drive must be >= 0");
    require(finite(p.lambda) && p.lambda > 0.0, "lambda must be > 0");
    require(finite(p.alpha_T) && p.alpha_T > 0.0, "alpha_T must be > 0");
    require(finite(p.r1) && p.r1 >= 0.0 && p.r1 <= 1.0, "r1 out of [0,1]");
    require(finite(p.R) && p.R >= 0.0, "R must be >= 0");
    const double rr = p.r1 * p.r1 + p.r2() * p.r2();
    require(std::abs(rr - 1.0) <= 1e-12, "relative couplings not normalized");
    const double norm = std::norm(p.c01) + std::norm(p.c02);
    require(std::isfinite(norm) && std::abs(norm - 1.0) <= 1e-12,
            "initial state not normalized");
    return p;
}

DressedQubit dress_qubit(double delta, double omega_drive) {
    DressedQubit q;
    if (delta == 0.0 && omega_drive == 0.0) return q;
    q.eta = std::atan2(2.0 * omega_drive, delta);
    q.chi = std::hypot(delta, 2.0 * omega_drive);
    q.cos2 = 0.5 * (1.0 + std::cos(q.eta));
    return q;
}

DressedFrame dressed_frame(const SystemParams& p) {
    DressedFrame f;
    f.A = dress_qubit(p.delta_A, p.omega_drive);
    f.B = dress_qubit(p.delta_B, p.omega_drive);
    f.W = p.R * p.lambda / p.alpha_T;
    return f;
}

} // namespace oqb
