#ifndef POINTINT_CONTACT_PARAMS_HPP
#define POINTINT_CONTACT_PARAMS_HPP

#include <optional>
#include <string>
#include <variant>

#include "pointint/spinspace.hpp"

namespace pointint {

// Nonseparated boundary conditions across a coincidence point:
//   (phi, phi')_{0+} = e^{i theta} [[a, b], [c, d]] (phi, phi')_{0-},
// with ad - bc = 1 and all parameters real.
struct NonSeparatedParams {
    double theta = 0.0;
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double determinant_residual() const { return a * d - b * c - 1.0; }
};

// Separated (one-sided Robin) boundary conditions phi'(0+-) = +-h phi(0+-).
// h may be +infinity (Dirichlet).
struct SeparatedParams {
    double h = 0.0;

    bool dirichlet() const;
};

// The three one-parameter integrable families.
struct Delta {
    double c = 0.0;
};
struct AntiDelta {
    double c = 0.0;
};
struct Separated {
    double h = 0.0;
};

using IntegrableFamily = std::variant<Delta, AntiDelta, Separated>;
using ContactParams = std::variant<NonSeparatedParams, SeparatedParams>;

std::string family_name(const IntegrableFamily& family);

// Delta(c) embeds as (theta=0, a=d=1, b=0, c); AntiDelta(c) as
// (theta=0, a=d=-1, b=0, c).
NonSeparatedParams embed(const Delta& family);
NonSeparatedParams embed(const AntiDelta& family);
ContactParams to_contact_params(const IntegrableFamily& family);

// Round-trip of the embedding: recognizes the delta/anti-delta points of the
// nonseparated manifold (exact match up to 1e-12).
std::optional<IntegrableFamily> classify_params(const NonSeparatedParams& params);

// Checks |ad - bc - 1| <= 1e-12 and normalizes theta into (-pi, pi].
// Throws ValidationError naming the residual otherwise.
NonSeparatedParams validate_nonseparated(const NonSeparatedParams& params);

// Enforces h_+ = -h_- (the two-body system is contradictory otherwise;
// infinity pairs with infinity). Returns Separated(h = h_+).
SeparatedParams validate_separated(double h_plus, double h_minus);

// Numerical oracle for the two-body relation alpha_21 = M alpha_12.
//
// Substituting the two-region Bethe form into the boundary conditions gives
// two block equations in which alpha_21 appears both bare and under P^{12}.
// The oracle treats (alpha_21, P^{12} alpha_21) as independent unknowns,
// moves the P^{12} alpha_12 terms onto the known side, and solves the
// resulting square 2n^2 x 2n^2 system by dense LU, one right-hand side per
// basis vector of alpha_12. No use is made of the closed-form Y; the system
// determinant vanishing signals the closed form's pole.
//
// k12 is the half momentum difference (k_1 - k_2)/2. system must have N = 2.
Matrix two_body_relation_oracle(const ContactParams& params, Complex k12,
                                const SpinSystem& system);

} // namespace pointint

#endif
