#ifndef POINTINT_YOPS_HPP
#define POINTINT_YOPS_HPP

#include "pointint/contact_params.hpp"
#include "pointint/spinspace.hpp"

namespace pointint {

// Two-body exchange operator attached to the adjacent pair (pair, pair+1).
//
// k_diff is the full momentum difference between the exchanged labels,
// in source order: swapping the pair (u, v) at sites (i, i+1) into (v, u)
// sends the coefficient through Y built at k_diff = k_u - k_v. The closed
// forms halve k_diff internally where they are written in terms of the
// half difference.
struct YOperator {
    SpinSystem system;
    int pair = 1; // acts on sites (pair, pair+1), 1-based
    Complex k_diff{};
    Matrix matrix;
};

// General nonseparated closed form,
//   Y = [2i e^{i theta} k12 P + i k12 (a-d) + k12^2 b + c]
//       / [i k12 (a+d) + k12^2 b - c],          k12 = k_diff / 2.
YOperator y_nonseparated(const NonSeparatedParams& params, Complex k_diff,
                         const SpinSystem& system, int pair);

// Separated closed form, scalar times identity:
//   Y = (i k_diff + 2h) / (i k_diff - 2h);  h = infinity gives exactly -1.
YOperator y_separated(const SeparatedParams& params, Complex k_diff,
                      const SpinSystem& system, int pair);

// Dispatch to the family closed forms:
//   delta:      Y = [i k_diff P + c] / [i k_diff - c]
//   anti-delta: Y = -[i k_diff P + c] / [i k_diff + c]
//   separated:  as y_separated.
YOperator y_family(const IntegrableFamily& family, Complex k_diff,
                   const SpinSystem& system, int pair);

// Same closed forms evaluated with the (i, j) swap in place of the adjacent
// one; this is how X_{ij} acts on non-adjacent tensor factors.
Matrix y_pair_matrix(const IntegrableFamily& family, Complex k_diff,
                     const SpinSystem& system, int site_i, int site_j);
Matrix y_pair_matrix(const ContactParams& params, Complex k_diff,
                     const SpinSystem& system, int site_i, int site_j);

} // namespace pointint

#endif
