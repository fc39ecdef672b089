#include "sea/transvectant.hpp"

#include <string>

#include "sea/error.hpp"

namespace sea {

BinaryForm transvect(const BinaryForm& f, const BinaryForm& g, int r) {
    const int n = f.degree();
    const int m = g.degree();
    if (r < 0) throw PreconditionError("transvectant order must be nonnegative");
    if (r > n || r > m) {
        throw PreconditionError("transvectant order " + std::to_string(r) + " exceeds min degree of (" +
                                std::to_string(n) + ", " + std::to_string(m) + ")");
    }
    if (f.disc() != 0 && g.disc() != 0 && f.disc() != g.disc()) {
        throw FieldMismatchError("transvectant of forms over different quadratic extensions");
    }
    BinaryForm acc(n + m - 2 * r);
    if (f.is_zero() || g.is_zero()) return acc;

    for (int k = 0; k <= r; ++k) {
        BinaryForm df = mixed_partial(f, r - k, k);
        if (df.is_zero()) continue;
        BinaryForm dg = mixed_partial(g, k, r - k);
        if (dg.is_zero()) continue;
        Integer weight = binomial(static_cast<unsigned>(r), static_cast<unsigned>(k));
        if (k % 2 != 0) weight = -weight;
        acc = form_add(acc, Scalar(weight) * form_mul(df, dg));
    }
    Rational prefactor(factorial(static_cast<unsigned>(m - r)) * factorial(static_cast<unsigned>(n - r)),
                       factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(m)));
    prefactor.canonicalize();
    acc *= Scalar(prefactor);
    return acc;
}

Scalar transvect_scalar(const BinaryForm& f, const BinaryForm& g, int r) {
    if (f.degree() + g.degree() != 2 * r) {
        throw InternalError("transvectant (" + std::to_string(f.degree()) + ", " + std::to_string(g.degree()) +
                            ")^" + std::to_string(r) + " is not an invariant");
    }
    return transvect(f, g, r)[0];
}

}  // namespace sea
