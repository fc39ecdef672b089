#pragma once

#include "sea/form.hpp"

namespace sea {

/// r-th transvectant of f (degree n) and g (degree m):
///
///   (f, g)^r = (m-r)!(n-r)!/(n! m!) * sum_k (-1)^k C(r,k)
///              d^r f / dX^(r-k) dZ^k  *  d^r g / dX^k dZ^(r-k)
///
/// The result has degree n + m - 2r. Requires 0 <= r <= min(n, m).
BinaryForm transvect(const BinaryForm& f, const BinaryForm& g, int r);

/// Transvectant of order-0 result, returned as its constant coefficient.
/// Throws InternalError when n + m != 2r.
Scalar transvect_scalar(const BinaryForm& f, const BinaryForm& g, int r);

}  // namespace sea
