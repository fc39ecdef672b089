#include "sea/univariate.hpp"

#include <utility>

#include "sea/error.hpp"

namespace sea {

UnivariatePoly::UnivariatePoly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

UnivariatePoly UnivariatePoly::monomial(int exp, Scalar c) {
    std::vector<Scalar> v(static_cast<std::size_t>(exp) + 1);
    v.back() = std::move(c);
    return UnivariatePoly(std::move(v));
}

void UnivariatePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar UnivariatePoly::coeff(int i) const {
    if (i < 0 || i > degree()) return {};
    return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& UnivariatePoly::leading() const {
    if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Scalar UnivariatePoly::evaluate(const Scalar& x) const {
    Scalar acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
    std::vector<Scalar> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * Scalar(static_cast<long>(i)));
    return UnivariatePoly(std::move(out));
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivariatePoly(std::move(out));
}

UnivariatePoly operator*(const Scalar& c, const UnivariatePoly& p) {
    std::vector<Scalar> out = p.coeffs_;
    for (Scalar& s : out) s *= c;
    return UnivariatePoly(std::move(out));
}

UnivariatePoly UnivariatePoly::operator-() const { return Scalar(-1) * *this; }

std::string UnivariatePoly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (c.is_rational()) {
            negative = sgn(c.rational_part()) < 0;
            Scalar mag = negative ? -c : c;
            if (!(mag.is_one() && i > 0)) body = mag.str();
        } else if (sgn(c.rational_part()) == 0) {
            negative = sgn(c.radical_part()) < 0;
            body = (negative ? -c : c).str();
        } else {
            body = "(" + c.str() + ")";
        }
        if (negative) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        if (i > 0) {
            if (!body.empty()) out += body + "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        } else {
            out += body;
        }
    }
    return out;
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    std::vector<Scalar> rem = a.coeffs();
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) return {UnivariatePoly(), a};
    std::vector<Scalar> quot(static_cast<std::size_t>(da - db) + 1);
    const Scalar lead = b.leading();
    for (int k = da - db; k >= 0; --k) {
        Scalar q = rem[static_cast<std::size_t>(k + db)] / lead;
        if (q.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coeff(j);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    return {UnivariatePoly(std::move(quot)), UnivariatePoly(std::move(rem))};
}

UnivariatePoly poly_gcd(UnivariatePoly a, UnivariatePoly b) {
    while (!b.is_zero()) {
        UnivariatePoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    Scalar inv = Scalar(1) / a.leading();
    return inv * a;
}

BinaryForm homogenize(const UnivariatePoly& p, int d) {
    if (d < p.degree()) {
        throw PreconditionError("cannot homogenize a degree " + std::to_string(p.degree()) + " polynomial to degree " +
                                std::to_string(d));
    }
    if (d < 0) throw PreconditionError("form degree must be nonnegative");
    std::vector<Scalar> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(i)] = p.coeff(i);
    return BinaryForm::from_ascending(std::move(c));
}

UnivariatePoly dehomogenize(const BinaryForm& f) {
    return UnivariatePoly(std::vector<Scalar>(f.coeffs().begin(), f.coeffs().end()));
}

Scalar determinant(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        const Scalar inv = Scalar(1) / m[col][col];
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Scalar factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

Scalar resultant(const UnivariatePoly& p, const UnivariatePoly& q) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of a zero polynomial");
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return Scalar(1);
    const auto size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Scalar>> syl(size, std::vector<Scalar>(size));
    for (int r = 0; r < n; ++r) {
        for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = p.coeff(m - j);
    }
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j <= n; ++j) {
            syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = q.coeff(n - j);
        }
    }
    return determinant(std::move(syl));
}

Scalar discriminant(const UnivariatePoly& p) {
    const int d = p.degree();
    if (d < 1) throw PreconditionError("discriminant needs a polynomial of degree at least 1");
    if (d == 1) return Scalar(1);
    Scalar r = resultant(p, p.derivative()) / p.leading();
    return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

bool is_squarefree(const UnivariatePoly& p) {
    if (p.degree() < 1) return !p.is_zero();
    return !discriminant(p).is_zero();
}

bool is_squarefree(const BinaryForm& f) {
    if (f.is_zero()) return false;
    const int d = f.degree();
    if (d == 0) return true;
    if (f[d].is_zero() && f[d - 1].is_zero()) return false;
    return is_squarefree(dehomogenize(f));
}

}  // namespace sea
