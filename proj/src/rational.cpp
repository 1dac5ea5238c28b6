#include "polyspec/rational.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include "polyspec/errors.hpp"

namespace polyspec {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// cpp_int's string constructor rejects a leading '+'
BigInt to_bigint(const std::string& s) {
    return BigInt(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw ParameterError("not a rational literal: '" + text + "'");
        return Rational(to_bigint(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParameterError("not a rational literal: '" + text + "'");
    const BigInt d = to_bigint(den);
    if (d == 0) throw ParameterError("zero denominator in '" + text + "'");
    // dividing rationals normalizes sign and gcd
    return Rational(to_bigint(num)) / Rational(d);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParameterError("non-finite matrix entry");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings turn the mantissa into an integer
    for (int i = 0; i < 53 && mant != std::floor(mant); ++i) {
        mant *= 2.0;
        --exp;
    }
    Rational q(BigInt(static_cast<long long>(mant)));
    if (exp >= 0)
        q *= Rational(BigInt(1) << exp);
    else
        q /= Rational(BigInt(1) << -exp);
    return q;
}

double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, Rational(0));
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix multiply(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.n != y.n) throw ParameterError("matrix size mismatch");
    RationalMatrix z;
    z.n = x.n;
    z.a.assign(x.a.size(), Rational(0));
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const Rational& xik = x.at(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < x.n; ++j) z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

Rational determinant(const RationalMatrix& x) {
    RationalMatrix m = x;
    Rational det = 1;
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int row = col; row < m.n; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        const Rational inv = Rational(1) / m.at(col, col);
        for (int row = col + 1; row < m.n; ++row) {
            const Rational f = m.at(row, col) * inv;
            if (f == 0) continue;
            for (int j = col; j < m.n; ++j) m.at(row, j) -= f * m.at(col, j);
        }
    }
    return det;
}

RationalMatrix exact_inverse(const RationalMatrix& x) {
    RationalMatrix m = x;
    RationalMatrix inv = RationalMatrix::identity(x.n);
    for (int col = 0; col < m.n; ++col) {
        int pivot = -1;
        for (int row = col; row < m.n; ++row)
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw NumericError("matrix is singular over Q");
        if (pivot != col)
            for (int j = 0; j < m.n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const Rational p = Rational(1) / m.at(col, col);
        for (int j = 0; j < m.n; ++j) {
            m.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (int row = 0; row < m.n; ++row) {
            if (row == col) continue;
            const Rational f = m.at(row, col);
            if (f == 0) continue;
            for (int j = 0; j < m.n; ++j) {
                m.at(row, j) -= f * m.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string canonical_key(const std::vector<RationalMatrix>& factors) {
    std::ostringstream os;
    for (const auto& f : factors) {
        os << '[';
        for (const auto& q : f.a) os << q << ';';  // ';' cannot appear inside "p/q"
    }
    return os.str();
}

}  // namespace polyspec
