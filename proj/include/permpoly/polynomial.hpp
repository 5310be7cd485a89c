#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace permpoly {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are stored ascending (index = degree). Canonical form: the zero
// polynomial is the empty vector; otherwise the highest coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs_ascending);

    static IntPoly constant(BigInt c);
    // c * x^deg
    static IntPoly monomial(BigInt c, int deg);
    static IntPoly one() { return constant(1); }

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    // Coefficient of x^d; zero outside the stored range.
    const BigInt& coeff(int d) const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    // Every coefficient multiplied by c.
    IntPoly scaled(const BigInt& c) const;

    bool operator==(const IntPoly& rhs) const = default;

private:
    void canonicalize();

    std::vector<BigInt> coeffs_;
};

enum class PolyStyle { human, coeff_list, json };

// human:      descending powers, zero terms omitted, e.g. "x^4+4x^2+4"
// coeff_list: ascending coefficients, e.g. "[-1, 0, 1]"
// json:       {"coeffs_ascending": ["-1", "0", "1"]} (integers as strings)
std::string format_poly(const IntPoly& p, PolyStyle style);

// Inverses of the two machine-readable styles above.
IntPoly parse_poly_coeff_list(std::string_view text);
IntPoly parse_poly_json(std::string_view text);

} // namespace permpoly
