#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace affrkl {

/// Univariate polynomial in X with exact integer coefficients, stored
/// ascending with no trailing zeros. Ring operations only; this is the value
/// type of every R-polynomial computation.
class IntPoly {
public:
    IntPoly() {}
    IntPoly(long long c) { if (c != 0) coeffs_.push_back(c); }
    explicit IntPoly(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(1); }
    /// The monomial X.
    static IntPoly X() { return IntPoly(std::vector<long long>{0, 1}); }
    /// X - 1, the fold factor.
    static IntPoly X_minus_1() { return IntPoly(std::vector<long long>{-1, 1}); }

    const std::vector<long long>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    long long coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<long long> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<long long> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPoly(std::move(c));
    }
    IntPoly& operator+=(const IntPoly& b) { *this = *this + b; return *this; }
    IntPoly& operator-=(const IntPoly& b) { *this = *this - b; return *this; }
    IntPoly& operator*=(const IntPoly& b) { *this = *this * b; return *this; }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    /// Evaluation at an integer point.
    long long eval(long long q) const {
        long long acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
        return acc;
    }

    IntPoly pow(unsigned k) const {
        IntPoly acc = one(), base = *this;
        while (k) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    /// Pretty form, e.g. "X^2 - 2*X + 1"; "0" for the zero polynomial.
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            long long c = coeffs_[k];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << '-';
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            long long a = c < 0 ? -c : c;
            if (k == 0) {
                os << a;
            } else {
                if (a != 1) os << a << '*';
                os << 'X';
                if (k > 1) os << '^' << k;
            }
            first = false;
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

private:
    std::vector<long long> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

}  // namespace affrkl
