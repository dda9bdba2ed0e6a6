#ifndef FDKNOT_LAURENT_HPP
#define FDKNOT_LAURENT_HPP

#include <cctype>
#include <cstdlib>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdknot {

/// Sparse integer-coefficient Laurent polynomial in t. Zero coefficients are
/// never stored; the empty map is the zero polynomial.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    explicit LaurentPoly(std::map<int, long long> coefficients)
        : coefficients_(std::move(coefficients)) {
        for (auto it = coefficients_.begin(); it != coefficients_.end();)
            it = it->second == 0 ? coefficients_.erase(it) : std::next(it);
    }

    LaurentPoly(std::initializer_list<std::pair<const int, long long>> terms)
        : LaurentPoly(std::map<int, long long>(terms)) {}

    static LaurentPoly monomial(long long coefficient, int exponent) {
        LaurentPoly p;
        if (coefficient != 0) p.coefficients_[exponent] = coefficient;
        return p;
    }

    bool is_zero() const { return coefficients_.empty(); }

    long long coefficient(int exponent) const {
        auto it = coefficients_.find(exponent);
        return it == coefficients_.end() ? 0 : it->second;
    }

    const std::map<int, long long>& coefficients() const { return coefficients_; }

    std::size_t term_count() const { return coefficients_.size(); }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        std::map<int, long long> sum = a.coefficients_;
        for (const auto& [e, c] : b.coefficients_) sum[e] += c;
        return LaurentPoly(std::move(sum));
    }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        std::map<int, long long> neg;
        for (const auto& [e, c] : a.coefficients_) neg[e] = -c;
        return LaurentPoly(std::move(neg));
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  private:
    std::map<int, long long> coefficients_;
};

/// p(t) * coefficient * t^exponent.
inline LaurentPoly multiply_by_monomial(const LaurentPoly& p, int exponent,
                                        long long coefficient = 1) {
    std::map<int, long long> shifted;
    if (coefficient != 0)
        for (const auto& [e, c] : p.coefficients()) shifted[e + exponent] = c * coefficient;
    return LaurentPoly(std::move(shifted));
}

inline long long evaluate_at_one(const LaurentPoly& p) {
    long long sum = 0;
    for (const auto& [e, c] : p.coefficients()) sum += c;
    return sum;
}

inline long long sum_abs_coefficients(const LaurentPoly& p) {
    long long sum = 0;
    for (const auto& [e, c] : p.coefficients()) sum += std::llabs(c);
    return sum;
}

/// Exact quotient p / (t - 1), by synthetic division from the highest
/// exponent downward. Requires p(1) = 0; the division then leaves no
/// remainder and the quotient is unique.
inline LaurentPoly divide_by_t_minus_1(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    if (evaluate_at_one(p) != 0)
        throw std::invalid_argument("polynomial is not divisible by (t - 1): p(1) != 0");

    const int lo = p.coefficients().begin()->first;
    const int hi = p.coefficients().rbegin()->first;
    std::map<int, long long> quotient;
    long long running = 0; // q_{e-1} = p_e + q_e, accumulated from hi down
    for (int e = hi; e > lo; --e) {
        running += p.coefficient(e);
        if (running != 0) quotient[e - 1] = running;
    }
    running += p.coefficient(lo);
    if (running != 0)
        throw std::logic_error("synthetic division left a nonzero remainder");
    return LaurentPoly(std::move(quotient));
}

/// Text form used by the CLI: nonzero exponents in descending order, the
/// exponent-0 term last, e.g. "t^1 + t^-1 - 2". The zero polynomial is "0".
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<int, long long>> terms;
    for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
        if (it->first != 0) terms.emplace_back(it->first, it->second);
    if (long long c0 = p.coefficient(0); c0 != 0) terms.emplace_back(0, c0);

    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto [e, c] = terms[i];
        const long long mag = std::llabs(c);
        if (i == 0)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (e == 0) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag);
            out += "t^" + std::to_string(e);
        }
    }
    return out;
}

/// Parses exactly what to_string emits.
inline LaurentPoly laurent_from_string(std::string_view text) {
    const auto fail = [&] { throw std::invalid_argument("bad polynomial text"); };
    if (text == "0") return {};
    std::map<int, long long> coeffs;
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    while (i < text.size()) {
        long long mag = 0;
        std::size_t digits = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            mag = mag * 10 + (text[i] - '0');
            ++i;
            ++digits;
        }
        int exponent = 0;
        if (i < text.size() && text[i] == 't') {
            if (digits == 0) mag = 1;
            if (i + 1 >= text.size() || text[i + 1] != '^') fail();
            i += 2;
            bool exp_negative = false;
            if (i < text.size() && text[i] == '-') {
                exp_negative = true;
                ++i;
            }
            std::size_t exp_digits = 0;
            long long exp_value = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                exp_value = exp_value * 10 + (text[i] - '0');
                ++i;
                ++exp_digits;
            }
            if (exp_digits == 0) fail();
            exponent = static_cast<int>(exp_negative ? -exp_value : exp_value);
        } else if (digits == 0) {
            fail();
        }
        coeffs[exponent] += negative ? -mag : mag;

        if (i == text.size()) break;
        if (i + 3 > text.size() || text[i] != ' ' || (text[i + 1] != '+' && text[i + 1] != '-') ||
            text[i + 2] != ' ')
            fail();
        negative = text[i + 1] == '-';
        i += 3;
    }
    return LaurentPoly(std::move(coeffs));
}

} // namespace fdknot

#endif
