#include "jiso/ratio.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jiso {

std::string ratio_to_string(const ExactRatio& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

ExactRatio parse_ratio(const std::string& text) {
    auto slash = text.find('/');
    auto check_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("ratio: empty integer field");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("ratio: sign without digits");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("ratio: non-digit in '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return ExactRatio(BigInt(text), BigInt(1));
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    BigInt d(den);
    if (d <= 0) throw std::invalid_argument("ratio: denominator must be positive");
    return ExactRatio(BigInt(num), d);
}

namespace {

BigInt pow10(int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

int digit_count(const BigInt& x) { return static_cast<int>(x.str().size()); }

}  // namespace

std::string decimal_string(const ExactRatio& r, int sig) {
    if (sig < 1) throw std::invalid_argument("decimal_string: need sig >= 1");
    if (r == 0) return "0";
    BigInt a = bmp::abs(numerator(r));
    BigInt b = denominator(r);

    // exponent e with 10^e <= a/b < 10^(e+1)
    int e = digit_count(a) - digit_count(b);
    if (e >= 0) {
        if (a < b * pow10(e)) --e;
    } else {
        if (a * pow10(-e) < b) --e;
    }

    // sig digits of a/b, rounded half away from zero
    int shift = sig - 1 - e;
    BigInt scaled_num = shift >= 0 ? a * pow10(shift) : a;
    BigInt scaled_den = shift >= 0 ? b : b * pow10(-shift);
    BigInt digits = scaled_num / scaled_den;
    BigInt rem = scaled_num - digits * scaled_den;
    if (2 * rem >= scaled_den) ++digits;
    std::string d = digits.str();
    if (static_cast<int>(d.size()) > sig) {  // rounding carried into a new digit
        d.pop_back();
        ++e;
    }

    std::string out;
    if (numerator(r) < 0) out += '-';
    if (e >= sig - 1) {
        out += d;
        out.append(static_cast<std::size_t>(e - (sig - 1)), '0');
    } else if (e >= 0) {
        out += d.substr(0, static_cast<std::size_t>(e + 1));
        out += '.';
        out += d.substr(static_cast<std::size_t>(e + 1));
    } else {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        out += d;
    }
    return out;
}

BigInt sqrt2_scaled(int digits) { return isqrt_big(BigInt(2) * pow10(2 * digits)); }

}  // namespace jiso
