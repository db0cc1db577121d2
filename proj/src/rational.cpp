#include "rootstab/rational.hpp"

#include "rootstab/error.hpp"

#include <cctype>
#include <sstream>

namespace rootstab {

int sign(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

namespace {

bool parse_int(std::string_view text, Int& out) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i == text.size()) return false;
    Int value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        value = value * 10 + (text[i] - '0');
    }
    out = neg ? Int(-value) : value;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Rat parse_rat(std::string_view text) {
    std::string_view body = trim(text);
    if (body.empty()) fail(Errc::ParseError, "empty rational");
    auto slash = body.find('/');
    Int num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(body, num))
            fail(Errc::ParseError, "bad rational '" + std::string(text) + "'");
    } else {
        if (!parse_int(trim(body.substr(0, slash)), num) ||
            !parse_int(trim(body.substr(slash + 1)), den))
            fail(Errc::ParseError, "bad rational '" + std::string(text) + "'");
        if (den == 0)
            fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    if (den < 0) { // NegativeDenominator: sign moves to the numerator
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

std::string rat_approx(const Rat& r, int digits) {
    if (digits < 1) digits = 1;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rat scaled = r * scale;
    Int t = rat_floor(abs(scaled));
    std::string frac = t.str();
    std::string out = r < 0 ? "-" : "";
    if (static_cast<int>(frac.size()) <= digits)
        frac.insert(0, digits + 1 - frac.size(), '0');
    frac.insert(frac.size() - digits, ".");
    // strip trailing zeros but keep at least one decimal
    std::size_t last = frac.find_last_not_of('0');
    if (frac[last] == '.') ++last;
    frac.erase(last + 1);
    return out + frac;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

Int rat_floor(const Rat& r) {
    return floor_div(numerator(r), denominator(r));
}

Int rat_ceil(const Rat& r) {
    return ceil_div(numerator(r), denominator(r));
}

Rat sqrt_upper(const Rat& x) {
    if (x < 0) fail(Errc::PreconditionViolated, "sqrt_upper of negative value");
    if (x == 0) return Rat(0);
    // sqrt(p/q) = sqrt(p q)/q <= (floor(sqrt(p q)) + 1)/q
    Int p = numerator(x), q = denominator(x);
    Int root = sqrt(Int(p * q));
    return Rat(Int(root + 1), q);
}

const Rat& Slope::value() const {
    if (!finite_) fail(Errc::PreconditionViolated, "infinite slope has no rational value");
    return value_;
}

std::string Slope::str() const {
    return finite_ ? rat_str(value_) : "inf";
}

} // namespace rootstab
