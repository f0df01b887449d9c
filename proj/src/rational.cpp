#include "rspin/rational.hpp"

namespace rspin {

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    auto parse_int = [](std::string_view part) -> Integer {
        if (part.empty()) throw std::invalid_argument("Rational::parse: empty integer");
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw std::invalid_argument("Rational::parse: sign without digits");
        for (size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9')
                throw std::invalid_argument("Rational::parse: bad character in '" + std::string(part) + "'");
        return Integer(std::string(part));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    Integer num = parse_int(s.substr(0, slash));
    Integer den = parse_int(s.substr(slash + 1));
    return Rational(num, den);
}

std::string Rational::to_string() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += '/';
        out += denominator().str();
    }
    return out;
}

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Integer int_pow(const Integer& base, unsigned e) {
    Integer out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace rspin
