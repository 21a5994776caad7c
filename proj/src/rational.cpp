#include "splinterlab/rational.hpp"

#include <cctype>

#include "splinterlab/errors.hpp"

namespace splinterlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        if (!all_digits(den_part)) {
            throw ValueError("malformed rational: '" + std::string(text) + "'");
        }
    }
    if (!all_digits(num_part)) {
        throw ValueError("malformed rational: '" + std::string(text) + "'");
    }
    Integer num{std::string(num_part)};
    Integer den = den_part.empty() ? Integer(1) : Integer{std::string(den_part)};
    if (den == 0) {
        throw ValueError("zero denominator in rational: '" + std::string(text) + "'");
    }
    if (negative) num = -num;
    return Rational(num, den);  // the pair constructor canonicalizes
}

std::string rational_to_string(const Rational& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += "/";
        out += denominator(value).str();
    }
    return out;
}

RatVec parse_rational_vector(const std::vector<std::string>& parts) {
    RatVec out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(parse_rational(p));
    return out;
}

std::vector<std::string> rational_vector_to_strings(const RatVec& vec) {
    std::vector<std::string> out;
    out.reserve(vec.size());
    for (const auto& v : vec) out.push_back(rational_to_string(v));
    return out;
}

}  // namespace splinterlab
