#include "glmn/rational.hpp"

#include "glmn/error.hpp"

#include <cctype>

namespace glmn {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer numerator(const Rational& q) { return q.get_num(); }

Integer denominator(const Rational& q) { return q.get_den(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::string to_string(const Rational& q) {
    if (is_integer(q)) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool looks_like_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    std::string_view den_part =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!looks_like_integer(num_part) || !looks_like_integer(den_part)) {
        return std::nullopt;
    }
    Integer num(std::string(num_part), 10);
    Integer den(std::string(den_part), 10);
    if (den == 0) {
        return std::nullopt;
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace glmn
