#include "bowlab/rational.hpp"

#include "bowlab/errors.hpp"

#include <cctype>

namespace bowlab {

Rational rat(long num, long den) {
    if (den == 0) {
        throw SingularError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rat_parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw ValidationError("empty rational literal");
    }
    // Validate shape: optional sign, digits, optional "/sign digits".
    auto check_int = [](const std::string& part) {
        std::size_t i = 0;
        if (i < part.size() && (part[i] == '+' || part[i] == '-')) ++i;
        if (i >= part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };
    std::size_t slash = s.find('/');
    bool ok = false;
    if (slash == std::string::npos) {
        ok = check_int(s);
    } else {
        ok = check_int(s.substr(0, slash)) && check_int(s.substr(slash + 1));
    }
    if (!ok) {
        throw ValidationError("malformed rational literal: '" + text + "'");
    }
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw ValidationError("malformed rational literal: '" + text + "'");
    }
    if (r.get_den() == 0) {
        throw SingularError("rational literal with zero denominator: '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string rat_str(const Rational& r) {
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool rat_is_integer(const Rational& r) {
    return r.get_den() == 1;
}

} // namespace bowlab
