#include "twopar/complex_value.hpp"

#include "twopar/errors.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace twopar {

std::string ComplexValue::str() const {
    if (is_exact()) return to_string(rat());
    char buf[64];
    std::complex<double> z = cd();
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof(buf), "%.17g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

namespace {

bool is_rational_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    bool digits = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; digits = true; }
    if (!digits) return false;
    if (i == s.size()) return true;
    if (s[i] != '/') return false;
    ++i;
    bool den = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; den = true; }
    return den && i == s.size();
}

mpq_class parse_rational(std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1); // mpz rejects a leading plus
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        mpz_class n(s);
        return mpq_class(n);
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

double parse_double(const std::string& s) {
    if (s.empty()) throw ParseError("empty numeric literal");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == nullptr || *end != '\0') throw ParseError("bad numeric literal '" + s + "'");
    return v;
}

struct Part {
    std::string text; // without the trailing 'i'
    bool imaginary = false;
};

// Split "a+bi"-style input into one or two signed parts.  A sign splits
// parts unless it follows an exponent marker.
std::vector<Part> split_parts(const std::string& s) {
    std::vector<std::string> raw;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && !(s[i - 1] == 'e' || s[i - 1] == 'E')) {
            raw.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    raw.push_back(s.substr(start));
    if (raw.size() > 2) throw ParseError("too many terms in '" + s + "'");
    std::vector<Part> parts;
    for (auto& r : raw) {
        Part p;
        if (!r.empty() && (r.back() == 'i' || r.back() == 'I')) {
            p.imaginary = true;
            r.pop_back();
            if (r.empty() || r == "+") r = "1";
            else if (r == "-") r = "-1";
        }
        if (r.empty()) throw ParseError("empty term");
        p.text = r;
        parts.push_back(std::move(p));
    }
    return parts;
}

} // namespace

ParsedComplex parse_complex(const std::string& input) {
    std::string s;
    for (char c : input)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty complex literal");

    auto at = s.find('@');
    if (at != std::string::npos) {
        double r = parse_double(s.substr(0, at));
        double theta = parse_double(s.substr(at + 1));
        return {ComplexValue::floating(r * std::cos(theta), r * std::sin(theta)), true};
    }

    auto parts = split_parts(s);
    bool all_rational = true;
    for (const auto& p : parts)
        if (!is_rational_literal(p.text)) all_rational = false;

    bool re_seen = false, im_seen = false;
    if (all_rational) {
        mpq_class re(0), im(0);
        for (const auto& p : parts) {
            if (p.imaginary) {
                if (im_seen) throw ParseError("two imaginary terms in '" + input + "'");
                im = parse_rational(p.text);
                im_seen = true;
            } else {
                if (re_seen) throw ParseError("two real terms in '" + input + "'");
                re = parse_rational(p.text);
                re_seen = true;
            }
        }
        return {ComplexValue::exact(std::move(re), std::move(im)), false};
    }

    double re = 0, im = 0;
    for (const auto& p : parts) {
        if (p.imaginary) {
            if (im_seen) throw ParseError("two imaginary terms in '" + input + "'");
            im = parse_double(p.text);
            im_seen = true;
        } else {
            if (re_seen) throw ParseError("two real terms in '" + input + "'");
            re = parse_double(p.text);
            re_seen = true;
        }
    }
    return {ComplexValue::floating(re, im), true};
}

} // namespace twopar
