#include "schwarz/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "schwarz/errors.hpp"

namespace schwarz {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_real(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw DomainError("empty number in '" + s + "'");
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw DomainError("malformed number '" + s + "'");
    }
    if (used != t.size()) throw DomainError("trailing characters in number '" + s + "'");
    return v;
}

// Split "a+bi" at the sign that separates real and imaginary parts: the
// last '+'/'-' that is not leading and not an exponent sign.
std::size_t imag_split(const std::string& t) {
    for (std::size_t k = t.size(); k-- > 1;) {
        char ch = t[k];
        if (ch != '+' && ch != '-') continue;
        char prev = t[k - 1];
        if (prev == 'e' || prev == 'E') continue;
        return k;
    }
    return std::string::npos;
}

// Comma positions at bracket depth zero.
std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '[' || ch == '(') ++depth;
        if (ch == ']' || ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

std::string expect_bracketed(const std::string& s, char open, char close) {
    std::string t = strip(s);
    if (t.size() < 2 || t.front() != open || t.back() != close) {
        throw DomainError("expected '" + std::string(1, open) + "...'" + std::string(1, close) +
                          " in '" + s + "'");
    }
    return t.substr(1, t.size() - 2);
}

} // namespace

Complex parse_complex(const std::string& text) {
    std::string t = strip(text);
    if (t.empty()) throw DomainError("empty complex literal");
    if (t.back() != 'i' && t.back() != 'I') {
        return Complex(parse_real(t), 0.0);
    }
    std::string body = t.substr(0, t.size() - 1);
    std::size_t split = imag_split(body);
    std::string re_part, im_part;
    if (split == std::string::npos) {
        re_part = "0";
        im_part = body;
    } else {
        re_part = body.substr(0, split);
        im_part = body.substr(split);   // keeps the sign
    }
    im_part = strip(im_part);
    if (im_part.empty() || im_part == "+") im_part = "1";
    else if (im_part == "-") im_part = "-1";
    return Complex(parse_real(re_part), parse_real(im_part));
}

std::string format_complex(Complex z) {
    char buf[96];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", z.real());
        return buf;
    }
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::string inner = expect_bracketed(text, '[', ']');
    std::vector<Complex> out;
    if (strip(inner).empty()) return out;
    for (const std::string& part : split_top_level(inner)) {
        out.push_back(parse_complex(part));
    }
    return out;
}

MeroFunction parse_mero_function(const std::string& descriptor) {
    std::size_t colon = descriptor.find(':');
    if (colon == std::string::npos) {
        throw DomainError("function descriptor needs a 'kind:' prefix");
    }
    std::string kind = strip(descriptor.substr(0, colon));
    std::string body = strip(descriptor.substr(colon + 1));

    if (kind == "rational") {
        std::size_t slash = body.find('/');
        if (slash == std::string::npos) {
            throw DomainError("rational descriptor needs [num]/[den]");
        }
        Poly num = parse_complex_list(body.substr(0, slash));
        Poly den = parse_complex_list(body.substr(slash + 1));
        return MeroFunction::rational(std::move(num), std::move(den));
    }

    if (kind == "rigid_scaled") {
        Complex a{0.0, 0.0}, b{0.0, 0.0}, eta{0.0, 0.0};
        bool got_a = false, got_b = false, got_eta = false;
        for (const std::string& part : split_top_level(body)) {
            std::size_t eq = part.find('=');
            if (eq == std::string::npos) {
                throw DomainError("rigid_scaled descriptor expects key=value pairs");
            }
            std::string key = strip(part.substr(0, eq));
            Complex val = parse_complex(part.substr(eq + 1));
            if (key == "a") { a = val; got_a = true; }
            else if (key == "b") { b = val; got_b = true; }
            else if (key == "eta") { eta = val; got_eta = true; }
            else throw DomainError("rigid_scaled descriptor: unknown key '" + key + "'");
        }
        if (!got_a || !got_b || !got_eta) {
            throw DomainError("rigid_scaled descriptor needs a=, b=, eta=");
        }
        return MeroFunction::rigid_scaled(RigidMotion(a, b), eta);
    }

    if (kind == "blaschke") {
        std::string inner = expect_bracketed(body, '[', ']');
        std::vector<BlaschkeFactor> factors;
        if (!strip(inner).empty()) {
            for (const std::string& part : split_top_level(inner)) {
                std::string pair = expect_bracketed(part, '(', ')');
                auto fields = split_top_level(pair);
                if (fields.size() != 2) {
                    throw DomainError("blaschke factor needs (center, theta)");
                }
                Complex center = parse_complex(fields[0]);
                double theta = parse_real(fields[1]);
                factors.push_back({center, Complex(std::cos(theta), std::sin(theta))});
            }
        }
        return MeroFunction::blaschke(std::move(factors));
    }

    throw DomainError("unknown function kind '" + kind + "'");
}

} // namespace schwarz
