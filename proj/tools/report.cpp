#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace schwarz::cli {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_rec(const Json& j, std::string& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + Json(it.key()).dump() + ": ";
                dump_rec(it.value(), out, indent + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& v : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in;
                dump_rec(v, out, indent + 1);
            }
            out += "\n" + pad + "]";
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            out += std::isfinite(v) ? num17(v) : "null";
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

} // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump_rec(j, out, 0);
    out += "\n";
    return out;
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    bool first = true;
    for (const std::string& f : fields) {
        if (!first) os_ << ',';
        first = false;
        bool needs_quotes = f.find_first_of(",\"\r\n") != std::string::npos;
        if (!needs_quotes) {
            os_ << f;
            continue;
        }
        os_ << '"';
        for (char ch : f) {
            if (ch == '"') os_ << '"';
            os_ << ch;
        }
        os_ << '"';
    }
    os_ << '\n';
}

void emit(const std::string& payload, const std::optional<std::string>& out_path) {
    if (!out_path) {
        std::cout << payload;
        return;
    }
    std::ofstream os(*out_path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open output file '" + *out_path + "'");
    }
    os << payload;
}

} // namespace schwarz::cli
