#include "riesz/report_io.hpp"

#include <cstdio>
#include <fstream>

#include "riesz/errors.hpp"

namespace riesz {

std::string format_double_17(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0"; // keep it a float
    return s;
}

JVal& JVal::operator[](const std::string& key) {
    if (!std::holds_alternative<Object>(v_)) v_ = Object{};
    return std::get<Object>(v_)[key];
}

void JVal::push(JVal v) {
    if (!std::holds_alternative<Array>(v_)) v_ = Array{};
    std::get<Array>(v_).push_back(std::move(v));
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

} // namespace

void JVal::write(std::string& out) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
        out += "null";
    } else if (std::holds_alternative<bool>(v_)) {
        out += std::get<bool>(v_) ? "true" : "false";
    } else if (std::holds_alternative<std::int64_t>(v_)) {
        out += std::to_string(std::get<std::int64_t>(v_));
    } else if (std::holds_alternative<std::uint64_t>(v_)) {
        out += std::to_string(std::get<std::uint64_t>(v_));
    } else if (std::holds_alternative<double>(v_)) {
        out += format_double_17(std::get<double>(v_));
    } else if (std::holds_alternative<std::string>(v_)) {
        write_escaped(out, std::get<std::string>(v_));
    } else if (std::holds_alternative<Object>(v_)) {
        out += '{';
        bool first = true;
        for (const auto& [k, v] : std::get<Object>(v_)) { // std::map: sorted keys
            if (!first) out += ',';
            first = false;
            write_escaped(out, k);
            out += ':';
            v.write(out);
        }
        out += '}';
    } else {
        out += '[';
        bool first = true;
        for (const auto& v : std::get<Array>(v_)) {
            if (!first) out += ',';
            first = false;
            v.write(out);
        }
        out += ']';
    }
}

std::string JVal::dump() const {
    std::string out;
    write(out);
    out += '\n';
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << content;
    if (!out) throw Error("write failed: " + path);
}

} // namespace riesz
