#include "coverdepth/serialize.hpp"

#include <cstdio>

namespace coverdepth {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
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
    return out;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string to_json(const Rational& r) {
    return "{\"num\": \"" + r.num().get_str() + "\", \"den\": \"" + r.den().get_str() +
           "\", \"approx\": " + format_double(r.to_double()) + "}";
}

std::string to_json(const FiniteField& f) {
    std::string out = "{\"p\": " + std::to_string(f.p()) + ", \"e\": " + std::to_string(f.e()) +
                      ", \"modulus\": [";
    for (size_t i = 0; i < f.modulus().size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(f.modulus()[i]);
    }
    return out + "]}";
}

std::string to_json(const WeightDistribution& w) {
    std::string out = "{\"n\": " + std::to_string(w.n) + ", \"counts\": [";
    for (size_t i = 0; i < w.counts.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + w.counts[i].get_str() + "\"";
    }
    return out + "]}";
}

std::string to_json(const ExtendedEnumerator& e) {
    std::string out = "{\"b\": [";
    for (size_t t = 0; t < e.b.size(); ++t) {
        if (t) out += ", ";
        out += "[";
        for (size_t j = 0; j < e.b[t].size(); ++j) {
            if (j) out += ", ";
            out += e.b[t][j].get_str();
        }
        out += "]";
    }
    return out + "]}";
}

std::string to_json(const MonteCarloResult& mc) {
    return "{\"mean\": " + format_double(mc.mean) +
           ", \"stderr\": " + format_double(mc.stderr_mean) +
           ", \"trials\": " + std::to_string(mc.trials) +
           ", \"seed\": " + std::to_string(mc.seed) + ", \"rng\": \"" + json_escape(mc.rng) +
           "\"}";
}

std::string to_json(const ExpectationResult& r) {
    std::string out = "{\"method\": \"" + json_escape(r.method) + "\", \"exact\": ";
    out += r.exact ? to_json(*r.exact) : "null";
    out += ", \"mc\": ";
    out += r.mc ? to_json(*r.mc) : "null";
    return out + "}";
}

}  // namespace coverdepth
