#include "profile_parse.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace sps::tools {

const char* const kProfileHelp =
    "profile format: a,b,I_A,I_B,I_cross where a and b are integers or '*', "
    "and each I is '*', 'lin' (={0,1}), 'int' (={1}), an integer k (={k}), "
    "or a brace set like {0,1}";

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_top_level(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '{') ++depth;
        if (c == '}') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(strip(cur));
    return out;
}

unsigned parse_uint(const std::string& tok, const std::string& what) {
    if (tok.empty()) throw std::invalid_argument("profile: empty " + what);
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("profile: bad " + what + " '" + tok + "'");
    return static_cast<unsigned>(std::stoul(tok));
}

std::optional<unsigned> parse_bound(const std::string& tok) {
    if (tok == "*") return std::nullopt;
    const unsigned v = parse_uint(tok, "size bound");
    if (v == 0) throw std::invalid_argument("profile: size bounds must be positive");
    return v;
}

IntersectionRule parse_rule(const std::string& tok) {
    if (tok == "*") return IntersectionRule::wildcard();
    if (tok == "lin") return IntersectionRule::lin();
    if (tok == "int") return IntersectionRule::intersecting();
    if (tok.size() >= 2 && tok.front() == '{' && tok.back() == '}') {
        std::vector<unsigned> sizes;
        std::string cur;
        for (char c : tok.substr(1, tok.size() - 2)) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur += c;
            } else if (c == ',' || c == ' ') {
                if (!cur.empty()) sizes.push_back(parse_uint(cur, "set element"));
                cur.clear();
            } else {
                throw std::invalid_argument("profile: bad set literal '" + tok + "'");
            }
        }
        if (!cur.empty()) sizes.push_back(parse_uint(cur, "set element"));
        if (sizes.empty()) throw std::invalid_argument("profile: empty set literal");
        return IntersectionRule::exactly(std::move(sizes));
    }
    return IntersectionRule::exactly({parse_uint(tok, "intersection size")});
}

} // namespace

ConstraintProfile parse_profile(const std::string& text) {
    const auto toks = split_top_level(text);
    if (toks.size() != 5)
        throw std::invalid_argument(
            "profile: expected 5 comma-separated fields, got " + std::to_string(toks.size()));
    return ConstraintProfile(parse_bound(toks[0]), parse_bound(toks[1]),
                             parse_rule(toks[2]), parse_rule(toks[3]), parse_rule(toks[4]));
}

} // namespace sps::tools
