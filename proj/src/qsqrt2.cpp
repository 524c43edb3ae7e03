#include "colorsuper/qsqrt2.hpp"

#include <cctype>

namespace colorsuper {

std::string to_string(const QSqrt2& q) {
    if (q.b == 0) return q.a.str();
    if (q.a == 0) return "(" + q.b.str() + ")*sqrt2";
    return "(" + q.a.str() + ") + (" + q.b.str() + ")*sqrt2";
}

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

// Grammar after whitespace removal:
//   term            := "(" rat ")" [ "*sqrt2" ] | rat | "(" rat ")"
//   qsqrt2          := term [ "+" term ]
Rat parse_paren_rat(const std::string& s, std::size_t& pos) {
    if (pos >= s.size()) throw std::invalid_argument("bad Q(sqrt2) literal");
    std::size_t start = pos;
    bool paren = s[pos] == '(';
    if (paren) {
        std::size_t close = s.find(')', pos);
        if (close == std::string::npos)
            throw std::invalid_argument("unbalanced paren in: " + s);
        Rat r = parse_rational(s.substr(pos + 1, close - pos - 1));
        pos = close + 1;
        return r;
    }
    std::size_t end = pos;
    if (end < s.size() && (s[end] == '+' || s[end] == '-')) ++end;
    while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '/'))
        ++end;
    if (end == start) throw std::invalid_argument("bad Q(sqrt2) literal: " + s);
    Rat r = parse_rational(s.substr(pos, end - pos));
    pos = end;
    return r;
}

}  // namespace

QSqrt2 parse_qsqrt2(const std::string& raw) {
    std::string s = strip_ws(raw);
    std::size_t pos = 0;
    QSqrt2 out;
    bool first = true;
    while (pos < s.size()) {
        if (!first) {
            if (s[pos] != '+' && s[pos] != '-')
                throw std::invalid_argument("bad Q(sqrt2) literal: " + raw);
            // leave '-' to be consumed as the sign of the next rational when bare;
            // "(a) + (b)*sqrt2" always separates with '+'
            if (s[pos] == '+') ++pos;
        }
        Rat r = parse_paren_rat(s, pos);
        bool is_sqrt2 = false;
        if (s.compare(pos, 6, "*sqrt2") == 0) {
            is_sqrt2 = true;
            pos += 6;
        } else if (s.compare(pos, 5, "sqrt2") == 0) {
            is_sqrt2 = true;
            pos += 5;
        }
        if (is_sqrt2)
            out.b += r;
        else
            out.a += r;
        first = false;
    }
    return out;
}

}  // namespace colorsuper
