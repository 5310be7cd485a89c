#include "permpoly/polynomial.hpp"

#include "permpoly/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace permpoly {

IntPoly::IntPoly(std::vector<BigInt> coeffs_ascending) : coeffs_(std::move(coeffs_ascending)) {
    canonicalize();
}

void IntPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0)
        p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(BigInt c, int deg) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::coeff(int d) const {
    static const BigInt zero(0);
    if (d < 0 || d >= static_cast<int>(coeffs_.size()))
        return zero;
    return coeffs_[static_cast<std::size_t>(d)];
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    canonicalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    canonicalize();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero())
        return IntPoly{};
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const BigInt& c) const {
    if (c == 0 || is_zero())
        return IntPoly{};
    std::vector<BigInt> out(coeffs_);
    for (auto& x : out)
        x *= c;
    return IntPoly(std::move(out));
}

namespace {

void append_term(std::string& out, const BigInt& c, int deg) {
    const bool neg = c < 0;
    BigInt a = neg ? BigInt(-c) : c;
    if (out.empty()) {
        if (neg)
            out += '-';
    } else {
        out += neg ? '-' : '+';
    }
    if (deg == 0) {
        out += a.str();
        return;
    }
    if (a != 1)
        out += a.str();
    out += 'x';
    if (deg > 1) {
        out += '^';
        out += std::to_string(deg);
    }
}

std::string human_format(const IntPoly& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        if (p.coeff(d) == 0)
            continue;
        append_term(out, p.coeff(d), d);
    }
    return out;
}

std::string coeff_list_format(const IntPoly& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i)
            out += ", ";
        out += p.coeffs()[i].str();
    }
    out += "]";
    return out;
}

} // namespace

std::string format_poly(const IntPoly& p, PolyStyle style) {
    switch (style) {
    case PolyStyle::human:
        return human_format(p);
    case PolyStyle::coeff_list:
        return coeff_list_format(p);
    case PolyStyle::json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : p.coeffs())
            arr.push_back(c.str());
        return nlohmann::json{{"coeffs_ascending", arr}}.dump();
    }
    }
    return {};
}

namespace {

BigInt parse_bigint(std::string_view tok) {
    if (tok.empty())
        throw ParseError("empty integer token");
    std::size_t start = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
    if (start == tok.size())
        throw ParseError("sign without digits in integer token");
    for (std::size_t i = start; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw ParseError("bad integer token: " + std::string(tok));
    return BigInt(std::string(tok));
}

} // namespace

IntPoly parse_poly_coeff_list(std::string_view text) {
    auto skip_ws = [&](std::size_t i) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        return i;
    };
    std::size_t i = skip_ws(0);
    if (i >= text.size() || text[i] != '[')
        throw ParseError("coefficient list must start with '['");
    ++i;
    std::vector<BigInt> coeffs;
    i = skip_ws(i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            i = skip_ws(i);
            std::size_t j = i;
            while (j < text.size() && text[j] != ',' && text[j] != ']' &&
                   !std::isspace(static_cast<unsigned char>(text[j])))
                ++j;
            coeffs.push_back(parse_bigint(text.substr(i, j - i)));
            i = skip_ws(j);
            if (i >= text.size())
                throw ParseError("unterminated coefficient list");
            if (text[i] == ']') {
                ++i;
                break;
            }
            if (text[i] != ',')
                throw ParseError("expected ',' or ']' in coefficient list");
            ++i;
        }
    }
    i = skip_ws(i);
    if (i != text.size())
        throw ParseError("trailing characters after coefficient list");
    return IntPoly(std::move(coeffs));
}

IntPoly parse_poly_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("coeffs_ascending") ||
        !j["coeffs_ascending"].is_array())
        throw ParseError("polynomial JSON must be {\"coeffs_ascending\": [...]}");
    std::vector<BigInt> coeffs;
    for (const auto& item : j["coeffs_ascending"]) {
        if (!item.is_string())
            throw ParseError("polynomial JSON coefficients must be strings");
        coeffs.push_back(parse_bigint(item.get<std::string>()));
    }
    return IntPoly(std::move(coeffs));
}

} // namespace permpoly
