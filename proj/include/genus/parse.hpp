#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "genus/ideal.hpp"
#include "genus/polynomial.hpp"

namespace genus {

inline constexpr int kMaxExponent = 512;

namespace detail {

struct Token {
    enum class Type { Integer, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;
    int column; // 1-based
};

inline std::vector<Token> tokenize(const std::string& src, int line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        int col = static_cast<int>(i) + 1;
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Type::Integer, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_'))
                ++j;
            out.push_back({Token::Type::Ident, src.substr(i, j - i), col});
            i = j;
            continue;
        }
        Token::Type t;
        switch (c) {
        case '+': t = Token::Type::Plus; break;
        case '-': t = Token::Type::Minus; break;
        case '*': t = Token::Type::Star; break;
        case '/': t = Token::Type::Slash; break;
        case '^': t = Token::Type::Caret; break;
        case '(': t = Token::Type::LParen; break;
        case ')': t = Token::Type::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back({t, std::string(1, c), col});
        ++i;
    }
    out.push_back({Token::Type::End, "", static_cast<int>(src.size()) + 1});
    return out;
}

// expr   := ('+'|'-')? term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := coefficient | variable ('^' exponent)? | '(' expr ')'
// Implicit multiplication is not allowed; coefficients are optionally
// signed integers or integer/integer rationals.
class PolynomialParser {
public:
    PolynomialParser(std::vector<Token> tokens, int vars,
                     const std::map<std::string, int>& names, int line)
        : toks_(std::move(tokens)), vars_(vars), names_(names), line_(line) {}

    Polynomial parse() {
        Polynomial p = expr();
        expect(Token::Type::End, "end of input");
        return p;
    }

private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    bool accept(Token::Type t) {
        if (cur().type != t) return false;
        advance();
        return true;
    }

    void expect(Token::Type t, const std::string& what) {
        if (cur().type != t)
            throw ParseError("expected " + what +
                                 (cur().type == Token::Type::End ? " at end of input"
                                                                 : ", found '" + cur().text + "'"),
                             line_, cur().column);
        advance();
    }

    Polynomial expr() {
        bool negate = false;
        if (accept(Token::Type::Minus))
            negate = true;
        else
            accept(Token::Type::Plus);
        Polynomial p = term();
        if (negate) p = -p;
        for (;;) {
            if (accept(Token::Type::Plus))
                p += term();
            else if (accept(Token::Type::Minus))
                p -= term();
            else
                break;
        }
        return p;
    }

    Polynomial term() {
        Polynomial p = factor();
        while (accept(Token::Type::Star)) p = p * factor();
        return p;
    }

    Polynomial factor() {
        if (cur().type == Token::Type::LParen) {
            advance();
            Polynomial p = expr();
            expect(Token::Type::RParen, "')'");
            return p;
        }
        if (cur().type == Token::Type::Plus || cur().type == Token::Type::Minus ||
            cur().type == Token::Type::Integer)
            return coefficient();
        if (cur().type == Token::Type::Ident) return variable();
        throw ParseError(cur().type == Token::Type::End
                             ? "expected a factor at end of input"
                             : "expected a factor, found '" + cur().text + "'",
                         line_, cur().column);
    }

    Polynomial coefficient() {
        bool neg = false;
        if (accept(Token::Type::Minus))
            neg = true;
        else
            accept(Token::Type::Plus);
        BigInt num = integer("a coefficient");
        BigInt den = 1;
        if (accept(Token::Type::Slash)) {
            int col = cur().column;
            den = integer("a denominator");
            if (den == 0) throw ParseError("zero denominator", line_, col);
        }
        if (neg) num = -num;
        return Polynomial::constant(vars_, BigRational(num, den));
    }

    Polynomial variable() {
        const Token& t = cur();
        auto it = names_.find(t.text);
        if (it == names_.end())
            throw ParseError("unknown variable '" + t.text + "'", line_, t.column);
        advance();
        int power = 1;
        if (accept(Token::Type::Caret)) {
            int col = cur().column;
            BigInt e = integer("an exponent");
            if (e > kMaxExponent)
                throw ParseError("exponent exceeds the guard of " +
                                     std::to_string(kMaxExponent),
                                 line_, col);
            power = static_cast<int>(e);
        }
        return Polynomial::term(Monomial::variable(vars_, it->second, power), BigRational(1));
    }

    BigInt integer(const std::string& what) {
        if (cur().type != Token::Type::Integer)
            throw ParseError("expected " + what +
                                 (cur().type == Token::Type::End ? " at end of input"
                                                                 : ", found '" + cur().text + "'"),
                             line_, cur().column);
        BigInt v(cur().text);
        advance();
        return v;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int vars_;
    const std::map<std::string, int>& names_;
    int line_;
};

} // namespace detail

inline std::map<std::string, int> default_variable_names(int vars) {
    std::map<std::string, int> names;
    for (int i = 0; i < vars; ++i) names["x" + std::to_string(i)] = i;
    return names;
}

/// Parses one polynomial expression over `vars` variables. The default
/// variable names are x0..x{vars-1}; `aliases` adds (or shadows) names.
inline Polynomial parse_polynomial(const std::string& text, int vars,
                                   const std::map<std::string, int>* aliases = nullptr,
                                   int line = 1) {
    if (vars <= 0) throw PreconditionError("ambient must have at least one variable");
    auto names = default_variable_names(vars);
    if (aliases)
        for (const auto& [name, idx] : *aliases) names[name] = idx;
    detail::PolynomialParser parser(detail::tokenize(text, line), vars, names, line);
    return parser.parse();
}

/// Canonical printing: terms in descending grevlex order, signs folded into
/// the separators, unit coefficients omitted. print-parse is the identity.
inline std::string print_polynomial(const Polynomial& p,
                                    const std::vector<std::string>* names = nullptr) {
    if (p.is_zero()) return "0";
    auto var_name = [&](int i) {
        if (names != nullptr && i < static_cast<int>(names->size())) return (*names)[i];
        return "x" + std::to_string(i);
    };
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        BigRational mag = c.sign() < 0 ? -c : c;
        std::string body;
        for (int i = 0; i < m.vars(); ++i) {
            if (m.exp(i) == 0) continue;
            if (!body.empty()) body += "*";
            body += var_name(i);
            if (m.exp(i) > 1) body += "^" + std::to_string(m.exp(i));
        }
        if (body.empty()) {
            out += mag.str();
        } else if (mag == BigRational(1)) {
            out += body;
        } else {
            out += mag.str() + "*" + body;
        }
    }
    return out;
}

/// A generator file: `#` comments, a mandatory `ambient: N` first line, an
/// optional `vars: a, b, ...` alias line (N+1 names), then one polynomial
/// expression per line.
struct GeneratorFile {
    int ambient_index = 0; // N; the ring has N+1 variables
    std::vector<std::string> names;
    std::vector<Polynomial> generators;

    Ideal ideal() const { return Ideal(ambient_index + 1, generators); }
};

inline GeneratorFile read_generator_file(std::istream& in) {
    GeneratorFile file;
    std::string raw;
    int line_no = 0;
    bool saw_ambient = false;
    bool saw_vars = false;
    std::map<std::string, int> aliases;
    auto strip = [](std::string s) {
        auto hash = s.find('#');
        if (hash != std::string::npos) s.erase(hash);
        auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string text = strip(raw);
        if (text.empty()) continue;
        if (!saw_ambient) {
            if (text.rfind("ambient:", 0) != 0)
                throw ParseError("first line must be 'ambient: N'", line_no, 1);
            std::istringstream rest(text.substr(8));
            int n = -1;
            if (!(rest >> n) || n < 0)
                throw ParseError("invalid ambient index", line_no, 9);
            std::string chaff;
            if (rest >> chaff) throw ParseError("trailing text after ambient index", line_no, 9);
            file.ambient_index = n;
            for (int i = 0; i <= n; ++i) file.names.push_back("x" + std::to_string(i));
            saw_ambient = true;
            continue;
        }
        if (!saw_vars && file.generators.empty() && text.rfind("vars:", 0) == 0) {
            saw_vars = true;
            std::istringstream rest(text.substr(5));
            std::string name;
            std::vector<std::string> given;
            while (std::getline(rest, name, ',')) {
                std::string t = strip(name);
                if (t.empty()) throw ParseError("empty variable name", line_no, 1);
                for (char ch : t)
                    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                        throw ParseError("invalid variable name '" + t + "'", line_no, 1);
                if (std::isdigit(static_cast<unsigned char>(t[0])))
                    throw ParseError("variable name cannot start with a digit", line_no, 1);
                given.push_back(t);
            }
            if (static_cast<int>(given.size()) != file.ambient_index + 1)
                throw ParseError("expected " + std::to_string(file.ambient_index + 1) +
                                     " variable names",
                                 line_no, 1);
            for (int i = 0; i < static_cast<int>(given.size()); ++i) {
                if (aliases.contains(given[i]))
                    throw ParseError("duplicate variable name '" + given[i] + "'", line_no, 1);
                aliases[given[i]] = i;
            }
            file.names = given;
            continue;
        }
        file.generators.push_back(parse_polynomial(text, file.ambient_index + 1,
                                                   saw_vars ? &aliases : nullptr, line_no));
    }
    if (!saw_ambient) throw ParseError("missing 'ambient: N' header", line_no + 1, 1);
    return file;
}

} // namespace genus
