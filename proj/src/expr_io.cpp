#include "leviscope/expr_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace leviscope {

namespace {

struct Token {
    enum Kind { Num, Ident, Tilde, Caret, Star, Plus, Minus, Slash, LParen, RParen, End } kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next() {
        skip_ws();
        int line = line_, col = col_;
        if (pos_ >= s_.size()) return {Token::End, "", line, col};
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                advance();
            }
            if (pos_ < s_.size() && s_[pos_] == '.')
                throw parse_error("decimal literals are not supported; use p/q rationals", line_, col_);
            return {Token::Num, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_];
                advance();
            }
            return {Token::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '~': return {Token::Tilde, "~", line, col};
            case '^': return {Token::Caret, "^", line, col};
            case '*': return {Token::Star, "*", line, col};
            case '+': return {Token::Plus, "+", line, col};
            case '-': return {Token::Minus, "-", line, col};
            case '/': return {Token::Slash, "/", line, col};
            case '(': return {Token::LParen, "(", line, col};
            case ')': return {Token::RParen, ")", line, col};
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
    }
    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

class Parser {
public:
    Parser(const std::string& text, VarSpacePtr space,
           const std::map<std::string, std::string>& aliases = {})
        : lex_(text), space_(std::move(space)), aliases_(aliases) {
        cur_ = lex_.next();
    }

    Poly parse() {
        Poly p = expr();
        expect(Token::End, "end of input");
        return p;
    }

private:
    Poly expr() {
        bool neg = false;
        if (cur_.kind == Token::Minus) {
            neg = true;
            bump();
        }
        Poly acc = term();
        if (neg) acc = -acc;
        while (cur_.kind == Token::Plus || cur_.kind == Token::Minus) {
            bool minus = cur_.kind == Token::Minus;
            bump();
            Poly t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (cur_.kind == Token::Star) {
            bump();
            acc = acc * factor();
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (cur_.kind == Token::Caret) {
            bump();
            if (cur_.kind == Token::Minus)
                throw parse_error("negative exponent", cur_.line, cur_.col);
            if (cur_.kind != Token::Num)
                throw parse_error("expected integer exponent", cur_.line, cur_.col);
            if (cur_.text.size() > 4)
                throw parse_error("exponent too large", cur_.line, cur_.col);
            long e = std::stol(cur_.text);
            if (e > 1024) throw parse_error("exponent too large", cur_.line, cur_.col);
            bump();
            if (cur_.kind == Token::Slash)
                throw parse_error("fractional exponent", cur_.line, cur_.col);
            Poly r = Poly::constant(space_, GaussianRational(1));
            for (long k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Poly primary() {
        switch (cur_.kind) {
            case Token::Minus: {
                bump();
                return -primary();
            }
            case Token::Num: {
                Rational num(cur_.text);
                bump();
                if (cur_.kind == Token::Slash) {
                    bump();
                    if (cur_.kind != Token::Num)
                        throw parse_error("expected denominator", cur_.line, cur_.col);
                    Rational den(cur_.text);
                    bump();
                    if (den == 0) throw parse_error("zero denominator", cur_.line, cur_.col);
                    num /= den;
                }
                return Poly::constant(space_, GaussianRational(std::move(num)));
            }
            case Token::Ident: {
                if (cur_.text == "i") {
                    bump();
                    return Poly::constant(space_, GaussianRational::unit_i());
                }
                if (cur_.text == "conj") {
                    bump();
                    expect(Token::LParen, "'('");
                    if (cur_.kind != Token::Ident)
                        throw parse_error("expected variable inside conj()", cur_.line, cur_.col);
                    Poly v = conjugate_var(cur_.text, cur_.line, cur_.col);
                    bump();
                    expect(Token::RParen, "')'");
                    return v;
                }
                Poly v = plain_var(cur_.text, cur_.line, cur_.col);
                bump();
                return v;
            }
            case Token::Tilde: {
                bump();
                if (cur_.kind != Token::Ident)
                    throw parse_error("expected variable after '~'", cur_.line, cur_.col);
                Poly v = conjugate_var(cur_.text, cur_.line, cur_.col);
                bump();
                return v;
            }
            case Token::LParen: {
                bump();
                Poly p = expr();
                expect(Token::RParen, "')'");
                return p;
            }
            default:
                throw parse_error("unexpected token '" + cur_.text + "'", cur_.line, cur_.col);
        }
    }

    Poly plain_var(const std::string& name, int line, int col) {
        auto v = space_->find(name);
        if (!v) {
            auto alias = aliases_.find(name);
            if (alias != aliases_.end()) v = space_->find(alias->second);
            if (!v) throw parse_error("undeclared variable '" + name + "'", line, col);
        }
        return Poly::variable(space_, *v);
    }

    Poly conjugate_var(const std::string& name, int line, int col) {
        auto v = space_->find(name);
        if (!v) throw parse_error("undeclared variable '" + name + "'", line, col);
        auto p = space_->partner(*v);
        if (!p)
            throw parse_error("variable '" + name + "' has no conjugate partner", line, col);
        return Poly::variable(space_, *p);
    }

    void expect(Token::Kind k, const char* what) {
        if (cur_.kind != k)
            throw parse_error(std::string("expected ") + what, cur_.line, cur_.col);
        bump();
    }
    void bump() { cur_ = lex_.next(); }

    Lexer lex_;
    VarSpacePtr space_;
    std::map<std::string, std::string> aliases_;
    Token cur_;
};

// Coordinate-convention sort key: family precedence x < y < z < w < other,
// then numeric suffix, then name.
std::tuple<int, long, std::string> name_sort_key(const std::string& name) {
    std::size_t split = name.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(name[split - 1]))) --split;
    std::string stem = name.substr(0, split);
    long suffix = split < name.size() ? std::stol(name.substr(split)) : -1;
    int family = 4;
    if (stem == "x") family = 0;
    else if (stem == "y") family = 1;
    else if (stem == "z") family = 2;
    else if (stem == "w") family = 3;
    return {family, suffix, name};
}

VarSpacePtr infer_space(const std::string& text) {
    Lexer lex(text);
    std::vector<std::string> names;
    for (Token t = lex.next(); t.kind != Token::End; t = lex.next()) {
        if (t.kind == Token::Ident && t.text != "i" && t.text != "conj")
            if (std::find(names.begin(), names.end(), t.text) == names.end())
                names.push_back(t.text);
    }
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        return name_sort_key(a) < name_sort_key(b);
    });
    if (names.empty()) names.push_back("x");
    return VarSpace::paired(std::move(names));
}

}  // namespace

Poly parse_poly(const ExprSource& src) {
    VarSpacePtr space = src.declared_vars ? src.declared_vars : infer_space(src.text);
    return Parser(src.text, space, src.aliases).parse();
}

GaussianRational parse_gaussian(const std::string& text) {
    auto space = VarSpace::plain({"__none"});
    Poly p = Parser(text, space).parse();
    if (!p.is_constant()) throw parse_error("expected a constant", 1, 1);
    return p.is_zero() ? GaussianRational() : p.terms().begin()->second;
}

namespace {

std::string monomial_to_string(const Monomial& m, const VarSpace& space) {
    std::string s;
    for (const auto& [v, e] : m.entries()) {
        if (!s.empty()) s += "*";
        s += space.name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// coefficient and sign rendering for one term; returns (negative, body)
std::pair<bool, std::string> term_to_string(const Monomial& m, const GaussianRational& c,
                                            const VarSpace& space) {
    bool neg = false;
    GaussianRational q = c;
    if (q.im == 0 || q.re == 0) {
        // single-component coefficient: pull the sign out
        if (sgn(q.re) < 0 || (q.re == 0 && sgn(q.im) < 0)) {
            neg = true;
            q = -q;
        }
    }
    std::string mono = monomial_to_string(m, space);
    std::string coeff = gaussian_to_string(q);
    if (mono.empty()) return {neg, coeff};
    if (coeff == "1") return {neg, mono};
    if (coeff == "i") return {neg, "i*" + mono};
    return {neg, coeff + "*" + mono};
}

}  // namespace

std::string print_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    const VarSpace& space = *p.space();
    std::string out;
    bool first = true;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        auto [neg, body] = term_to_string(it->first, it->second, space);
        if (first) {
            out += neg ? "-" : "";
            out += body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

PolyFile parse_poly_file_text(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    VarSpacePtr space;
    std::map<std::string, std::string> aliases;
    std::string expr_text;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        auto pos = trimmed.find_first_not_of(" \t\r");
        trimmed = pos == std::string::npos ? "" : trimmed.substr(pos);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        if (trimmed.rfind("vars:", 0) == 0) {
            std::string rest = trimmed.substr(5);
            auto eq = rest.find('=');
            if (rest.find('n') == std::string::npos || eq == std::string::npos)
                throw parse_error("vars: header must look like 'vars: n=<k>'", lineno, 1);
            int n = 0;
            try {
                n = std::stoi(rest.substr(eq + 1));
            } catch (const std::exception&) {
                throw parse_error("vars: header must look like 'vars: n=<k>'", lineno, 1);
            }
            if (n < 1 || n > 64) throw parse_error("vars: n must be in 1..64", lineno, 1);
            std::vector<std::string> names{"x"};
            for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
            space = VarSpace::paired(std::move(names));
            // the complexified coordinate families alias the conjugate slots
            aliases["z"] = "~x";
            for (int j = 1; j <= n; ++j)
                aliases["w" + std::to_string(j)] = "~y" + std::to_string(j);
            continue;
        }
        if (trimmed.rfind("coords:", 0) == 0) {
            std::istringstream cs(trimmed.substr(7));
            std::vector<std::string> names;
            std::string nm;
            while (cs >> nm) names.push_back(nm);
            if (names.empty()) throw parse_error("coords: header lists no names", lineno, 1);
            space = VarSpace::paired(std::move(names));
            aliases.clear();
            continue;
        }
        expr_text += line;
        expr_text += "\n";
    }
    Poly p = parse_poly(ExprSource{expr_text, space, aliases});
    return PolyFile{p.space(), p};
}

PolyFile read_poly_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_poly_file_text(buf.str());
}

}  // namespace leviscope
