#include "qons/parser.hpp"

#include <algorithm>
#include <cctype>

namespace qons {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind = End;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            if (src_[pos_] == '\n') ++line_, col_ = 1;
            else ++col_;
            ++pos_;
        }
        tok_ = Token{Token::End, "", line_, col_};
        if (pos_ >= src_.size()) return;
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) bump();
            tok_.kind = Token::Number;
            return finish(start);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            bump();
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                bump();
            tok_.kind = Token::Ident;
            return finish(start);
        }
        if (std::string("+-*/^()[],").find(c) != std::string::npos) {
            size_t start = pos_;
            bump();
            tok_.kind = Token::Op;
            return finish(start);
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }
    void bump() {
        ++pos_;
        ++col_;
    }
    void finish(size_t start) {
        tok_.text = src_.substr(start, pos_ - start);
        tok_.col = col_ - int(tok_.text.size());
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

int edit_distance(const std::string& a, const std::string& b) {
    std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
    for (size_t j = 0; j <= b.size(); ++j) prev[j] = int(j);
    for (size_t i = 1; i <= a.size(); ++i) {
        cur[0] = int(i);
        for (size_t j = 1; j <= b.size(); ++j) {
            int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

class Parser {
  public:
    Parser(const std::string& src, AlphabetPtr alphabet)
        : lex_(src), alphabet_(std::move(alphabet)) {}

    NcPoly parse() {
        NcPoly e = expr();
        if (lex_.peek().kind != Token::End)
            fail("unexpected trailing input '" + lex_.peek().text + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(lex_.peek().line, lex_.peek().col, msg);
    }
    bool eat_op(const std::string& s) {
        if (lex_.peek().kind == Token::Op && lex_.peek().text == s) {
            lex_.take();
            return true;
        }
        return false;
    }
    void expect_op(const std::string& s) {
        if (!eat_op(s)) fail("expected '" + s + "'");
    }

    NcPoly expr() {
        bool neg = eat_op("-");
        NcPoly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (eat_op("+")) acc += term();
            else if (eat_op("-")) acc -= term();
            else return acc;
        }
    }

    NcPoly term() {
        NcPoly acc = factor();
        for (;;) {
            if (eat_op("*")) {
                acc = acc * factor();
            } else if (eat_op("/")) {
                NcPoly d = factor();
                acc = acc * scalar_of(d, "divisor").inverse();
            } else {
                return acc;
            }
        }
    }

    NcPoly factor() {
        NcPoly base = primary();
        if (!eat_op("^")) return base;
        bool neg = eat_op("-");
        if (lex_.peek().kind != Token::Number) fail("expected integer exponent");
        long e = std::stol(lex_.take().text);
        if (neg) e = -e;
        if (e < 0) {
            Scalar s = scalar_of(base, "base of a negative power");
            Scalar r = Scalar::one();
            for (long i = 0; i < -e; ++i) r = r * s.inverse();
            return NcPoly::constant(alphabet_, r);
        }
        NcPoly r = NcPoly::one(alphabet_);
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    NcPoly primary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Number) {
            return NcPoly::constant(alphabet_, Scalar(std::stol(lex_.take().text)));
        }
        if (t.kind == Token::Ident) {
            Token id = lex_.take();
            if (id.text == "q") return NcPoly::constant(alphabet_, Scalar::q_power(1));
            if (auto sym = alphabet_->find(id.text)) return NcPoly::generator(alphabet_, *sym);
            std::string msg = "unknown generator '" + id.text + "'";
            std::vector<std::string> close;
            for (const auto& name : alphabet_->names())
                if (edit_distance(id.text, name) <= 2) close.push_back(name);
            if (!close.empty()) {
                msg += "; did you mean ";
                for (size_t i = 0; i < close.size(); ++i) msg += (i ? ", " : "") + close[i];
                msg += "?";
            }
            throw ParseError(id.line, id.col, msg);
        }
        if (eat_op("(")) {
            NcPoly e = expr();
            expect_op(")");
            return e;
        }
        if (eat_op("[")) {
            NcPoly x = expr();
            expect_op(",");
            NcPoly y = expr();
            expect_op("]");
            if (lex_.peek().kind == Token::Ident && lex_.peek().text == "_q") {
                lex_.take();
                return q_bracket_op(x, y);
            }
            return bracket(x, y);
        }
        fail("expected an expression");
    }

    Scalar scalar_of(const NcPoly& x, const char* what) {
        if (x.is_zero()) {
            if (std::string(what) == "divisor") throw DivisionByZero();
            return Scalar::zero();
        }
        if (x.term_count() == 1 && x.leading_word().empty()) return x.leading_coeff();
        fail(std::string(what) + " must be scalar-valued");
    }

    Lexer lex_;
    AlphabetPtr alphabet_;
};

}  // namespace

NcPoly parse_expr(const std::string& source, const AlphabetPtr& alphabet) {
    return Parser(source, alphabet).parse();
}

Scalar parse_scalar_text(const std::string& source) {
    static const AlphabetPtr empty = make_alphabet({});
    NcPoly p = parse_expr(source, empty);
    if (p.is_zero()) return Scalar::zero();
    return p.leading_coeff();
}

}  // namespace qons
