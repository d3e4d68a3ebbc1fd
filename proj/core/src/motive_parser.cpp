#include "motzeta/motive_parser.hpp"

#include <cctype>
#include <sstream>

#include "motzeta/json_io.hpp"

namespace motzeta {

namespace {

std::string format_message(const std::string& msg, int line, int column,
                           const std::vector<std::string>& expected) {
    std::ostringstream os;
    os << msg << " at " << line << ":" << column;
    if (!expected.empty()) {
        os << " (expected ";
        for (size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << expected[i];
        os << ")";
    }
    return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& msg, int line, int column,
                       std::vector<std::string> expected)
    : std::runtime_error(format_message(msg, line, column, expected)),
      line(line),
      column(column),
      expected(std::move(expected)) {}

namespace {

enum class Tok { Plus, Minus, Star, Caret, LParen, RParen, Nat, KwL, KwA, KwP, KwGm, KwPt, KwCoh, End };

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Nat: return "number";
        case Tok::KwL: return "'L'";
        case Tok::KwA: return "'A'";
        case Tok::KwP: return "'P'";
        case Tok::KwGm: return "'Gm'";
        case Tok::KwPt: return "'pt'";
        case Tok::KwCoh: return "'coh'";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) { advance(); }

    MotivePtr parse() {
        MotivePtr e = expr();
        expect(Tok::End, {});
        return e;
    }

private:
    // --- lexer ---
    void skip_ws() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    void advance() {
        skip_ws();
        tok_line_ = line_;
        tok_col_ = col_;
        if (pos_ >= src_.size()) {
            tok_ = Tok::End;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': tok_ = Tok::Plus; consume(1); return;
            case '-': tok_ = Tok::Minus; consume(1); return;
            case '*': tok_ = Tok::Star; consume(1); return;
            case '^': tok_ = Tok::Caret; consume(1); return;
            case '(': tok_ = Tok::LParen; consume(1); return;
            case ')': tok_ = Tok::RParen; consume(1); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
            const std::string digits(src_.substr(pos_, end - pos_));
            if (digits.size() > 9)
                throw ParseError("number too large", tok_line_, tok_col_, {});
            nat_ = static_cast<unsigned>(std::stoul(digits));
            consume(end - pos_);
            tok_ = Tok::Nat;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t end = pos_;
            while (end < src_.size() && std::isalpha(static_cast<unsigned char>(src_[end]))) ++end;
            const std::string_view word = src_.substr(pos_, end - pos_);
            consume(end - pos_);
            if (word == "L") tok_ = Tok::KwL;
            else if (word == "A") tok_ = Tok::KwA;
            else if (word == "P") tok_ = Tok::KwP;
            else if (word == "Gm") tok_ = Tok::KwGm;
            else if (word == "pt") tok_ = Tok::KwPt;
            else if (word == "coh") tok_ = Tok::KwCoh;
            else
                throw ParseError("unknown name '" + std::string(word) + "'", tok_line_, tok_col_,
                                 {"'L'", "'A'", "'P'", "'Gm'", "'pt'", "'coh'"});
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", tok_line_, tok_col_, {});
    }

    void consume(size_t n) {
        pos_ += n;
        col_ += static_cast<int>(n);
    }

    void expect(Tok t, std::vector<std::string> also_expected) {
        if (tok_ != t) {
            also_expected.insert(also_expected.begin(), tok_name(t));
            throw ParseError(std::string("unexpected ") + tok_name(tok_), tok_line_, tok_col_,
                             std::move(also_expected));
        }
        if (t != Tok::End) advance();
    }

    unsigned expect_nat() {
        if (tok_ != Tok::Nat)
            throw ParseError(std::string("unexpected ") + tok_name(tok_), tok_line_, tok_col_,
                             {"number"});
        const unsigned v = nat_;
        advance();
        return v;
    }

    // Raw path characters until ')'. Must be called when tok_ == LParen, with
    // pos_ sitting just past the '(' — the path is not tokenizable and is
    // scanned directly. Consumes the ')' and advances to the following token.
    std::string lex_path() {
        skip_ws();
        size_t end = pos_;
        while (end < src_.size() && src_[end] != ')') ++end;
        if (end == src_.size())
            throw ParseError("unterminated coh(...) path", line_, col_, {"')'"});
        std::string path(src_.substr(pos_, end - pos_));
        while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
        if (path.empty()) throw ParseError("empty coh(...) path", line_, col_, {});
        consume(end - pos_);
        consume(1);  // the ')' itself
        advance();
        return path;
    }

    // --- grammar ---
    MotivePtr expr() {
        MotivePtr lhs = term();
        while (tok_ == Tok::Plus || tok_ == Tok::Minus) {
            const bool plus = (tok_ == Tok::Plus);
            advance();
            MotivePtr rhs = term();
            lhs = plus ? sum(std::move(lhs), std::move(rhs)) : diff(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    MotivePtr term() {
        MotivePtr lhs = factor();
        while (tok_ == Tok::Star) {
            advance();
            MotivePtr rhs = factor();
            lhs = prod(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    MotivePtr factor() {
        switch (tok_) {
            case Tok::KwL:
                advance();
                return lefschetz();
            case Tok::KwA: {
                advance();
                return affine(expect_nat());
            }
            case Tok::KwP: {
                advance();
                return projective(expect_nat());
            }
            case Tok::KwGm: {
                advance();
                if (tok_ == Tok::Caret) {
                    advance();
                    return torus(expect_nat());
                }
                return torus(1);
            }
            case Tok::KwPt: {
                advance();
                expect(Tok::LParen, {});
                const unsigned m = expect_nat();
                expect(Tok::RParen, {});
                if (m < 1)
                    throw ParseError("pt(m) requires m >= 1", tok_line_, tok_col_, {});
                return point(m);
            }
            case Tok::KwCoh: {
                advance();
                if (tok_ != Tok::LParen)
                    throw ParseError(std::string("unexpected ") + tok_name(tok_), tok_line_,
                                     tok_col_, {"'('"});
                const int pline = line_, pcol = col_;
                const std::string path = lex_path();
                try {
                    CohomologyData data = cohomology_from_json(load_file(path));
                    return cohomology(std::move(data.complex), path);
                } catch (const std::exception& ex) {
                    throw ParseError(std::string("cannot load cohomology data: ") + ex.what(),
                                     pline, pcol, {});
                }
            }
            case Tok::LParen: {
                advance();
                MotivePtr e = expr();
                expect(Tok::RParen, {"'+'", "'-'", "'*'"});
                return e;
            }
            default:
                throw ParseError(std::string("unexpected ") + tok_name(tok_), tok_line_, tok_col_,
                                 {"'L'", "'A'", "'P'", "'Gm'", "'pt'", "'coh'", "'('"});
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Tok tok_ = Tok::End;
    unsigned nat_ = 0;
    int tok_line_ = 1;
    int tok_col_ = 1;
};

int level_of(const MotiveExpr& x) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, mot::Sum> || std::is_same_v<T, mot::Diff>)
                return 1;
            else if constexpr (std::is_same_v<T, mot::Prod>)
                return 2;
            else
                return 3;
        },
        x.node());
}

void print_into(const MotiveExpr& x, int min_level, std::string& out) {
    const int lvl = level_of(x);
    const bool parens = lvl < min_level;
    if (parens) out += "(";
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, mot::Point>) {
                out += "pt(" + std::to_string(node.m) + ")";
            } else if constexpr (std::is_same_v<T, mot::Lefschetz>) {
                out += "L";
            } else if constexpr (std::is_same_v<T, mot::Affine>) {
                out += "A" + std::to_string(node.n);
            } else if constexpr (std::is_same_v<T, mot::Projective>) {
                out += "P" + std::to_string(node.n);
            } else if constexpr (std::is_same_v<T, mot::Torus>) {
                out += (node.r == 1) ? "Gm" : "Gm^" + std::to_string(node.r);
            } else if constexpr (std::is_same_v<T, mot::Cohomology>) {
                out += "coh(" + node.source + ")";
            } else if constexpr (std::is_same_v<T, mot::Sum>) {
                print_into(*node.lhs, 1, out);
                out += " + ";
                print_into(*node.rhs, 2, out);
            } else if constexpr (std::is_same_v<T, mot::Diff>) {
                print_into(*node.lhs, 1, out);
                out += " - ";
                print_into(*node.rhs, 2, out);
            } else {
                static_assert(std::is_same_v<T, mot::Prod>);
                print_into(*node.lhs, 2, out);
                out += " * ";
                print_into(*node.rhs, 3, out);
            }
        },
        x.node());
    if (parens) out += ")";
}

}  // namespace

MotivePtr parse_motive(std::string_view src) {
    Parser p(src);
    return p.parse();
}

std::string print_motive(const MotiveExpr& x) {
    std::string out;
    print_into(x, 1, out);
    return out;
}

}  // namespace motzeta
