#ifndef RIORDAN_EXPR_HPP
#define RIORDAN_EXPR_HPP

#include <cctype>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

// Built-in generating functions available in expressions:
//   c(u)  Catalan,       (1 - sqrt(1 - 4u)) / (2u)
//   M(u)  Motzkin,       (1 - u - sqrt(1 - 2u - 3u^2)) / (2u^2)
//   S(u)  large Schröder (1 - u - sqrt(1 - 6u + u^2)) / (2u)
enum class Builtin { Catalan, Motzkin, Schroder };

inline const char* builtin_name(Builtin b) {
    switch (b) {
        case Builtin::Catalan: return "c";
        case Builtin::Motzkin: return "M";
        case Builtin::Schroder: return "S";
    }
    return "?";
}

// Expression tree of the g/f input language. Nodes are immutable and
// shared; `exponent` is only meaningful for Pow, `literal` for Literal and
// `builtin` for Call nodes.
struct ExprAst {
    enum class Kind { Literal, Var, Add, Sub, Mul, Div, Pow, Neg, Sqrt, Call };

    Kind kind;
    Rational literal;
    unsigned exponent = 0;
    Builtin builtin = Builtin::Catalan;
    std::vector<std::shared_ptr<const ExprAst>> children;
};

using ExprPtr = std::shared_ptr<const ExprAst>;

namespace detail {

inline ExprPtr make_node(ExprAst::Kind kind, std::vector<ExprPtr> children = {}) {
    auto node = std::make_shared<ExprAst>();
    node->kind = kind;
    node->children = std::move(children);
    return node;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(pos_, "end of input");
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!consume(c))
            throw ParseError(pos_, what);
    }

    bool digit_ahead() {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string read_digits() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError(pos_, "a digit");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string read_word() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    // expr := term (('+'|'-') term)*
    ExprPtr parse_expr() {
        auto lhs = parse_term();
        for (;;) {
            if (consume('+'))
                lhs = make_node(ExprAst::Kind::Add, {lhs, parse_term()});
            else if (consume('-'))
                lhs = make_node(ExprAst::Kind::Sub, {lhs, parse_term()});
            else
                return lhs;
        }
    }

    // term := factor (('*'|'/') factor)*
    ExprPtr parse_term() {
        auto lhs = parse_factor();
        for (;;) {
            if (consume('*'))
                lhs = make_node(ExprAst::Kind::Mul, {lhs, parse_factor()});
            else if (consume('/'))
                lhs = make_node(ExprAst::Kind::Div, {lhs, parse_factor()});
            else
                return lhs;
        }
    }

    // factor := '-' factor | atom ('^' nat)?
    ExprPtr parse_factor() {
        if (consume('-'))
            return make_node(ExprAst::Kind::Neg, {parse_factor()});
        auto base = parse_atom();
        if (consume('^')) {
            if (!digit_ahead())
                throw ParseError(pos_, "a nonnegative integer exponent");
            auto node = std::make_shared<ExprAst>();
            node->kind = ExprAst::Kind::Pow;
            node->exponent = static_cast<unsigned>(std::stoul(read_digits()));
            node->children = {base};
            return node;
        }
        return base;
    }

    // atom := rational | 'x' | '(' expr ')' | 'sqrt' '(' expr ')' | ident '(' expr ')'
    // A rational literal is an integer optionally followed by '/' and a
    // positive integer; the '/' is taken greedily when digits follow it.
    ExprPtr parse_atom() {
        if (at_end())
            throw ParseError(pos_, "a value");
        if (digit_ahead())
            return parse_rational();
        if (consume('(')) {
            auto inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        skip_ws();
        const std::size_t start = pos_;
        const std::string word = read_word();
        if (word == "x")
            return make_node(ExprAst::Kind::Var);
        if (word == "sqrt") {
            expect('(', "'(' after sqrt");
            auto inner = parse_expr();
            expect(')', "')'");
            return make_node(ExprAst::Kind::Sqrt, {inner});
        }
        if (word == "c" || word == "M" || word == "S") {
            expect('(', "'(' after a builtin name");
            auto inner = parse_expr();
            expect(')', "')'");
            auto node = std::make_shared<ExprAst>();
            node->kind = ExprAst::Kind::Call;
            node->builtin = word == "c" ? Builtin::Catalan : (word == "M" ? Builtin::Motzkin : Builtin::Schroder);
            node->children = {inner};
            return node;
        }
        if (!word.empty())
            throw ParseError(start, "'x', 'sqrt', 'c', 'M' or 'S'");
        throw ParseError(pos_, "a number, 'x', '(' or a function call");
    }

    ExprPtr parse_rational() {
        const std::string num = read_digits();
        mpz_class n(num, 10), d(1);
        if (pos_ < text_.size() && text_[pos_] == '/') {
            // Greedy: "p/q" with q digits is one literal; otherwise the '/'
            // stays with the enclosing term as a division.
            const std::size_t slash = pos_;
            ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                const std::size_t den_pos = pos_;
                d = mpz_class(read_digits(), 10);
                if (d == 0)
                    throw ParseError(den_pos, "a positive denominator");
            } else {
                pos_ = slash;
            }
        }
        auto node = std::make_shared<ExprAst>();
        node->kind = ExprAst::Kind::Literal;
        node->literal = Rational(n, d);
        return node;
    }
};

// Expansion of a builtin about its closed form, exact to `order`. The
// radical numerators have valuation 1 (c, S) or 2 (M), so the expansion is
// carried out with just enough headroom to land on the requested order.
inline TruncatedSeries<Rational> builtin_series(Builtin which, int order) {
    using Series = TruncatedSeries<Rational>;
    switch (which) {
        case Builtin::Catalan: {
            const auto rad = sqrt(Series::Polynomial(order + 1, {Rational(1), Rational(-4)}));
            return div_x_power(Series::One(order + 1) - rad, 1) * Rational(1, 2);
        }
        case Builtin::Motzkin: {
            const auto rad = sqrt(Series::Polynomial(order + 2, {Rational(1), Rational(-2), Rational(-3)}));
            return div_x_power(Series::Polynomial(order + 2, {Rational(1), Rational(-1)}) - rad, 2) * Rational(1, 2);
        }
        case Builtin::Schroder: {
            const auto rad = sqrt(Series::Polynomial(order + 1, {Rational(1), Rational(-6), Rational(1)}));
            return div_x_power(Series::Polynomial(order + 1, {Rational(1), Rational(-1)}) - rad, 1) * Rational(1, 2);
        }
    }
    throw Error("unknown builtin");
}

inline TruncatedSeries<Rational> eval_node(const ExprAst& node, int order) {
    using Series = TruncatedSeries<Rational>;
    switch (node.kind) {
        case ExprAst::Kind::Literal:
            return Series::Constant(order, node.literal);
        case ExprAst::Kind::Var:
            return Series::X(order);
        case ExprAst::Kind::Add:
            return eval_node(*node.children[0], order) + eval_node(*node.children[1], order);
        case ExprAst::Kind::Sub:
            return eval_node(*node.children[0], order) - eval_node(*node.children[1], order);
        case ExprAst::Kind::Mul:
            return eval_node(*node.children[0], order) * eval_node(*node.children[1], order);
        case ExprAst::Kind::Div:
            return eval_node(*node.children[0], order) / eval_node(*node.children[1], order);
        case ExprAst::Kind::Pow:
            return pow(eval_node(*node.children[0], order), static_cast<int>(node.exponent));
        case ExprAst::Kind::Neg:
            return -eval_node(*node.children[0], order);
        case ExprAst::Kind::Sqrt:
            return sqrt(eval_node(*node.children[0], order));
        case ExprAst::Kind::Call: {
            const auto arg = eval_node(*node.children[0], order);
            return compose(builtin_series(node.builtin, arg.order()), arg);
        }
    }
    throw Error("unknown expression node");
}

} // namespace detail

inline ExprPtr parse(std::string_view text) { return detail::Parser(text).parse(); }

// Exact expansion of the expression. Division by a series of valuation v
// shrinks the order by v; a headroom of 8 orders absorbs that for ordinary
// closed forms, after which the result is cut back to the requested order.
inline TruncatedSeries<Rational> eval(const ExprAst& ast, int order) {
    if (order < 0)
        throw Error("negative expansion order");
    constexpr int kHeadroom = 8;
    const auto wide = detail::eval_node(ast, order + kHeadroom);
    return wide.order() > order ? wide.truncated(order) : wide;
}

inline TruncatedSeries<Rational> eval(const ExprPtr& ast, int order) { return eval(*ast, order); }

// Convenience: parse then evaluate.
inline TruncatedSeries<Rational> eval(std::string_view text, int order) { return eval(*parse(text), order); }

} // namespace riordan

#endif // RIORDAN_EXPR_HPP
