#include "cosdyn/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace cosdyn::expr {

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::number;
    n->number = v;
    return n;
}

NodePtr make_variable() {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::variable;
    return n;
}

NodePtr make_unary(UnaryOp op, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::unary;
    n->unary = op;
    n->a = std::move(a);
    return n;
}

NodePtr make_binary(BinaryOp op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::binary;
    n->binary = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

NodePtr make_conditional(double threshold, NodePtr then_branch, NodePtr else_branch) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::conditional;
    n->threshold = threshold;
    n->a = std::move(then_branch);
    n->b = std::move(else_branch);
    return n;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        auto e = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) throw ParseError(pos_, "end of input or an operator");
        return e;
    }

  private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == src_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!consume(c)) throw ParseError(pos_, what);
    }

    std::string peek_ident() {
        skip_ws();
        std::size_t end = pos_;
        while (end < src_.size() &&
               (std::isalpha(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
            ++end;
        return std::string(src_.substr(pos_, end - pos_));
    }

    bool consume_ident(const std::string& ident) {
        if (peek_ident() == ident && !ident.empty()) {
            pos_ += ident.size();
            return true;
        }
        return false;
    }

    double parse_number() {
        skip_ws();
        double value = 0.0;
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc() || res.ptr == begin)
            throw ParseError(pos_, "a numeric literal");
        pos_ += static_cast<std::size_t>(res.ptr - begin);
        return value;
    }

    NodePtr parse_expr() {
        if (peek_ident() == "if") return parse_conditional();
        return parse_sum();
    }

    NodePtr parse_conditional() {
        consume_ident("if");
        skip_ws();
        if (!(consume_ident("x") || consume_ident("i")))
            throw ParseError(pos_, "the variable ('x' or 'i') after 'if'");
        skip_ws();
        if (!(pos_ + 1 < src_.size() && src_[pos_] == '>' && src_[pos_ + 1] == '='))
            throw ParseError(pos_, "'>=' in the conditional test");
        pos_ += 2;
        skip_ws();
        double threshold;
        if (consume('-'))
            threshold = -parse_number();
        else
            threshold = parse_number();
        if (!consume_ident("then")) throw ParseError(pos_, "'then'");
        auto a = parse_expr();
        if (!consume_ident("else")) throw ParseError(pos_, "'else'");
        auto b = parse_expr();
        return make_conditional(threshold, std::move(a), std::move(b));
    }

    NodePtr parse_sum() {
        auto lhs = parse_term();
        while (true) {
            if (consume('+'))
                lhs = make_binary(BinaryOp::add, std::move(lhs), parse_term());
            else if (consume('-'))
                lhs = make_binary(BinaryOp::sub, std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    NodePtr parse_term() {
        auto lhs = parse_factor();
        while (true) {
            if (consume('*'))
                lhs = make_binary(BinaryOp::mul, std::move(lhs), parse_factor());
            else if (consume('/'))
                lhs = make_binary(BinaryOp::div, std::move(lhs), parse_factor());
            else
                return lhs;
        }
    }

    NodePtr parse_factor() {
        if (consume('-')) return make_unary(UnaryOp::negate, parse_factor());
        return parse_power();
    }

    NodePtr parse_power() {
        auto base = parse_atom();
        if (consume('^')) return make_binary(BinaryOp::pow, std::move(base), parse_factor());
        return base;
    }

    NodePtr parse_atom() {
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "a number, 'x', a function call, '(' or 'if'");
        const char c = peek();
        if (c == '(') {
            consume('(');
            auto e = parse_expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return make_number(parse_number());
        const std::string ident = peek_ident();
        if (ident == "x" || ident == "i") {
            pos_ += ident.size();
            return make_variable();
        }
        if (ident == "if") return parse_conditional();
        if (ident == "abs" || ident == "ln" || ident == "exp") {
            pos_ += ident.size();
            expect('(', "'(' after '" + ident + "'");
            auto arg = parse_expr();
            expect(')', "')'");
            const UnaryOp op = ident == "abs"  ? UnaryOp::abs
                               : ident == "ln" ? UnaryOp::ln
                                               : UnaryOp::exp;
            return make_unary(op, std::move(arg));
        }
        if (!ident.empty())
            throw Error("unknown identifier '" + ident + "' at position " +
                        std::to_string(pos_));
        throw ParseError(pos_, "a number, 'x', a function call, '(' or 'if'");
    }
};

}  // namespace

NodePtr parse(std::string_view src) { return Parser(src).run(); }

double eval(const Node& node, double x) {
    switch (node.kind) {
        case Node::Kind::number: return node.number;
        case Node::Kind::variable: return x;
        case Node::Kind::unary: {
            const double a = eval(*node.a, x);
            switch (node.unary) {
                case UnaryOp::negate: return -a;
                case UnaryOp::abs: return std::abs(a);
                case UnaryOp::ln:
                    if (!(a > 0.0))
                        throw EvalError("ln of a nonpositive value (" + std::to_string(a) +
                                        ")");
                    return std::log(a);
                case UnaryOp::exp: return std::exp(a);
            }
            break;
        }
        case Node::Kind::binary: {
            const double a = eval(*node.a, x);
            const double b = eval(*node.b, x);
            double r = 0.0;
            switch (node.binary) {
                case BinaryOp::add: r = a + b; break;
                case BinaryOp::sub: r = a - b; break;
                case BinaryOp::mul: r = a * b; break;
                case BinaryOp::div:
                    if (b == 0.0) throw EvalError("division by zero");
                    r = a / b;
                    break;
                case BinaryOp::pow: r = std::pow(a, b); break;
            }
            if (std::isnan(r)) throw EvalError("expression evaluated to NaN");
            return r;
        }
        case Node::Kind::conditional:
            return x >= node.threshold ? eval(*node.a, x) : eval(*node.b, x);
    }
    throw EvalError("malformed expression node");
}

namespace {

void render(const Node& node, std::ostringstream& os) {
    switch (node.kind) {
        case Node::Kind::number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", node.number);
            os << buf;
            return;
        }
        case Node::Kind::variable: os << 'x'; return;
        case Node::Kind::unary: {
            switch (node.unary) {
                case UnaryOp::negate: os << "(-"; break;
                case UnaryOp::abs: os << "abs("; break;
                case UnaryOp::ln: os << "ln("; break;
                case UnaryOp::exp: os << "exp("; break;
            }
            render(*node.a, os);
            os << ')';
            return;
        }
        case Node::Kind::binary: {
            os << '(';
            render(*node.a, os);
            switch (node.binary) {
                case BinaryOp::add: os << " + "; break;
                case BinaryOp::sub: os << " - "; break;
                case BinaryOp::mul: os << " * "; break;
                case BinaryOp::div: os << " / "; break;
                case BinaryOp::pow: os << " ^ "; break;
            }
            render(*node.b, os);
            os << ')';
            return;
        }
        case Node::Kind::conditional: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", node.threshold);
            os << "(if x >= " << buf << " then ";
            render(*node.a, os);
            os << " else ";
            render(*node.b, os);
            os << ')';
            return;
        }
    }
}

}  // namespace

std::string to_string(const Node& node) {
    std::ostringstream os;
    render(node, os);
    return os.str();
}

bool equal(const Node& lhs, const Node& rhs) {
    if (lhs.kind != rhs.kind) return false;
    switch (lhs.kind) {
        case Node::Kind::number: return lhs.number == rhs.number;
        case Node::Kind::variable: return true;
        case Node::Kind::unary: return lhs.unary == rhs.unary && equal(*lhs.a, *rhs.a);
        case Node::Kind::binary:
            return lhs.binary == rhs.binary && equal(*lhs.a, *rhs.a) && equal(*lhs.b, *rhs.b);
        case Node::Kind::conditional:
            return lhs.threshold == rhs.threshold && equal(*lhs.a, *rhs.a) &&
                   equal(*lhs.b, *rhs.b);
    }
    return false;
}

bool is_constant(const Node& node) {
    switch (node.kind) {
        case Node::Kind::number: return true;
        case Node::Kind::variable: return false;
        case Node::Kind::unary: return is_constant(*node.a);
        case Node::Kind::binary: return is_constant(*node.a) && is_constant(*node.b);
        case Node::Kind::conditional: return false;  // reads the variable in the test
    }
    return false;
}

}  // namespace cosdyn::expr
