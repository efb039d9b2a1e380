#include "sharelab/expr_parser.hpp"

#include <cctype>

namespace sharelab {

namespace {

ExprPtr make_node(ExprNode n) {
    return std::make_shared<const ExprNode>(std::move(n));
}

ExprPtr literal(Scalar v) {
    ExprNode n{ExprNode::Kind::Literal, std::move(v), 0, nullptr, nullptr};
    return make_node(std::move(n));
}

// Evaluates a constant subtree exactly (exp demotes to float).
Scalar fold_constant(const ExprPtr& node) {
    Series s = expr_series(node, Series::variable(Scalar::exact(0), 0,
                                                  BigFloat::kDefaultPrecision),
                           nullptr);
    return s.at(0);
}

class Parser {
  public:
    explicit Parser(const std::string& src) : s_(src) {}

    ExprFunction run() {
        ExprPtr e = parse_sum();
        skip_ws();
        if (i_ < s_.size())
            throw ParseError("unexpected input at offset " + std::to_string(i_),
                             i_, {"operator", "end of input"});
        return ExprFunction{e};
    }

  private:
    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c) {
        skip_ws();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }

    ExprPtr parse_sum() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (eat('+')) {
                ExprPtr rhs = parse_term();
                lhs = make_node({ExprNode::Kind::Add, Scalar(), 0, lhs, rhs});
            } else if (eat('-')) {
                ExprPtr rhs = parse_term();
                lhs = make_node({ExprNode::Kind::Sub, Scalar(), 0, lhs, rhs});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_unary();
        for (;;) {
            if (eat('*')) {
                ExprPtr rhs = parse_unary();
                lhs = make_node({ExprNode::Kind::Mul, Scalar(), 0, lhs, rhs});
            } else if (peek() == '/') {
                size_t slash = i_;
                ++i_;
                ExprPtr rhs = parse_unary();
                if (!expr_is_constant(rhs))
                    throw NonEntire("division by a non-constant expression", slash);
                Scalar d = fold_constant(rhs);
                if (d.is_zero())
                    throw ParseError("division by the constant zero", slash,
                                     {"nonzero constant"});
                lhs = make_node({ExprNode::Kind::DivConst, d, 0, lhs, nullptr});
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_unary() {
        if (eat('-')) {
            ExprPtr x = parse_unary();
            return make_node({ExprNode::Kind::Neg, Scalar(), 0, x, nullptr});
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (peek() == '^') {
            size_t caret = i_;
            ++i_;
            // right-associative; allow a sign on the exponent
            ExprPtr e = parse_unary_power();
            if (!expr_is_constant(e))
                throw NonEntire("exponent must be a constant integer", caret);
            Scalar v = fold_constant(e);
            if (!v.is_exact())
                throw NonEntire("exponent must be an exact integer", caret);
            const auto& g = v.exact_value();
            if (g.im != 0 || g.re.get_den() != 1)
                throw NonEntire("non-integer exponent", caret);
            if (!g.re.get_num().fits_slong_p())
                throw ParseError("exponent out of range", caret, {"small integer"});
            long n = g.re.get_num().get_si();
            if (n < 0) {
                if (!expr_is_constant(base))
                    throw NonEntire("negative power of a non-constant expression",
                                    caret);
                return literal(fold_constant(base).pow(n));
            }
            if (n > 64)
                throw ParseError("exponent too large", caret, {"exponent <= 64"});
            return make_node({ExprNode::Kind::PowInt, Scalar(), n, base, nullptr});
        }
        return base;
    }

    // Exponent grammar: unary minus then a power-atom (so z^-2 and
    // z^(1/2) both parse before the entirety check).
    ExprPtr parse_unary_power() {
        if (eat('-')) {
            ExprPtr x = parse_unary_power();
            return make_node({ExprNode::Kind::Neg, Scalar(), 0, x, nullptr});
        }
        return parse_power();
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (i_ >= s_.size())
            throw ParseError("unexpected end of input", i_,
                             {"literal", "z", "i", "exp", "("});
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            ExprPtr e = parse_sum();
            if (!eat(')'))
                throw ParseError("missing ')'", i_, {")"});
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = i_;
            std::string word;
            while (i_ < s_.size() &&
                   std::isalpha(static_cast<unsigned char>(s_[i_])))
                word += s_[i_++];
            if (word == "z")
                return make_node({ExprNode::Kind::Var, Scalar(), 0, nullptr, nullptr});
            if (word == "i") return literal(Scalar::imaginary_unit());
            if (word == "exp") {
                if (!eat('('))
                    throw ParseError("expected '(' after exp", i_, {"("});
                ExprPtr arg = parse_sum();
                if (!eat(')'))
                    throw ParseError("missing ')' after exp argument", i_, {")"});
                return make_node({ExprNode::Kind::Exp, Scalar(), 0, arg, nullptr});
            }
            throw ParseError("unknown identifier '" + word + "'", start,
                             {"z", "i", "exp"});
        }
        throw ParseError(std::string("unexpected character '") + c + "'", i_,
                         {"literal", "z", "i", "exp", "(", "-"});
    }

    ExprPtr parse_number() {
        size_t start = i_;
        std::string digits;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            digits += s_[i_++];
        std::string frac;
        if (i_ < s_.size() && s_[i_] == '.') {
            ++i_;
            while (i_ < s_.size() &&
                   std::isdigit(static_cast<unsigned char>(s_[i_])))
                frac += s_[i_++];
        }
        if (digits.empty() && frac.empty())
            throw ParseError("malformed number", start, {"digits"});
        Int whole(digits.empty() ? "0" : digits, 10);
        Rat r(whole);
        if (!frac.empty()) {
            Int frac_i(frac, 10);
            Rat f(frac_i);
            for (size_t k = 0; k < frac.size(); ++k) f /= 10;
            r += f;
        }
        r.canonicalize();
        return literal(Scalar::exact(r));
    }

    const std::string& s_;
    size_t i_ = 0;
};

int precedence_of(ExprNode::Kind k) {
    switch (k) {
        case ExprNode::Kind::Add:
        case ExprNode::Kind::Sub: return 1;
        case ExprNode::Kind::Mul:
        case ExprNode::Kind::DivConst: return 2;
        case ExprNode::Kind::Neg: return 3;
        case ExprNode::Kind::PowInt: return 4;
        default: return 5;
    }
}

std::string scalar_literal_text(const Scalar& v) {
    if (!v.is_exact()) return v.to_string();
    const auto& g = v.exact_value();
    auto rat = [](const Rat& r) {
        std::string s = r.get_num().get_str();
        if (r.get_den() != 1) s += "/" + r.get_den().get_str();
        return s;
    };
    if (g.im == 0) return rat(g.re);
    if (g.re == 0) {
        if (g.im == 1) return "i";
        if (g.im == -1) return "-i";
        return rat(g.im) + "*i";
    }
    std::string s = rat(g.re);
    if (g.im > 0)
        s += "+" + (g.im == 1 ? std::string("i") : rat(g.im) + "*i");
    else
        s += "-" + (g.im == -1 ? std::string("i") : rat(-g.im) + "*i");
    return "(" + s + ")";
}

std::string print_node(const ExprPtr& n, int parent_prec) {
    int prec = precedence_of(n->kind);
    std::string s;
    switch (n->kind) {
        case ExprNode::Kind::Literal: {
            s = scalar_literal_text(n->value);
            // negative or fractional literals need parens under operators
            if (parent_prec > 1 && (s.find('-') == 0 || s.find('/') != std::string::npos))
                return "(" + s + ")";
            return s;
        }
        case ExprNode::Kind::Var: return "z";
        case ExprNode::Kind::Add:
            s = print_node(n->lhs, prec) + "+" + print_node(n->rhs, prec + 1);
            break;
        case ExprNode::Kind::Sub:
            s = print_node(n->lhs, prec) + "-" + print_node(n->rhs, prec + 1);
            break;
        case ExprNode::Kind::Mul:
            s = print_node(n->lhs, prec) + "*" + print_node(n->rhs, prec + 1);
            break;
        case ExprNode::Kind::DivConst: {
            std::string d = scalar_literal_text(n->value);
            bool plain = d.find_first_not_of("0123456789") == std::string::npos;
            if (!plain && d.front() != '(') d = "(" + d + ")";
            s = print_node(n->lhs, prec) + "/" + d;
            break;
        }
        case ExprNode::Kind::Neg:
            s = "-" + print_node(n->lhs, prec + 1);
            break;
        case ExprNode::Kind::PowInt:
            s = print_node(n->lhs, prec + 1) + "^" + std::to_string(n->exponent);
            break;
        case ExprNode::Kind::Exp:
            return "exp(" + print_node(n->lhs, 0) + ")";
    }
    if (prec < parent_prec) s = "(" + s + ")";
    return s;
}

}  // namespace

ExprFunction parse_expr(const std::string& source) {
    return Parser(source).run();
}

std::string expr_to_string(const ExprPtr& node) { return print_node(node, 0); }

}  // namespace sharelab
