#include "brauercat/expr.hpp"

#include <cctype>
#include <sstream>

#include "brauercat/errors.hpp"

namespace brauercat {

namespace {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::I: return "I";
        case Gen::U: return "U";
        case Gen::A: return "A";
        case Gen::X: return "X";
    }
    return "?";
}

}  // namespace

std::string expr_to_string(const Expr& e) {
    std::ostringstream os;
    switch (e.kind) {
        case Expr::Kind::Generator: os << gen_name(e.gen); break;
        case Expr::Kind::Vertex: os << "D"; break;
        case Expr::Kind::Sigma: os << "S{" << e.number << "}"; break;
        case Expr::Kind::Perm: {
            os << "P{";
            for (std::size_t i = 0; i < e.perm.size(); ++i)
                os << (i ? "," : "") << e.perm[i];
            os << "}";
            break;
        }
        case Expr::Kind::Compose:
            os << "(" << expr_to_string(*e.a) << "." << expr_to_string(*e.b) << ")";
            break;
        case Expr::Kind::Tensor:
            os << "(" << expr_to_string(*e.a) << "*" << expr_to_string(*e.b) << ")";
            break;
        case Expr::Kind::Dual: os << expr_to_string(*e.a) << "'"; break;
        case Expr::Kind::Power:
            os << expr_to_string(*e.a) << "^{" << e.number << "}";
            break;
    }
    return os.str();
}

void arity_check(Expr& e, int m) {
    switch (e.kind) {
        case Expr::Kind::Generator:
            switch (e.gen) {
                case Gen::I: e.source = 1; e.target = 1; break;
                case Gen::U: e.source = 0; e.target = 2; break;
                case Gen::A: e.source = 2; e.target = 0; break;
                case Gen::X: e.source = 2; e.target = 2; break;
            }
            break;
        case Expr::Kind::Vertex:
            e.source = 0;
            e.target = m;
            break;
        case Expr::Kind::Sigma:
            e.source = e.target = e.number;
            break;
        case Expr::Kind::Perm:
            e.source = e.target = static_cast<int>(e.perm.size());
            break;
        case Expr::Kind::Compose:
            arity_check(*e.a, m);
            arity_check(*e.b, m);
            // a . b applies b first
            if (e.b->target != e.a->source)
                throw ArityError("composition mismatch: '" + expr_to_string(*e.a) + "' (" +
                                 std::to_string(e.a->source) + "->" +
                                 std::to_string(e.a->target) + ") after '" +
                                 expr_to_string(*e.b) + "' (" + std::to_string(e.b->source) +
                                 "->" + std::to_string(e.b->target) + ")");
            e.source = e.b->source;
            e.target = e.a->target;
            break;
        case Expr::Kind::Tensor:
            arity_check(*e.a, m);
            arity_check(*e.b, m);
            e.source = e.a->source + e.b->source;
            e.target = e.a->target + e.b->target;
            break;
        case Expr::Kind::Dual:
            arity_check(*e.a, m);
            e.source = e.a->target;
            e.target = e.a->source;
            break;
        case Expr::Kind::Power:
            arity_check(*e.a, m);
            e.source = e.a->source * e.number;
            e.target = e.a->target * e.number;
            break;
    }
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    int parse_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected an integer", pos);
        return std::stoi(text.substr(start, pos - start));
    }

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_tensored();
        for (;;) {
            if (eat("\xe2\x88\x98") || eat(".")) {  // composition circle
                ExprPtr rhs = parse_tensored();
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::Compose;
                node->a = std::move(lhs);
                node->b = std::move(rhs);
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_tensored() {
        ExprPtr lhs = parse_postfixed();
        for (;;) {
            if (eat("\xe2\x8a\x97") || eat("*")) {  // tensor sign
                ExprPtr rhs = parse_postfixed();
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::Tensor;
                node->a = std::move(lhs);
                node->b = std::move(rhs);
                lhs = std::move(node);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr parse_postfixed() {
        ExprPtr e = parse_atom();
        for (;;) {
            if (eat("^")) {
                const bool braced = eat("{");
                const int k = parse_int();
                if (braced && !eat("}")) throw ParseError("expected '}'", pos);
                if (k < 0) throw ParseError("negative tensor power", pos);
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::Power;
                node->number = k;
                node->a = std::move(e);
                e = std::move(node);
            } else if (eat("'")) {
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::Dual;
                node->a = std::move(e);
                e = std::move(node);
            } else {
                return e;
            }
        }
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
        if (eat("(")) {
            ExprPtr e = parse_expr();
            if (!eat(")")) throw ParseError("expected ')'", pos);
            return e;
        }
        auto node = std::make_unique<Expr>();
        const char c = text[pos];
        switch (c) {
            case 'I': node->gen = Gen::I; break;
            case 'U': node->gen = Gen::U; break;
            case 'A': node->gen = Gen::A; break;
            case 'X': node->gen = Gen::X; break;
            case 'D':
                ++pos;
                node->kind = Expr::Kind::Vertex;
                return node;
            case 'S': {
                ++pos;
                if (!eat("{")) throw ParseError("expected '{' after S", pos);
                node->kind = Expr::Kind::Sigma;
                node->number = parse_int();
                if (!eat("}")) throw ParseError("expected '}'", pos);
                return node;
            }
            case 'P': {
                ++pos;
                if (!eat("{")) throw ParseError("expected '{' after P", pos);
                node->kind = Expr::Kind::Perm;
                node->perm.push_back(parse_int());
                while (eat(",")) node->perm.push_back(parse_int());
                if (!eat("}")) throw ParseError("expected '}'", pos);
                // single undelimited block of digits also accepted: P{102}
                if (node->perm.size() == 1 && node->perm[0] >= 10) {
                    std::string digits = std::to_string(node->perm[0]);
                    node->perm.clear();
                    for (char d : digits) node->perm.push_back(d - '0');
                }
                return node;
            }
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        ++pos;
        node->kind = Expr::Kind::Generator;
        return node;
    }
};

}  // namespace

ExprPtr parse_expression(const std::string& text, int m) {
    Parser p(text);
    ExprPtr e = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    arity_check(*e, m);
    return e;
}

namespace {

EnhancedMorphism eval_rec(const Expr& e, int m, EvalStrategy st) {
    switch (e.kind) {
        case Expr::Kind::Generator: return from_brauer(generator(e.gen), m);
        case Expr::Kind::Vertex: return delta_generator(m);
        case Expr::Kind::Sigma: return from_brauer(antisymmetrizer(e.number), m);
        case Expr::Kind::Perm: return from_brauer(permutation_morphism(e.perm), m);
        case Expr::Kind::Dual: return dual(eval_rec(*e.a, m, st));
        case Expr::Kind::Power: {
            EnhancedMorphism unit(m, 0, 0);
            unit.add_term(EnhancedDiagram{0, 0, {}, {}}, Rational(1));
            if (e.number == 0) return unit;
            EnhancedMorphism base = eval_rec(*e.a, m, st);
            EnhancedMorphism acc = base;
            for (int i = 1; i < e.number; ++i)
                acc = st == EvalStrategy::LeftInnermost ? tensor(acc, base)
                                                        : tensor(base, acc);
            return acc;
        }
        case Expr::Kind::Compose:
        case Expr::Kind::Tensor: {
            // flatten the same-kind chain, then fold per strategy
            std::vector<const Expr*> chain;
            auto flatten = [&](auto&& self, const Expr& node) -> void {
                if (node.kind == e.kind) {
                    self(self, *node.a);
                    self(self, *node.b);
                } else {
                    chain.push_back(&node);
                }
            };
            flatten(flatten, e);
            auto combine = [&](EnhancedMorphism x, const EnhancedMorphism& y) {
                // for Compose, chain order is "a then b" with b applied first
                return e.kind == Expr::Kind::Compose ? compose(y, x) : tensor(x, y);
            };
            if (st == EvalStrategy::LeftInnermost) {
                EnhancedMorphism acc = eval_rec(*chain.front(), m, st);
                for (std::size_t i = 1; i < chain.size(); ++i)
                    acc = combine(std::move(acc), eval_rec(*chain[i], m, st));
                return acc;
            }
            EnhancedMorphism acc = eval_rec(*chain.back(), m, st);
            for (std::size_t i = chain.size() - 1; i-- > 0;) {
                EnhancedMorphism lhs = eval_rec(*chain[i], m, st);
                acc = combine(std::move(lhs), acc);
            }
            return acc;
        }
    }
    throw Error("unknown expression node");
}

}  // namespace

EnhancedMorphism evaluate(const Expr& e, int m, EvalStrategy strategy) {
    return eval_rec(e, m, strategy);
}

}  // namespace brauercat
