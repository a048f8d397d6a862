#include "qsu2/parser.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace qsu2 {

namespace {

struct Lexer {
    enum class Tok { End, Num, Mu, ImagUnit, GenA, GenAs, GenG, GenGs, LPar, RPar,
                     Plus, Minus, Star, Caret, Slash, Bar };

    const std::string& s;
    size_t pos = 0;
    Tok tok = Tok::End;
    Rat value;
    size_t tok_pos = 0;

    explicit Lexer(const std::string& in) : s(in) { next(); }

    void next() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
        tok_pos = pos;
        if (pos >= s.size()) {
            tok = Tok::End;
            return;
        }
        char c = s[pos];
        if (std::isdigit((unsigned char)c)) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
            value = rat_from_string(s.substr(start, pos - start));
            tok = Tok::Num;
            return;
        }
        // multi-byte aliases for alpha and gamma
        auto starts = [&](const char* p) {
            size_t n = strlen(p);
            return s.compare(pos, n, p) == 0;
        };
        if (starts("mu")) {
            pos += 2;
            tok = Tok::Mu;
            return;
        }
        if (starts("α") || starts("γ")) {  // UTF-8 alpha / gamma
            bool alpha = starts("α");
            pos += 2;
            bool st = pos < s.size() && s[pos] == '*';
            if (st) ++pos;
            tok = alpha ? (st ? Tok::GenAs : Tok::GenA) : (st ? Tok::GenGs : Tok::GenG);
            return;
        }
        switch (c) {
            case 'i': ++pos; tok = Tok::ImagUnit; return;
            case 'a':
            case 'g': {
                ++pos;
                bool st = pos < s.size() && s[pos] == '*';
                if (st) ++pos;
                tok = (c == 'a') ? (st ? Tok::GenAs : Tok::GenA)
                                 : (st ? Tok::GenGs : Tok::GenG);
                return;
            }
            case '(': ++pos; tok = Tok::LPar; return;
            case ')': ++pos; tok = Tok::RPar; return;
            case '+': ++pos; tok = Tok::Plus; return;
            case '-': ++pos; tok = Tok::Minus; return;
            case '*': ++pos; tok = Tok::Star; return;
            case '^': ++pos; tok = Tok::Caret; return;
            case '/': ++pos; tok = Tok::Slash; return;
            case '|': ++pos; tok = Tok::Bar; return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

struct Parser {
    Lexer lex;
    explicit Parser(const std::string& in) : lex(in) {}

    AstPtr make(AstNode::Kind k) {
        auto n = std::make_unique<AstNode>();
        n->kind = k;
        return n;
    }

    AstPtr parse_tensor() {
        auto first = parse_expr();
        if (lex.tok != Lexer::Tok::Bar) return first;
        auto t = make(AstNode::Kind::Tensor);
        t->kids.push_back(std::move(first));
        while (lex.tok == Lexer::Tok::Bar) {
            lex.next();
            t->kids.push_back(parse_expr());
        }
        return t;
    }

    AstPtr parse_expr() {
        bool neg = false;
        if (lex.tok == Lexer::Tok::Minus) {
            neg = true;
            lex.next();
        } else if (lex.tok == Lexer::Tok::Plus) {
            lex.next();
        }
        auto first = parse_term();
        if (neg) {
            auto n = make(AstNode::Kind::Neg);
            n->kids.push_back(std::move(first));
            first = std::move(n);
        }
        if (lex.tok != Lexer::Tok::Plus && lex.tok != Lexer::Tok::Minus) return first;
        auto sum = make(AstNode::Kind::Add);
        sum->kids.push_back(std::move(first));
        while (lex.tok == Lexer::Tok::Plus || lex.tok == Lexer::Tok::Minus) {
            bool minus = lex.tok == Lexer::Tok::Minus;
            lex.next();
            auto t = parse_term();
            if (minus) {
                auto n = make(AstNode::Kind::Neg);
                n->kids.push_back(std::move(t));
                t = std::move(n);
            }
            sum->kids.push_back(std::move(t));
        }
        return sum;
    }

    bool factor_start() const {
        switch (lex.tok) {
            case Lexer::Tok::Num:
            case Lexer::Tok::Mu:
            case Lexer::Tok::ImagUnit:
            case Lexer::Tok::GenA:
            case Lexer::Tok::GenAs:
            case Lexer::Tok::GenG:
            case Lexer::Tok::GenGs:
            case Lexer::Tok::LPar: return true;
            default: return false;
        }
    }

    AstPtr parse_term() {
        auto first = parse_factor();
        if (!factor_start()) return first;
        auto prod = make(AstNode::Kind::Mul);
        prod->kids.push_back(std::move(first));
        while (factor_start()) prod->kids.push_back(parse_factor());
        return prod;
    }

    AstPtr parse_factor() {
        AstPtr node = parse_atom();
        for (;;) {
            if (lex.tok == Lexer::Tok::Star) {
                lex.next();
                auto n = make(AstNode::Kind::Star);
                n->kids.push_back(std::move(node));
                node = std::move(n);
            } else if (lex.tok == Lexer::Tok::Caret) {
                lex.next();
                bool neg = false;
                if (lex.tok == Lexer::Tok::Minus) {
                    neg = true;
                    lex.next();
                }
                if (lex.tok != Lexer::Tok::Num)
                    throw ParseError("exponent must be an integer", lex.tok_pos);
                if (lex.value.get_den() != 1)
                    throw ParseError("exponent must be an integer", lex.tok_pos);
                long e = (long)lex.value.get_num().get_si();
                lex.next();
                auto n = make(AstNode::Kind::Pow);
                n->expo = neg ? -e : e;
                n->kids.push_back(std::move(node));
                node = std::move(n);
            } else if (lex.tok == Lexer::Tok::Slash) {
                lex.next();
                auto d = parse_atom();
                // allow suffixes on the divisor
                while (lex.tok == Lexer::Tok::Caret || lex.tok == Lexer::Tok::Star) {
                    if (lex.tok == Lexer::Tok::Star) {
                        lex.next();
                        auto n = make(AstNode::Kind::Star);
                        n->kids.push_back(std::move(d));
                        d = std::move(n);
                    } else {
                        lex.next();
                        bool neg = false;
                        if (lex.tok == Lexer::Tok::Minus) {
                            neg = true;
                            lex.next();
                        }
                        if (lex.tok != Lexer::Tok::Num || lex.value.get_den() != 1)
                            throw ParseError("exponent must be an integer", lex.tok_pos);
                        long e = (long)lex.value.get_num().get_si();
                        lex.next();
                        auto n = make(AstNode::Kind::Pow);
                        n->expo = neg ? -e : e;
                        n->kids.push_back(std::move(d));
                        d = std::move(n);
                    }
                }
                auto n = make(AstNode::Kind::Div);
                n->kids.push_back(std::move(node));
                n->kids.push_back(std::move(d));
                node = std::move(n);
            } else {
                return node;
            }
        }
    }

    AstPtr parse_atom() {
        switch (lex.tok) {
            case Lexer::Tok::Num: {
                auto n = make(AstNode::Kind::Num);
                n->num = lex.value;
                lex.next();
                return n;
            }
            case Lexer::Tok::Mu: lex.next(); return make(AstNode::Kind::Mu);
            case Lexer::Tok::ImagUnit: lex.next(); return make(AstNode::Kind::ImagUnit);
            case Lexer::Tok::GenA:
            case Lexer::Tok::GenAs:
            case Lexer::Tok::GenG:
            case Lexer::Tok::GenGs: {
                auto n = make(AstNode::Kind::Gen);
                n->gen = lex.tok == Lexer::Tok::GenA    ? Gen::A
                         : lex.tok == Lexer::Tok::GenAs ? Gen::As
                         : lex.tok == Lexer::Tok::GenG  ? Gen::G
                                                        : Gen::Gs;
                lex.next();
                return n;
            }
            case Lexer::Tok::LPar: {
                lex.next();
                auto e = parse_expr();
                if (lex.tok != Lexer::Tok::RPar)
                    throw ParseError("expected ')'", lex.tok_pos);
                lex.next();
                return e;
            }
            case Lexer::Tok::Minus: {
                lex.next();
                auto n = make(AstNode::Kind::Neg);
                n->kids.push_back(parse_atom());
                return n;
            }
            default: throw ParseError("expected a factor", lex.tok_pos);
        }
    }
};

}  // namespace

AstPtr parse(const std::string& input) {
    Parser p(input);
    auto node = p.parse_tensor();
    if (p.lex.tok != Lexer::Tok::End) throw ParseError("trailing input", p.lex.tok_pos);
    return node;
}

std::string print_ast(const AstNode& n) {
    switch (n.kind) {
        case AstNode::Kind::Num: return n.num.get_str();
        case AstNode::Kind::Mu: return "mu";
        case AstNode::Kind::ImagUnit: return "i";
        case AstNode::Kind::Gen:
            switch (n.gen) {
                case Gen::A: return "a";
                case Gen::As: return "a*";
                case Gen::G: return "g";
                case Gen::Gs: return "g*";
            }
            return "?";
        case AstNode::Kind::Neg: return "-(" + print_ast(*n.kids[0]) + ")";
        case AstNode::Kind::Star: return "(" + print_ast(*n.kids[0]) + ")*";
        case AstNode::Kind::Pow:
            return "(" + print_ast(*n.kids[0]) + ")^" + std::to_string(n.expo);
        case AstNode::Kind::Div:
            return "(" + print_ast(*n.kids[0]) + ")/(" + print_ast(*n.kids[1]) + ")";
        case AstNode::Kind::Mul: {
            std::string s;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) s += " ";
                s += "(" + print_ast(*n.kids[i]) + ")";
            }
            return s;
        }
        case AstNode::Kind::Add: {
            std::string s;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) s += " + ";
                s += "(" + print_ast(*n.kids[i]) + ")";
            }
            return s;
        }
        case AstNode::Kind::Tensor: {
            std::string s;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                if (i) s += " | ";
                s += print_ast(*n.kids[i]);
            }
            return s;
        }
    }
    return "?";
}

namespace {

AlgebraElement eval_one(const AstNode& n) {
    switch (n.kind) {
        case AstNode::Kind::Num: return AlgebraElement(ms_rat(n.num));
        case AstNode::Kind::Mu: return AlgebraElement(ms_mu());
        case AstNode::Kind::ImagUnit: return AlgebraElement(ms_i());
        case AstNode::Kind::Gen: return AlgebraElement::generator(n.gen);
        case AstNode::Kind::Neg: return -eval_one(*n.kids[0]);
        case AstNode::Kind::Star: return star(eval_one(*n.kids[0]));
        case AstNode::Kind::Pow: {
            AlgebraElement b = eval_one(*n.kids[0]);
            if (n.expo >= 0) return b.pow((int)n.expo);
            MuScalar s = b.scalar_value();
            return AlgebraElement(s.inv().pow(-n.expo));
        }
        case AstNode::Kind::Div: {
            AlgebraElement a = eval_one(*n.kids[0]);
            AlgebraElement b = eval_one(*n.kids[1]);
            MuScalar s = b.scalar_value();  // throws when the divisor is not scalar
            if (s.is_zero()) throw Error("division by zero");
            return a * s.inv();
        }
        case AstNode::Kind::Mul: {
            AlgebraElement r = AlgebraElement::one();
            for (auto& k : n.kids) r *= eval_one(*k);
            return r;
        }
        case AstNode::Kind::Add: {
            AlgebraElement r;
            for (auto& k : n.kids) r += eval_one(*k);
            return r;
        }
        default: throw Error("tensor expression where an element was expected");
    }
}

}  // namespace

Tensor eval_ast(const AstNode& n) {
    if (n.kind == AstNode::Kind::Tensor) {
        Tensor r = Tensor::from_element(eval_one(*n.kids[0]));
        for (size_t i = 1; i < n.kids.size(); ++i)
            r = Tensor::outer(r, Tensor::from_element(eval_one(*n.kids[i])));
        return r;
    }
    return Tensor::from_element(eval_one(n));
}

AlgebraElement eval_ast_element(const AstNode& n) {
    if (n.kind == AstNode::Kind::Tensor) throw Error("expected a single tensor slot");
    return eval_one(n);
}

}  // namespace qsu2
