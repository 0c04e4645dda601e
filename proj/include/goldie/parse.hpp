#pragma once

/*
 * Expression parsing: group words over a group's generators, ring-element
 * expressions over a ring instance, and matrix literals.
 *
 * Grammar:
 *   word     := term { term }            (whitespace separates terms)
 *   term     := IDENT [ '^' INT ]
 *   ringexpr := [ '-' ] product { ('+'|'-') product }
 *   product  := atom { '*' atom }
 *   atom     := RATIONAL | IDENT [ '^' INT ] | '(' ringexpr ')' | matrix
 *   matrix   := '[' row { ',' row } ']'
 *   row      := '[' ringexpr { ',' ringexpr } ']'
 *
 * Negative exponents are accepted wherever the underlying value supports
 * them: on group generators, and on the entry variable t when the matrix
 * base ring is Laurent.  Positions in errors are 1-based.
 */

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <goldie/analysis.hpp>

namespace goldie {

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct UnknownSymbol : std::runtime_error {
    std::size_t position;
    UnknownSymbol(const std::string& name, std::size_t pos)
        : std::runtime_error("unknown symbol '" + name + "' (at position " +
                             std::to_string(pos) + ")"),
          position(pos) {}
};

namespace detail {

enum class TokKind { Ident, Number, Caret, Plus, Minus, Star, Slash, LParen, RParen,
                     LBracket, RBracket, Comma, End };

struct Token {
    TokKind kind;
    std::string text;
    std::size_t pos;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({TokKind::Ident, s.substr(i, j - i), pos});
            i = j;
            continue;
        }
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({TokKind::Number, s.substr(i, j - i), pos});
            i = j;
            continue;
        }
        TokKind k;
        switch (c) {
            case '^': k = TokKind::Caret; break;
            case '+': k = TokKind::Plus; break;
            case '-': k = TokKind::Minus; break;
            case '*': k = TokKind::Star; break;
            case '/': k = TokKind::Slash; break;
            case '(': k = TokKind::LParen; break;
            case ')': k = TokKind::RParen; break;
            case '[': k = TokKind::LBracket; break;
            case ']': k = TokKind::RBracket; break;
            case ',': k = TokKind::Comma; break;
            default:
                throw SyntaxError(std::string("unexpected character '") + s[i] + "'", pos);
        }
        out.push_back({k, s.substr(i, 1), pos});
        ++i;
    }
    out.push_back({TokKind::End, "", s.size() + 1});
    return out;
}

struct Node {
    enum class Kind { Number, Symbol, Pow, Neg, Add, Sub, Mul, Matrix };
    Kind kind;
    std::size_t pos = 0;
    mpq_class number;
    std::string name;
    std::unique_ptr<Node> a, b;
    long exponent = 0;
    std::vector<std::vector<std::unique_ptr<Node>>> rows;
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
  public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

    NodePtr ring_expression() {
        NodePtr e = expr_();
        expect_(TokKind::End, "unexpected trailing input");
        return e;
    }

    NodePtr matrix_literal() {
        if (peek_().kind != TokKind::LBracket)
            throw SyntaxError("expected a matrix literal", peek_().pos);
        NodePtr m = atom_();
        expect_(TokKind::End, "unexpected trailing input");
        return m;
    }

    /** term { term }, evaluated against the name table as a left-to-right product. */
    GroupElement group_word(const Group& G, const std::map<std::string, GroupElement>& names) {
        GroupElement acc = identity(G);
        if (peek_().kind == TokKind::End)
            throw SyntaxError("empty group word", peek_().pos);
        while (peek_().kind != TokKind::End) {
            const Token t = expect_(TokKind::Ident, "expected a generator name");
            const auto it = names.find(t.text);
            if (it == names.end()) throw UnknownSymbol(t.text, t.pos);
            acc = multiply(G, acc, power(G, it->second, exponent_or_one_()));
        }
        return acc;
    }

  private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;

    const Token& peek_() const { return toks_[at_]; }
    Token take_() { return toks_[at_++]; }
    Token expect_(TokKind k, const std::string& msg) {
        if (peek_().kind != k) throw SyntaxError(msg, peek_().pos);
        return take_();
    }

    long exponent_or_one_() {
        if (peek_().kind != TokKind::Caret) return 1;
        take_();
        long sign = 1;
        if (peek_().kind == TokKind::Minus) {
            take_();
            sign = -1;
        }
        const Token n = expect_(TokKind::Number, "expected an integer exponent");
        try {
            return sign * std::stol(n.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError("exponent out of range", n.pos);
        }
    }

    NodePtr expr_() {
        NodePtr lhs;
        if (peek_().kind == TokKind::Minus) {
            const Token m = take_();
            lhs = std::make_unique<Node>();
            lhs->kind = Node::Kind::Neg;
            lhs->pos = m.pos;
            lhs->a = product_();
        } else {
            lhs = product_();
        }
        while (peek_().kind == TokKind::Plus || peek_().kind == TokKind::Minus) {
            const Token op = take_();
            NodePtr n = std::make_unique<Node>();
            n->kind = op.kind == TokKind::Plus ? Node::Kind::Add : Node::Kind::Sub;
            n->pos = op.pos;
            n->a = std::move(lhs);
            n->b = product_();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr product_() {
        NodePtr lhs = atom_();
        while (peek_().kind == TokKind::Star) {
            const Token op = take_();
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Mul;
            n->pos = op.pos;
            n->a = std::move(lhs);
            n->b = atom_();
            lhs = std::move(n);
        }
        return lhs;
    }

    NodePtr atom_() {
        const Token t = peek_();
        if (t.kind == TokKind::Number) {
            take_();
            NodePtr n = std::make_unique<Node>();
            n->kind = Node::Kind::Number;
            n->pos = t.pos;
            std::string digits = t.text;
            if (peek_().kind == TokKind::Slash) {
                take_();
                const Token den = expect_(TokKind::Number, "expected a denominator");
                if (den.text.find_first_not_of('0') == std::string::npos)
                    throw SyntaxError("zero denominator", den.pos);
                digits += "/" + den.text;
            }
            n->number = mpq_class(digits);
            n->number.canonicalize();
            return n;
        }
        if (t.kind == TokKind::Ident) {
            take_();
            NodePtr sym = std::make_unique<Node>();
            sym->kind = Node::Kind::Symbol;
            sym->pos = t.pos;
            sym->name = t.text;
            if (peek_().kind == TokKind::Caret) {
                NodePtr n = std::make_unique<Node>();
                n->kind = Node::Kind::Pow;
                n->pos = peek_().pos;
                n->exponent = exponent_or_one_();
                n->a = std::move(sym);
                return n;
            }
            return sym;
        }
        if (t.kind == TokKind::LParen) {
            take_();
            NodePtr inner = expr_();
            expect_(TokKind::RParen, "expected ')'");
            return inner;
        }
        if (t.kind == TokKind::LBracket) {
            take_();
            NodePtr m = std::make_unique<Node>();
            m->kind = Node::Kind::Matrix;
            m->pos = t.pos;
            m->rows.push_back(row_());
            while (peek_().kind == TokKind::Comma) {
                take_();
                m->rows.push_back(row_());
            }
            expect_(TokKind::RBracket, "expected ']'");
            return m;
        }
        throw SyntaxError("expected a number, symbol, '(' or '['", t.pos);
    }

    std::vector<NodePtr> row_() {
        expect_(TokKind::LBracket, "expected '[' to open a row");
        std::vector<NodePtr> entries;
        entries.push_back(expr_());
        while (peek_().kind == TokKind::Comma) {
            take_();
            entries.push_back(expr_());
        }
        expect_(TokKind::RBracket, "expected ']' to close a row");
        return entries;
    }
};

inline LaurentPoly lp_power(const LaurentPoly& base, long n, std::size_t pos) {
    if (n >= 0) {
        LaurentPoly acc = LaurentPoly::constant(FieldValue::one(base.field()));
        for (long i = 0; i < n; ++i) acc = acc * base;
        return acc;
    }
    LaurentPoly inv(base.field());
    try {
        inv = laurent_unit_invert(base);
    } catch (const NotAUnit&) {
        throw SyntaxError("negative power of a non-invertible entry", pos);
    }
    return lp_power(inv, -n, pos);
}

/** Evaluates an expression tree as a matrix entry: a Laurent polynomial in t. */
inline LaurentPoly eval_entry(const Node* n, const FieldSpec& f) {
    switch (n->kind) {
        case Node::Kind::Number:
            return LaurentPoly::constant(FieldValue(f, n->number));
        case Node::Kind::Symbol:
            if (n->name == "t") return LaurentPoly::monomial(FieldValue::one(f), 1);
            throw UnknownSymbol(n->name, n->pos);
        case Node::Kind::Pow:
            return lp_power(eval_entry(n->a.get(), f), n->exponent, n->pos);
        case Node::Kind::Neg:
            return LaurentPoly(f) - eval_entry(n->a.get(), f);
        case Node::Kind::Add:
            return eval_entry(n->a.get(), f) + eval_entry(n->b.get(), f);
        case Node::Kind::Sub:
            return eval_entry(n->a.get(), f) - eval_entry(n->b.get(), f);
        case Node::Kind::Mul:
            return eval_entry(n->a.get(), f) * eval_entry(n->b.get(), f);
        case Node::Kind::Matrix:
            throw SyntaxError("matrix literal cannot appear inside a matrix entry", n->pos);
    }
    throw SyntaxError("malformed expression", n->pos);
}

/** Symbols available in ring expressions, by instance kind. */
inline std::map<std::string, GradedElement> ring_symbols(const RingInstance& R) {
    std::map<std::string, GradedElement> syms;
    const FieldValue one = FieldValue::one(R.field());
    switch (R.kind()) {
        case RingKind::Nastasescu:
            syms.emplace("x", int_term(R, 1, one));
            syms.emplace("y", int_term(R, -1, one));
            break;
        case RingKind::GradedPolyD:
            syms.emplace("t", int_term(R, 1, one));
            break;
        case RingKind::DirectSumLaurent:
            syms.emplace("x", direct_sum_pair(R, LaurentPoly::monomial(one, 1),
                                              LaurentPoly(R.field())));
            syms.emplace("y", direct_sum_pair(R, LaurentPoly(R.field()),
                                              LaurentPoly::monomial(one, 1)));
            break;
        case RingKind::GroupAlgebra:
            syms.emplace("e", ring_one(R));
            for (const auto& [name, g] : generators(R.group()))
                syms.emplace(name, group_term(R, g, one));
            break;
        case RingKind::Bazhenov: {
            const LaurentPoly t = LaurentPoly::monomial(one, 1);
            const LaurentPoly z(R.field());
            const LaurentPoly c = LaurentPoly::constant(one);
            syms.emplace("x", make_matrix(R, {{t, z}, {z, z}}));
            syms.emplace("y", make_matrix(R, {{z, z}, {z, t}}));
            syms.emplace("z", make_matrix(R, {{z, c}, {c, z}}));
            break;
        }
        default:
            break;  // matrix instances build elements from matrix literals
    }
    return syms;
}

inline GradedElement eval_ring(const Node* n, const RingInstance& R,
                               const std::map<std::string, GradedElement>& syms) {
    switch (n->kind) {
        case Node::Kind::Number:
            return scalar_mul(R, FieldValue(R.field(), n->number), ring_one(R));
        case Node::Kind::Symbol: {
            const auto it = syms.find(n->name);
            if (it == syms.end()) throw UnknownSymbol(n->name, n->pos);
            return it->second;
        }
        case Node::Kind::Pow: {
            if (n->exponent < 0)
                throw SyntaxError(
                    "negative exponents are only supported inside matrix entries and group words",
                    n->pos);
            return ring_pow(R, eval_ring(n->a.get(), R, syms),
                            static_cast<unsigned long>(n->exponent));
        }
        case Node::Kind::Neg:
            return ring_neg(R, eval_ring(n->a.get(), R, syms));
        case Node::Kind::Add:
            return ring_add(R, eval_ring(n->a.get(), R, syms), eval_ring(n->b.get(), R, syms));
        case Node::Kind::Sub:
            return ring_sub(R, eval_ring(n->a.get(), R, syms), eval_ring(n->b.get(), R, syms));
        case Node::Kind::Mul:
            return ring_mul(R, eval_ring(n->a.get(), R, syms), eval_ring(n->b.get(), R, syms));
        case Node::Kind::Matrix: {
            if (!R.is_matrix())
                throw SyntaxError("this ring has no matrix literals", n->pos);
            std::vector<std::vector<LaurentPoly>> rows;
            for (const auto& r : n->rows) {
                std::vector<LaurentPoly> row;
                for (const auto& e : r) row.push_back(eval_entry(e.get(), R.field()));
                rows.push_back(std::move(row));
            }
            if (rows.size() != R.dim())
                throw SyntaxError("matrix literal has the wrong number of rows", n->pos);
            for (const auto& r : rows)
                if (r.size() != R.dim())
                    throw SyntaxError("matrix literal has a row of the wrong length", n->pos);
            return make_matrix(R, std::move(rows));
        }
    }
    throw SyntaxError("malformed expression", n->pos);
}

} // namespace detail

/** Parses a word in the group's generators; "e" names the identity. */
inline GroupElement parse_group_word(const Group& G, const std::string& text) {
    std::map<std::string, GroupElement> names;
    names.emplace("e", identity(G));
    for (const auto& [name, g] : generators(G)) names.emplace(name, g);
    detail::Parser p(text);
    return p.group_word(G, names);
}

/** Parses a ring-element expression over the given instance. */
inline GradedElement parse_ring_element(const RingInstance& R, const std::string& text) {
    detail::Parser p(text);
    const detail::NodePtr ast = p.ring_expression();
    return detail::eval_ring(ast.get(), R, detail::ring_symbols(R));
}

/** Parses a bare matrix literal over a matrix instance. */
inline GradedElement parse_matrix_literal(const RingInstance& R, const std::string& text) {
    detail::Parser p(text);
    const detail::NodePtr ast = p.matrix_literal();
    return detail::eval_ring(ast.get(), R, detail::ring_symbols(R));
}

} // namespace goldie
