#include "sea/template.hpp"

#include <algorithm>
#include <cctype>
#include <climits>

#include "sea/error.hpp"

namespace sea {

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(Scalar c) {
    if (!c.is_zero()) terms_.emplace(ParamMonomial{}, std::move(c));
}

ParamPoly ParamPoly::param(int index) {
    ParamPoly p;
    p.terms_.emplace(ParamMonomial{{index, 1}}, Scalar(1));
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar ParamPoly::constant() const {
    auto it = terms_.find(ParamMonomial{});
    return it == terms_.end() ? Scalar(0) : it->second;
}

std::set<int> ParamPoly::params() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_) {
        for (const auto& [p, e] : m) out.insert(p);
    }
    return out;
}

void ParamPoly::add_term(const ParamMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

namespace {

ParamMonomial monomial_product(const ParamMonomial& a, const ParamMonomial& b) {
    ParamMonomial out;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.push_back(*j++);
        } else {
            out.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

template <class T>
T power(const T& base, int e) {
    T out(Scalar(1));
    for (int k = 0; k < e; ++k) out = out * base;
    return out;
}

}  // namespace

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), ca * cb);
    }
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<int, ParamPoly>& values) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        ParamPoly term(c);
        ParamMonomial kept;
        for (const auto& [p, e] : m) {
            auto it = values.find(p);
            if (it == values.end()) {
                kept.emplace_back(p, e);
            } else {
                term = term * power(it->second, e);
            }
        }
        ParamPoly k;
        k.terms_.emplace(kept, Scalar(1));
        out += term * k;
    }
    return out;
}

Scalar ParamPoly::evaluate(const std::map<int, Scalar>& values) const {
    Scalar out = 0;
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (const auto& [p, e] : m) {
            auto it = values.find(p);
            if (it == values.end()) throw PreconditionError("no value for parameter a" + std::to_string(p));
            term *= it->second.pow(static_cast<unsigned>(e));
        }
        out += term;
    }
    return out;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (const auto& [p, e] : m) {
            if (!mono.empty()) mono += '*';
            mono += 'a' + std::to_string(p);
            if (e > 1) mono += '^' + std::to_string(e);
        }
        std::string coef = c.str();
        if (!c.is_rational() && sgn(c.rational_part()) != 0) coef = "(" + coef + ")";
        std::string piece;
        if (mono.empty()) {
            piece = coef;
        } else if (c.is_one()) {
            piece = mono;
        } else if (c == Scalar(-1)) {
            piece = "-" + mono;
        } else {
            piece = coef + "*" + mono;
        }
        if (!out.empty() && piece.front() != '-') out += '+';
        out += piece;
    }
    return out;
}

// ---------------------------------------------------------------- SymbolicPoly

SymbolicPoly SymbolicPoly::constant(const ParamPoly& c) {
    SymbolicPoly p;
    p.add(0, c);
    return p;
}

SymbolicPoly SymbolicPoly::x_power(int k) {
    SymbolicPoly p;
    p.add(k, ParamPoly(Scalar(1)));
    return p;
}

int SymbolicPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

ParamPoly SymbolicPoly::coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? ParamPoly() : it->second;
}

std::set<int> SymbolicPoly::params() const {
    std::set<int> out;
    for (const auto& [k, c] : coeffs_) out.merge(c.params());
    return out;
}

void SymbolicPoly::add(int k, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

SymbolicPoly& SymbolicPoly::operator+=(const SymbolicPoly& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) add(k, c);
    return *this;
}

SymbolicPoly& SymbolicPoly::operator-=(const SymbolicPoly& rhs) {
    for (const auto& [k, c] : rhs.coeffs_) add(k, ParamPoly() - c);
    return *this;
}

SymbolicPoly operator*(const SymbolicPoly& a, const SymbolicPoly& b) {
    SymbolicPoly out;
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) out.add(ka + kb, ca * cb);
    }
    return out;
}

SymbolicPoly SymbolicPoly::substitute(const std::map<int, ParamPoly>& values) const {
    SymbolicPoly out;
    for (const auto& [k, c] : coeffs_) out.add(k, c.substitute(values));
    return out;
}

UnivariatePoly SymbolicPoly::evaluate(const std::map<int, Scalar>& values) const {
    std::vector<Scalar> dense(static_cast<std::size_t>(degree() + 1));
    for (const auto& [k, c] : coeffs_) dense[static_cast<std::size_t>(k)] = c.evaluate(values);
    return UnivariatePoly(std::move(dense));
}

SymbolicPoly SymbolicPoly::renumbered(int offset) const {
    std::map<int, ParamPoly> shift;
    for (int p : params()) shift.emplace(p, ParamPoly::param(p + offset));
    return substitute(shift);
}

// ---------------------------------------------------------------- syntax tree

struct EquationTemplate::Node {
    enum class Kind { number, x, param, indexed_param, index, add, mul, pow, sum, prod };
    Kind kind;
    Scalar value;                      // number
    int param = 0;                     // param
    std::string var;                   // indexed_param, index, sum, prod
    long lo = 0, hi = 0;               // sum, prod
    std::vector<std::shared_ptr<const Node>> kids;
    std::vector<bool> negated;         // add: sign of each kid
};

namespace {

using Node = EquationTemplate::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Node::Kind;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char c : text) {
            if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
        }
    }

    NodePtr parse() {
        if (src_.empty()) fail("empty template");
        NodePtr n = expr();
        if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return n;
    }

private:
    std::string src_;
    std::size_t pos_ = 0;
    std::vector<std::string> bound_;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("template \"" + src_ + "\": " + msg + " at offset " + std::to_string(pos_));
    }

    bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
    bool peek(std::string_view s) const { return src_.compare(pos_, s.size(), s) == 0; }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    void expect(std::string_view s) {
        if (!peek(s)) fail("expected \"" + std::string(s) + "\"");
        pos_ += s.size();
    }

    long integer() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("integer literal too long");
        return std::stol(src_.substr(start, pos_ - start));
    }

    std::string ident() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::islower(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an identifier");
        return src_.substr(start, pos_ - start);
    }

    bool is_bound(const std::string& v) const { return std::find(bound_.begin(), bound_.end(), v) != bound_.end(); }

    NodePtr expr() {
        Node n{Kind::add};
        bool neg = accept('-');
        for (;;) {
            n.kids.push_back(term());
            n.negated.push_back(neg);
            if (accept('+')) {
                neg = false;
            } else if (accept('-')) {
                neg = true;
            } else {
                break;
            }
        }
        if (n.kids.size() == 1 && !n.negated.front()) return n.kids.front();
        return make(std::move(n));
    }

    NodePtr term() {
        Node n{Kind::mul};
        do {
            NodePtr f = factor();
            if (f->kind == Kind::mul) {
                n.kids.insert(n.kids.end(), f->kids.begin(), f->kids.end());
            } else {
                n.kids.push_back(std::move(f));
            }
        } while (accept('*'));
        if (n.kids.size() == 1) return n.kids.front();
        return make(std::move(n));
    }

    NodePtr factor() {
        NodePtr base = atom();
        if (!accept('^')) return base;
        NodePtr exp;
        if (accept('(')) {
            exp = expr();
            expect(')');
        } else if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            exp = make(Node{Kind::number, Scalar(integer())});
        } else {
            const std::string v = ident();
            if (!is_bound(v)) fail("unbound index \"" + v + "\" in exponent");
            Node idx{Kind::index};
            idx.var = v;
            exp = make(std::move(idx));
        }
        Node n{Kind::pow};
        n.kids = {std::move(base), std::move(exp)};
        return make(std::move(n));
    }

    NodePtr block(Kind kind) {
        expect('(');
        Node n{kind};
        n.var = ident();
        if (n.var == "x" || n.var == "a") fail("reserved block variable");
        if (is_bound(n.var)) fail("block variable \"" + n.var + "\" already bound");
        expect('=');
        n.lo = integer();
        expect("..");
        n.hi = integer();
        expect(',');
        bound_.push_back(n.var);
        n.kids.push_back(expr());
        bound_.pop_back();
        expect(')');
        return make(std::move(n));
    }

    NodePtr atom() {
        if (pos_ >= src_.size()) fail("unexpected end");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(integer());
            if (accept('/')) {
                const long den = integer();
                if (den == 0) fail("zero denominator");
                q /= den;
                q.canonicalize();
            }
            return make(Node{Kind::number, Scalar(q)});
        }
        if (accept('(')) {
            NodePtr inner = expr();
            expect(')');
            return inner;
        }
        if (peek("sqrt(")) {
            pos_ += 5;
            const bool neg = accept('-');
            const long d = integer();
            expect(')');
            try {
                return make(Node{Kind::number, Scalar::sqrt_of(neg ? -d : d)});
            } catch (const PreconditionError& e) {
                fail(e.what());
            }
        }
        if (peek("sum(")) {
            pos_ += 3;
            return block(Kind::sum);
        }
        if (peek("prod(")) {
            pos_ += 4;
            return block(Kind::prod);
        }
        if (peek("a_")) {
            pos_ += 2;
            Node n{Kind::indexed_param};
            n.var = ident();
            if (!is_bound(n.var)) fail("unbound index \"" + n.var + "\" in a_" + n.var);
            return make(std::move(n));
        }
        if (c == 'a' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
            ++pos_;
            Node n{Kind::param};
            n.param = static_cast<int>(integer());
            if (n.param < 1) fail("parameter indices start at 1");
            return make(std::move(n));
        }
        if (accept('x')) return make(Node{Kind::x});
        if (std::islower(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            Node n{Kind::index};
            n.var = ident();
            if (!is_bound(n.var)) {
                pos_ = start;
                fail("unknown symbol \"" + n.var + "\"");
            }
            return make(std::move(n));
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

// ---------------------------------------------------------------- printing

bool is_atomic(const Node& n) {
    return n.kind == Kind::number || n.kind == Kind::x || n.kind == Kind::param ||
           n.kind == Kind::indexed_param || n.kind == Kind::index || n.kind == Kind::sum || n.kind == Kind::prod;
}

std::string print(const Node& n);

std::string print_operand(const Node& n) {
    if (n.kind == Kind::add) return "(" + print(n) + ")";
    if (n.kind == Kind::number && !n.value.is_rational() && sgn(n.value.rational_part()) != 0) {
        return "(" + print(n) + ")";
    }
    return print(n);
}

std::string print(const Node& n) {
    switch (n.kind) {
        case Kind::number: return n.value.str();
        case Kind::x: return "x";
        case Kind::param: return "a" + std::to_string(n.param);
        case Kind::indexed_param: return "a_" + n.var;
        case Kind::index: return n.var;
        case Kind::add: {
            std::string out;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                if (n.negated[i]) {
                    out += '-';
                } else if (i > 0) {
                    out += '+';
                }
                out += print(*n.kids[i]);
            }
            return out;
        }
        case Kind::mul: {
            std::string out;
            for (const auto& k : n.kids) {
                if (!out.empty()) out += '*';
                out += print_operand(*k);
            }
            return out;
        }
        case Kind::pow: {
            const Node& base = *n.kids[0];
            const Node& exp = *n.kids[1];
            std::string b = is_atomic(base) ? print(base) : "(" + print(base) + ")";
            const bool plain_exp = (exp.kind == Kind::number && sgn(exp.value.rational_part()) >= 0 &&
                                    exp.value.is_rational() && exp.value.rational_part().get_den() == 1) ||
                                   exp.kind == Kind::index;
            return b + "^" + (plain_exp ? print(exp) : "(" + print(exp) + ")");
        }
        case Kind::sum:
        case Kind::prod:
            return std::string(n.kind == Kind::sum ? "sum" : "prod") + "(" + n.var + "=" + std::to_string(n.lo) +
                   ".." + std::to_string(n.hi) + "," + print(*n.kids[0]) + ")";
    }
    throw InternalError("bad template node");
}

// ---------------------------------------------------------------- evaluation

using Env = std::map<std::string, long>;

long eval_int(const Node& n, const Env& env) {
    switch (n.kind) {
        case Kind::number:
            if (!n.value.is_rational() || n.value.rational_part().get_den() != 1 ||
                !n.value.rational_part().get_num().fits_slong_p()) {
                throw ParseError("exponent literal " + n.value.str() + " is not a machine integer");
            }
            return n.value.rational_part().get_num().get_si();
        case Kind::index: return env.at(n.var);
        case Kind::add: {
            long s = 0;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                const long v = eval_int(*n.kids[i], env);
                s += n.negated[i] ? -v : v;
            }
            return s;
        }
        case Kind::mul: {
            long p = 1;
            for (const auto& k : n.kids) p *= eval_int(*k, env);
            return p;
        }
        default: throw ParseError("exponent must be an integer expression in the block indices");
    }
}

SymbolicPoly eval(const Node& n, Env& env) {
    switch (n.kind) {
        case Kind::number: return SymbolicPoly::constant(ParamPoly(n.value));
        case Kind::x: return SymbolicPoly::x_power(1);
        case Kind::param: return SymbolicPoly::constant(ParamPoly::param(n.param));
        case Kind::indexed_param: {
            const long k = env.at(n.var);
            if (k < 1 || k > INT_MAX) throw ParseError("a_" + n.var + " evaluates to index " + std::to_string(k));
            return SymbolicPoly::constant(ParamPoly::param(static_cast<int>(k)));
        }
        case Kind::index: throw ParseError("block index \"" + n.var + "\" used outside an exponent");
        case Kind::add: {
            SymbolicPoly s;
            for (std::size_t i = 0; i < n.kids.size(); ++i) {
                if (n.negated[i]) {
                    s -= eval(*n.kids[i], env);
                } else {
                    s += eval(*n.kids[i], env);
                }
            }
            return s;
        }
        case Kind::mul: {
            SymbolicPoly p = SymbolicPoly::constant(ParamPoly(Scalar(1)));
            for (const auto& k : n.kids) p = p * eval(*k, env);
            return p;
        }
        case Kind::pow: {
            const long e = eval_int(*n.kids[1], env);
            if (e < 0 || e > 1000) throw ParseError("exponent " + std::to_string(e) + " out of range");
            if (n.kids[0]->kind == Kind::x) return SymbolicPoly::x_power(static_cast<int>(e));
            const SymbolicPoly base = eval(*n.kids[0], env);
            SymbolicPoly p = SymbolicPoly::constant(ParamPoly(Scalar(1)));
            for (long i = 0; i < e; ++i) p = p * base;
            return p;
        }
        case Kind::sum:
        case Kind::prod: {
            SymbolicPoly acc = n.kind == Kind::sum ? SymbolicPoly() : SymbolicPoly::constant(ParamPoly(Scalar(1)));
            for (long i = n.lo; i <= n.hi; ++i) {
                env[n.var] = i;
                if (n.kind == Kind::sum) {
                    acc += eval(*n.kids[0], env);
                } else {
                    acc = acc * eval(*n.kids[0], env);
                }
            }
            env.erase(n.var);
            return acc;
        }
    }
    throw InternalError("bad template node");
}

void collect_factors(const Node& n, Env& env, std::vector<SymbolicPoly>& out) {
    if (n.kind == Kind::mul) {
        for (const auto& k : n.kids) collect_factors(*k, env, out);
    } else if (n.kind == Kind::prod) {
        for (long i = n.lo; i <= n.hi; ++i) {
            env[n.var] = i;
            collect_factors(*n.kids[0], env, out);
        }
        env.erase(n.var);
    } else {
        out.push_back(eval(n, env));
    }
}

}  // namespace

EquationTemplate EquationTemplate::parse(std::string_view text) {
    EquationTemplate t;
    t.root_ = Parser(text).parse();
    Env env;
    t.expanded_ = eval(*t.root_, env);
    collect_factors(*t.root_, env, t.factors_);
    for (int p : t.expanded_.params()) t.params_.push_back(p);
    if (t.expanded_.degree() < 1) throw ParseError("template \"" + std::string(text) + "\" is constant");
    return t;
}

std::string EquationTemplate::str() const { return print(*root_); }

UnivariatePoly EquationTemplate::expand(const std::map<int, Scalar>& values) const {
    for (const auto& [k, v] : values) {
        if (!std::binary_search(params_.begin(), params_.end(), k)) {
            throw PreconditionError("template " + str() + " has no parameter a" + std::to_string(k));
        }
    }
    for (int k : params_) {
        if (!values.contains(k)) throw PreconditionError("missing value for parameter a" + std::to_string(k));
    }
    return expanded_.evaluate(values);
}

}  // namespace sea
