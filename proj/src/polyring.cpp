#include "permlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <unordered_map>

#include "permlab/error.hpp"

namespace permlab {

// ------------------------------------------------------------- Monomial

Monomial Monomial::mul(const Monomial& o, size_t nvars) const {
    Monomial r;
    uint32_t d = 0;
    for (size_t i = 0; i < nvars; ++i) {
        uint32_t s = (uint32_t)e[i] + o.e[i];
        if (s > 0xffff) throw RingError("exponent overflow (limit 65535 per variable)");
        r.e[i] = (uint16_t)s;
        d += s;
    }
    r.deg = d;
    return r;
}

bool Monomial::divides(const Monomial& o, size_t nvars) const {
    if (deg > o.deg) return false;
    for (size_t i = 0; i < nvars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divide(const Monomial& o, size_t nvars) const {
    Monomial r;
    uint32_t d = 0;
    for (size_t i = 0; i < nvars; ++i) {
        r.e[i] = (uint16_t)(e[i] - o.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, size_t nvars) {
    Monomial r;
    uint32_t d = 0;
    for (size_t i = 0; i < nvars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

bool Monomial::coprime(const Monomial& o, size_t nvars) const {
    for (size_t i = 0; i < nvars; ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

bool Monomial::equal(const Monomial& o, size_t nvars) const {
    if (deg != o.deg) return false;
    for (size_t i = 0; i < nvars; ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

size_t Monomial::hash(size_t nvars) const {
    size_t h = 1469598103934665603ull;
    for (size_t i = 0; i < nvars; ++i) {
        h ^= e[i];
        h *= 1099511628211ull;
    }
    return h;
}

int mono_cmp(const Monomial& a, const Monomial& b, size_t nvars, MonomialOrder order) {
    if (order.kind == MonomialOrder::Kind::degrevlex) {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        // smaller exponent on the last differing variable wins
        for (size_t i = nvars; i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
        }
        return 0;
    }
    for (size_t i = 0; i < nvars; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

// ------------------------------------------------------------- PolyRing

struct PolyRingIntern {
    static RingPtr make(const Field* field, const std::vector<std::string>& vars) {
        if (vars.size() > kMaxVars)
            throw RingError("too many variables (limit " + std::to_string(kMaxVars) + ")");
        std::string key = field->name();
        for (const auto& v : vars) {
            if (v.empty()) throw RingError("empty variable name");
            if (!(std::isalpha((unsigned char)v[0]) || v[0] == '_'))
                throw RingError("variable name must start with a letter: " + v);
            for (char c : v)
                if (!(std::isalnum((unsigned char)c) || c == '_'))
                    throw RingError("bad character in variable name: " + v);
            key += "|" + v;
        }
        static std::mutex mu;
        static std::map<std::string, std::shared_ptr<const PolyRing>> cache;
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        auto ring = std::shared_ptr<PolyRing>(new PolyRing(field, vars));
        for (size_t i = 0; i < vars.size(); ++i) {
            if (!ring->index_.emplace(vars[i], i).second)
                throw RingError("duplicate variable name: " + vars[i]);
        }
        cache.emplace(key, ring);
        return ring;
    }
};

RingPtr PolyRing::make(const Field* field, const std::vector<std::string>& vars) {
    return PolyRingIntern::make(field, vars);
}

std::optional<size_t> PolyRing::var_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ----------------------------------------------------------------- Poly

void Poly::assert_same_ring(const Poly& o) const {
    if (ring_.get() != o.ring_.get()) throw RingError("mixed-ring arithmetic");
}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(ring);
    if (c.field() != ring->field()) throw RingError("scalar field does not match ring");
    if (!c.is_zero()) p.t_.push_back({Monomial::one(), c});
    return p;
}

Poly Poly::from_int(RingPtr ring, long v) {
    return constant(ring, Scalar::from_int(ring->field(), v));
}

Poly Poly::variable(RingPtr ring, size_t idx) {
    if (idx >= ring->nvars()) throw RingError("variable index out of range");
    Poly p(ring);
    p.t_.push_back({Monomial::var(idx), Scalar::one(ring->field())});
    return p;
}

Poly Poly::term(RingPtr ring, const Monomial& m, const Scalar& c) {
    Poly p(ring);
    if (c.field() != ring->field()) throw RingError("scalar field does not match ring");
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const size_t nv = ring->nvars();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.m, b.m, nv, MonomialOrder::degrevlex()) > 0;
    });
    Poly p(ring);
    for (auto& t : terms) {
        if (t.c.field() != ring->field()) throw RingError("scalar field does not match ring");
        if (!p.t_.empty() && p.t_.back().m.equal(t.m, nv)) {
            p.t_.back().c += t.c;
            if (p.t_.back().c.is_zero()) p.t_.pop_back();
        } else if (!t.c.is_zero()) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

uint32_t Poly::total_degree() const { return t_.empty() ? 0 : t_[0].m.deg; }

uint32_t Poly::degree_in(size_t var) const {
    uint32_t d = 0;
    for (const auto& t : t_) d = std::max<uint32_t>(d, t.m.e[var]);
    return d;
}

Poly Poly::operator-() const {
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.m, -t.c});
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    assert_same_ring(o);
    const size_t nv = ring_->nvars();
    Poly r(ring_);
    r.t_.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = mono_cmp(t_[i].m, o.t_[j].m, nv, MonomialOrder::degrevlex());
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Scalar s = t_[i].c + o.t_[j].c;
            if (!s.is_zero()) r.t_.push_back({t_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        Scalar s = t.c * c;
        if (!s.is_zero()) r.t_.push_back({t.m, std::move(s)});
    }
    return r;
}

Poly Poly::scaled_shifted(const Scalar& c, const Monomial& m) const {
    if (c.is_zero()) return Poly(ring_);
    const size_t nv = ring_->nvars();
    Poly r(ring_);
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        Scalar s = t.c * c;
        if (!s.is_zero()) r.t_.push_back({t.m.mul(m, nv), std::move(s)});
    }
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    assert_same_ring(o);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    const size_t nv = ring_->nvars();
    const Poly& small = t_.size() <= o.t_.size() ? *this : o;
    const Poly& big = t_.size() <= o.t_.size() ? o : *this;

    if (small.t_.size() <= 4) {
        Poly acc(ring_);
        for (const auto& t : small.t_) acc += big.scaled_shifted(t.c, t.m);
        return acc;
    }

    struct H {
        size_t nv;
        size_t operator()(const Monomial& m) const { return m.hash(nv); }
    };
    struct Eq {
        size_t nv;
        bool operator()(const Monomial& a, const Monomial& b) const { return a.equal(b, nv); }
    };
    std::unordered_map<Monomial, Scalar, H, Eq> acc(small.t_.size() * big.t_.size() / 2 + 8,
                                                    H{nv}, Eq{nv});
    for (const auto& a : small.t_)
        for (const auto& b : big.t_) {
            Monomial m = a.m.mul(b.m, nv);
            Scalar v = a.c * b.c;
            auto it = acc.find(m);
            if (it == acc.end()) {
                acc.emplace(std::move(m), std::move(v));
            } else {
                it->second += v;
            }
        }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& kv : acc)
        if (!kv.second.is_zero()) terms.push_back({kv.first, kv.second});
    return from_terms(ring_, std::move(terms));
}

Poly Poly::pow(uint32_t e) const {
    Poly acc = from_int(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
        if (!e) break;
    }
    return acc;
}

Poly Poly::derivative(size_t var) const {
    std::vector<Term> terms;
    for (const auto& t : t_) {
        uint16_t e = t.m.e[var];
        if (e == 0) continue;
        Scalar c = t.c * Scalar::from_int(ring_->field(), e);
        if (c.is_zero()) continue;
        Monomial m = t.m;
        m.e[var] = (uint16_t)(e - 1);
        m.deg -= 1;
        terms.push_back({m, std::move(c)});
    }
    return from_terms(ring_, std::move(terms));
}

bool Poly::operator==(const Poly& o) const {
    if (ring_.get() != o.ring_.get()) return false;
    if (t_.size() != o.t_.size()) return false;
    const size_t nv = ring_->nvars();
    for (size_t i = 0; i < t_.size(); ++i)
        if (!t_[i].m.equal(o.t_[i].m, nv) || t_[i].c != o.t_[i].c) return false;
    return true;
}

Scalar Poly::coefficient_of(const Monomial& m) const {
    const size_t nv = ring_->nvars();
    for (const auto& t : t_)
        if (t.m.equal(m, nv)) return t.c;
    return Scalar::zero(ring_->field());
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != ring_->nvars()) throw ArgError("evaluation point has wrong arity");
    for (const auto& s : point)
        if (s.field() != ring_->field()) throw RingError("evaluation point field mismatch");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& t : t_) {
        Scalar v = t.c;
        for (size_t i = 0; i < ring_->nvars(); ++i)
            if (t.m.e[i]) v = v * point[i].pow(t.m.e[i]);
        acc = acc + v;
    }
    return acc;
}

Poly Poly::substitute(const std::map<std::string, Poly>& bindings, const RingPtr& target) const {
    for (const auto& [name, val] : bindings) {
        if (val.ring().get() != target.get())
            throw RingError("binding for " + name + " is not in the target ring");
    }
    // variable image table
    std::vector<Poly> image(ring_->nvars());
    for (size_t i = 0; i < ring_->nvars(); ++i) {
        const std::string& name = ring_->var_name(i);
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            image[i] = it->second;
        } else {
            auto idx = target->var_index(name);
            if (!idx) throw RingError("variable " + name + " is neither bound nor present in target ring");
            image[i] = Poly::variable(target, *idx);
        }
    }
    const Field* tf = target->field();
    auto move_scalar = [&](const Scalar& c) -> Scalar {
        if (c.field() == tf) return c;
        throw RingError("substitution cannot change the coefficient field");
    };
    Poly acc = Poly::zero(target);
    for (const auto& t : t_) {
        Poly term = Poly::constant(target, move_scalar(t.c));
        for (size_t i = 0; i < ring_->nvars(); ++i)
            if (t.m.e[i]) term = term * image[i].pow(t.m.e[i]);
        acc += term;
    }
    return acc;
}

// ------------------------------------------------------------- printing

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    const size_t nv = ring_->nvars();
    bool first = true;
    for (const auto& t : t_) {
        std::string cs = t.c.str();
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            // simple leading minus, fold into the separator
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) out += "-";
            first = false;
        } else {
            out += negated ? " - " : " + ";
        }
        bool needs_parens = cs.find_first_of("+-") != std::string::npos;
        std::string vars;
        for (size_t i = 0; i < nv; ++i) {
            if (!t.m.e[i]) continue;
            if (!vars.empty()) vars += "*";
            vars += ring_->var_name(i);
            if (t.m.e[i] > 1) vars += "^" + std::to_string(t.m.e[i]);
        }
        if (vars.empty()) {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += vars;
        } else {
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + vars;
        }
    }
    return out;
}

// -------------------------------------------------------------- parsing
//
// expr   := term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := atom ('^' uint)?
// atom   := scalar-literal | varname | '(' expr ')'

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    // digits ('/' digits)?  the slash form only makes sense over QQ / QQi
    std::string number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos < s.size() && s[pos] == '/' && pos + 1 < s.size() &&
            std::isdigit((unsigned char)s[pos + 1])) {
            ++pos;
            while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        }
        return s.substr(start, pos - start);
    }
    std::string name() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (std::isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
            ++pos;
            while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        }
        return s.substr(start, pos - start);
    }
    uint32_t uint_lit() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw ParseError("expected unsigned integer exponent", pos);
        unsigned long v = std::stoul(s.substr(start, pos - start));
        if (v > 0xffff) throw ParseError("exponent too large (limit 65535)", start);
        return (uint32_t)v;
    }
};

struct Parser {
    Lexer lx;
    RingPtr ring;

    Poly parse_expr() {
        Poly acc = parse_signed_term();
        for (;;) {
            char c = lx.peek();
            if (c == '+') {
                lx.expect('+');
                acc += parse_signed_term();
            } else if (c == '-') {
                lx.expect('-');
                acc -= parse_signed_term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_signed_term() {
        bool neg = false;
        for (;;) {
            if (lx.accept('-')) { neg = !neg; continue; }
            if (lx.accept('+')) continue;
            break;
        }
        Poly t = parse_term();
        return neg ? -t : t;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        for (;;) {
            char c = lx.peek();
            if (c == '*') {
                lx.expect('*');
                acc *= parse_factor();
            } else if (c == '(' || std::isdigit((unsigned char)c) ||
                       std::isalpha((unsigned char)c) || c == '_') {
                acc *= parse_factor(); // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_atom();
        if (lx.peek() == '^') {
            lx.expect('^');
            base = base.pow(lx.uint_lit());
        }
        return base;
    }

    Poly parse_atom() {
        char c = lx.peek();
        const Field* f = ring->field();
        if (c == '(') {
            lx.expect('(');
            Poly inner = parse_expr();
            lx.expect(')');
            return inner;
        }
        if (std::isdigit((unsigned char)c)) {
            std::string num = lx.number();
            return Poly::constant(ring, Scalar::parse(f, num));
        }
        // longest declared-variable name starting here; allows juxtaposed
        // variables like x1x2 without a separating '*'
        if (auto idx = match_var()) return Poly::variable(ring, *idx);
        // special single-letter coefficient atoms when not shadowed by a variable
        if (c == 'i' && f->kind() == FieldKind::gaussian_rationals) {
            lx.expect('i');
            return Poly::constant(ring, Scalar::parse(f, "i"));
        }
        if (c == 'g' && f->kind() == FieldKind::extension) {
            lx.expect('g');
            return Poly::constant(ring, Scalar::from_code(f, f->generator_code()));
        }
        std::string nm = lx.name();
        if (nm.empty()) throw ParseError("expected atom", lx.pos);
        throw ParseError("unknown variable: " + nm, lx.pos);
    }

    std::optional<size_t> match_var() {
        lx.skip_ws();
        size_t best_len = 0, best_idx = 0;
        for (size_t i = 0; i < ring->nvars(); ++i) {
            const std::string& nm = ring->var_name(i);
            if (nm.size() > best_len && lx.s.compare(lx.pos, nm.size(), nm) == 0) {
                best_len = nm.size();
                best_idx = i;
            }
        }
        if (best_len == 0) return std::nullopt;
        lx.pos += best_len;
        return best_idx;
    }
};

} // namespace

Poly Poly::parse(const RingPtr& ring, const std::string& text) {
    Parser p{Lexer{text, 0}, ring};
    if (p.lx.eof()) throw ParseError("empty polynomial", 0);
    Poly out = p.parse_expr();
    if (!p.lx.eof()) throw ParseError("unexpected trailing input", p.lx.pos);
    return out;
}

} // namespace permlab
