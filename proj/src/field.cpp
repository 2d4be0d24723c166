#include "permlab/field.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>

namespace permlab {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense coefficient vectors over F_p, constant term first, no trailing zeros.
using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, uint32_t p) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        uint32_t lead = a.back();
        size_t shift = a.size() - m.size();
        if (lead != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = (uint64_t)lead * m[i] % p;
                a[shift + i] = (uint32_t)((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    fp_trim(a);
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (uint32_t)((prod[i + j] + (uint64_t)a[i] * b[j]) % p);
    return fp_mod(std::move(prod), m, p);
}

// Remainder of a by b, both nonzero, b need not be monic.
FpPoly fp_rem(FpPoly a, FpPoly b, uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    // scale b monic
    uint32_t lb = b.back();
    if (lb != 1) {
        // inverse mod p by Fermat
        uint64_t inv = 1, base = lb, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (auto& c : b) c = (uint32_t)((uint64_t)c * inv % p);
    }
    return fp_mod(std::move(a), b, p);
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool fp_irreducible(const FpPoly& f, uint32_t p) {
    size_t deg = f.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    for (size_t dd = 1; dd <= deg / 2; ++dd) {
        // iterate monic divisors of degree dd
        uint64_t count = 1;
        for (size_t i = 0; i < dd; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            FpPoly div(dd + 1, 0);
            uint64_t t = idx;
            for (size_t i = 0; i < dd; ++i) {
                div[i] = (uint32_t)(t % p);
                t /= p;
            }
            div[dd] = 1;
            if (fp_rem(f, div, p).empty()) return false;
        }
    }
    return true;
}

uint32_t pack(const FpPoly& a, uint32_t p) {
    uint32_t code = 0;
    for (size_t i = a.size(); i-- > 0;) code = code * p + a[i];
    return code;
}

FpPoly unpack(uint32_t code, uint32_t p, uint32_t k) {
    FpPoly a(k, 0);
    for (uint32_t i = 0; i < k; ++i) {
        a[i] = code % p;
        code /= p;
    }
    fp_trim(a);
    return a;
}

} // namespace

class FieldRegistry {
  public:
    static FieldRegistry& instance() {
        static FieldRegistry r;
        return r;
    }

    const Field* rationals() {
        std::lock_guard<std::mutex> lk(mu_);
        if (!qq_) {
            auto f = new_field();
            f->kind_ = FieldKind::rationals;
            qq_ = f;
        }
        return qq_;
    }

    const Field* gaussian() {
        std::lock_guard<std::mutex> lk(mu_);
        if (!qqi_) {
            auto f = new_field();
            f->kind_ = FieldKind::gaussian_rationals;
            qqi_ = f;
        }
        return qqi_;
    }

    const Field* prime(uint32_t p) {
        if (!is_prime_u32(p)) throw FieldError("F" + std::to_string(p) + ": p not prime");
        if (p > 65536) throw FieldError("F" + std::to_string(p) + ": field size exceeds 2^16");
        std::lock_guard<std::mutex> lk(mu_);
        auto& slot = primes_[p];
        if (!slot) {
            auto f = new_field();
            f->kind_ = FieldKind::prime;
            f->p_ = p;
            f->k_ = 1;
            f->q_ = p;
            slot = f;
        }
        return slot;
    }

    const Field* extension(uint32_t p, uint32_t k) {
        if (!is_prime_u32(p)) throw FieldError("GF" + std::to_string(p) + "^" + std::to_string(k) + ": p not prime");
        if (k < 1) throw FieldError("extension degree must be >= 1");
        uint64_t q = 1;
        for (uint32_t i = 0; i < k; ++i) {
            q *= p;
            if (q > 65536) throw FieldError("GF" + std::to_string(p) + "^" + std::to_string(k) + ": field size exceeds 2^16");
        }
        std::lock_guard<std::mutex> lk(mu_);
        auto& slot = exts_[{p, k}];
        if (!slot) {
            auto f = new_field();
            f->kind_ = FieldKind::extension;
            f->p_ = p;
            f->k_ = k;
            f->q_ = (uint32_t)q;
            build_extension(f);
            slot = f;
        }
        return slot;
    }

  private:
    Field* new_field() {
        storage_.emplace_back(std::unique_ptr<Field>(new Field()));
        return storage_.back().get();
    }

    // Chooses the modulus (smallest irreducible monic, coefficients compared
    // from the highest degree down), the generator (smallest code whose
    // multiplicative order is q-1) and fills the exp/log tables.
    static void build_extension(Field* f) {
        const uint32_t p = f->p_, k = f->k_, q = f->q_;
        // candidate tuples (c_{k-1},...,c_0) in ascending order
        FpPoly mod;
        std::vector<uint32_t> digits(k, 0);
        for (;;) {
            FpPoly cand(k + 1, 0);
            cand[k] = 1;
            for (uint32_t i = 0; i < k; ++i) cand[k - 1 - i] = digits[i];
            if (fp_irreducible(cand, p)) {
                mod = cand;
                break;
            }
            int pos = (int)k - 1;
            while (pos >= 0 && digits[pos] == p - 1) digits[pos--] = 0;
            if (pos < 0) throw FieldError("no irreducible modulus found");
            ++digits[pos];
        }
        f->modulus_ = mod;

        auto order_of = [&](uint32_t code) -> uint32_t {
            FpPoly a = unpack(code, p, k);
            FpPoly acc = a;
            uint32_t ord = 1;
            while (pack(acc, p) != 1) {
                acc = fp_mulmod(acc, a, mod, p);
                ++ord;
                if (ord > q) return 0; // not invertible
            }
            return ord;
        };

        uint32_t gen = 0;
        for (uint32_t c = 2; c < q; ++c) {
            if (order_of(c) == q - 1) {
                gen = c;
                break;
            }
        }
        if (gen == 0 && q == 2) gen = 1;
        if (gen == 0) throw FieldError("no generator found");
        f->generator_ = gen;

        f->exp_.assign(q - 1, 0);
        f->log_.assign(q, 0);
        FpPoly g = unpack(gen, p, k);
        FpPoly acc = {1};
        for (uint32_t e = 0; e < q - 1; ++e) {
            uint32_t code = pack(acc, p);
            f->exp_[e] = code;
            f->log_[code] = e;
            acc = fp_mulmod(acc, g, mod, p);
        }
    }

    std::mutex mu_;
    std::deque<std::unique_ptr<Field>> storage_;
    const Field* qq_ = nullptr;
    const Field* qqi_ = nullptr;
    std::map<uint32_t, const Field*> primes_;
    std::map<std::pair<uint32_t, uint32_t>, const Field*> exts_;
};

const Field* Field::rationals() { return FieldRegistry::instance().rationals(); }
const Field* Field::gaussian_rationals() { return FieldRegistry::instance().gaussian(); }
const Field* Field::prime(uint32_t p) { return FieldRegistry::instance().prime(p); }
const Field* Field::extension(uint32_t p, uint32_t k) { return FieldRegistry::instance().extension(p, k); }

const Field* Field::parse(const std::string& spec) {
    if (spec == "QQ") return rationals();
    if (spec == "QQi") return gaussian_rationals();
    auto all_digits = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (spec.size() > 1 && spec[0] == 'F' && all_digits(spec.substr(1)))
        return prime((uint32_t)std::stoul(spec.substr(1)));
    if (spec.size() > 2 && spec.compare(0, 2, "GF") == 0) {
        auto caret = spec.find('^');
        if (caret != std::string::npos) {
            std::string ps = spec.substr(2, caret - 2), ks = spec.substr(caret + 1);
            if (all_digits(ps) && all_digits(ks))
                return extension((uint32_t)std::stoul(ps), (uint32_t)std::stoul(ks));
        }
    }
    throw FieldError("unrecognized field spec: " + spec);
}

std::string Field::name() const {
    switch (kind_) {
        case FieldKind::rationals: return "QQ";
        case FieldKind::gaussian_rationals: return "QQi";
        case FieldKind::prime: return "F" + std::to_string(p_);
        case FieldKind::extension: return "GF" + std::to_string(p_) + "^" + std::to_string(k_);
    }
    return "?";
}

uint32_t Field::ff_add(uint32_t a, uint32_t b) const {
    if (kind_ == FieldKind::prime) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    // digitwise mod p
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        uint32_t s = da + db;
        if (s >= p_) s -= p_;
        out += s * mul;
        mul *= p_;
    }
    return out;
}

uint32_t Field::ff_neg(uint32_t a) const {
    if (kind_ == FieldKind::prime) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    uint32_t out = 0, mul = 1;
    for (uint32_t i = 0; i < k_; ++i) {
        uint32_t da = a % p_;
        a /= p_;
        out += (da == 0 ? 0 : p_ - da) * mul;
        mul *= p_;
    }
    return out;
}

uint32_t Field::ff_sub(uint32_t a, uint32_t b) const { return ff_add(a, ff_neg(b)); }

uint32_t Field::ff_mul(uint32_t a, uint32_t b) const {
    if (kind_ == FieldKind::prime) return (uint32_t)((uint64_t)a * b % p_);
    if (a == 0 || b == 0) return 0;
    uint32_t e = log_[a] + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
}

uint32_t Field::ff_inv(uint32_t a) const {
    if (a == 0) throw FieldError("division by zero in " + name());
    if (kind_ == FieldKind::prime) return ff_pow(a, p_ - 2);
    uint32_t e = log_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
}

uint32_t Field::ff_pow(uint32_t a, uint64_t e) const {
    if (e == 0) return ff_from_int(1);
    if (a == 0) return 0;
    if (kind_ == FieldKind::extension) return exp_[(uint32_t)((uint64_t)log_[a] * (e % (q_ - 1)) % (q_ - 1))];
    uint64_t acc = 1, base = a;
    while (e) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return (uint32_t)acc;
}

uint32_t Field::ff_from_int(long v) const {
    long r = v % (long)p_;
    if (r < 0) r += p_;
    // prime subfield embeds as the constant digit
    return (uint32_t)r;
}

// ---------------------------------------------------------------- Scalar

Scalar Scalar::zero(const Field* f) {
    switch (f->kind()) {
        case FieldKind::rationals: return Scalar(f, Rat(0));
        case FieldKind::gaussian_rationals: return Scalar(f, Gaussian{Rat(0), Rat(0)});
        default: return Scalar(f, (uint32_t)0);
    }
}

Scalar Scalar::one(const Field* f) { return from_int(f, 1); }

Scalar Scalar::from_int(const Field* f, long v) {
    switch (f->kind()) {
        case FieldKind::rationals: return Scalar(f, Rat(v));
        case FieldKind::gaussian_rationals: return Scalar(f, Gaussian{Rat(v), Rat(0)});
        default: return Scalar(f, f->ff_from_int(v));
    }
}

Scalar Scalar::from_rat(const Field* f, const Rat& r_in) {
    Rat r = r_in;
    r.canonicalize();
    switch (f->kind()) {
        case FieldKind::rationals: return Scalar(f, r);
        case FieldKind::gaussian_rationals: return Scalar(f, Gaussian{r, Rat(0)});
        default: {
            // map a/b to a * b^{-1} when b is a unit mod p
            mpz_class num = r.get_num(), den = r.get_den();
            mpz_class pz((unsigned long)f->p());
            mpz_class nr = num % pz, dr = den % pz;
            if (nr < 0) nr += pz;
            if (dr < 0) dr += pz;
            uint32_t n = (uint32_t)nr.get_ui(), d = (uint32_t)dr.get_ui();
            if (d == 0) throw FieldError("rational with denominator divisible by p");
            return Scalar(f, f->ff_mul(f->ff_from_int(n), f->ff_inv(f->ff_from_int(d))));
        }
    }
}

Scalar Scalar::from_gaussian(const Rat& re, const Rat& im) {
    Gaussian g{re, im};
    g.re.canonicalize();
    g.im.canonicalize();
    return Scalar(Field::gaussian_rationals(), std::move(g));
}

Scalar Scalar::from_code(const Field* f, uint32_t code) {
    if (!f->finite()) throw FieldError("from_code needs a finite field");
    if (code >= f->size()) throw FieldError("code out of range");
    return Scalar(f, code);
}

bool Scalar::is_zero() const {
    switch (f_->kind()) {
        case FieldKind::rationals: return rat() == 0;
        case FieldKind::gaussian_rationals: return gauss().re == 0 && gauss().im == 0;
        default: return code() == 0;
    }
}

bool Scalar::is_one() const {
    switch (f_->kind()) {
        case FieldKind::rationals: return rat() == 1;
        case FieldKind::gaussian_rationals: return gauss().re == 1 && gauss().im == 0;
        default: return code() == f_->ff_from_int(1);
    }
}

bool Scalar::is_integer() const {
    return f_->kind() == FieldKind::rationals && rat().get_den() == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (f_ != o.f_)
        throw FieldError("mixed-field arithmetic: " + f_->name() + " vs " + o.f_->name());
}

Scalar Scalar::operator-() const {
    switch (f_->kind()) {
        case FieldKind::rationals: return Scalar(f_, Rat(-rat()));
        case FieldKind::gaussian_rationals: return Scalar(f_, Gaussian{-gauss().re, -gauss().im});
        default: return Scalar(f_, f_->ff_neg(code()));
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    switch (f_->kind()) {
        case FieldKind::rationals: return Scalar(f_, Rat(rat() + o.rat()));
        case FieldKind::gaussian_rationals:
            return Scalar(f_, Gaussian{gauss().re + o.gauss().re, gauss().im + o.gauss().im});
        default: return Scalar(f_, f_->ff_add(code(), o.code()));
    }
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    switch (f_->kind()) {
        case FieldKind::rationals: return Scalar(f_, Rat(rat() - o.rat()));
        case FieldKind::gaussian_rationals:
            return Scalar(f_, Gaussian{gauss().re - o.gauss().re, gauss().im - o.gauss().im});
        default: return Scalar(f_, f_->ff_sub(code(), o.code()));
    }
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    switch (f_->kind()) {
        case FieldKind::rationals: return Scalar(f_, Rat(rat() * o.rat()));
        case FieldKind::gaussian_rationals: {
            const Gaussian &a = gauss(), &b = o.gauss();
            return Scalar(f_, Gaussian{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
        }
        default: return Scalar(f_, f_->ff_mul(code(), o.code()));
    }
}

Scalar Scalar::inv() const {
    if (is_zero()) throw FieldError("division by zero in " + f_->name());
    switch (f_->kind()) {
        case FieldKind::rationals: return Scalar(f_, Rat(1 / rat()));
        case FieldKind::gaussian_rationals: {
            const Gaussian& a = gauss();
            Rat n = a.re * a.re + a.im * a.im;
            return Scalar(f_, Gaussian{a.re / n, -a.im / n});
        }
        default: return Scalar(f_, f_->ff_inv(code()));
    }
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(uint64_t e) const {
    if (f_->finite()) return Scalar(f_, f_->ff_pow(code(), e));
    Scalar acc = Scalar::one(f_), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    switch (f_->kind()) {
        case FieldKind::rationals: return rat() == o.rat();
        case FieldKind::gaussian_rationals: return gauss() == o.gauss();
        default: return code() == o.code();
    }
}

namespace {

// -7 | 2/3 (lowest terms handled by mpq canonicalization)
Rat parse_rat(std::string s, size_t offset) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw ParseError("empty rational literal", offset);
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
        if (!ok) throw ParseError("bad rational literal: " + s, offset + i);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string den = s.substr(slash + 1);
        if (den.empty() || den == "0") throw ParseError("zero or empty denominator: " + s, offset);
    }
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s, offset);
    r.canonicalize();
    return r;
}

// a | bi | a+bi | a-bi with rational a, b; also i, -i.
Gaussian parse_gaussian(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw ParseError("empty scalar", 0);
    // split at the last top-level + or - that is not the leading sign
    size_t split = std::string::npos;
    for (size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;
    }
    auto parse_part = [&](std::string part, bool imaginary, size_t off) -> Rat {
        if (imaginary) {
            if (part.empty() || part.back() != 'i') throw ParseError("expected i-part: " + part, off);
            part.pop_back();
            if (part.empty() || part == "+") part = "1";
            else if (part == "-") part = "-1";
        }
        return parse_rat(part, off);
    };
    bool has_i = s.back() == 'i';
    if (!has_i) return Gaussian{parse_rat(s, 0), Rat(0)};
    if (split == std::string::npos) return Gaussian{Rat(0), parse_part(s, true, 0)};
    std::string a = s.substr(0, split);
    std::string b = s.substr(split); // keeps the sign
    return Gaussian{parse_rat(a, 0), parse_part(b, true, split)};
}

} // namespace

Scalar Scalar::parse(const Field* f, const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) throw ParseError("empty scalar", 0);
    switch (f->kind()) {
        case FieldKind::rationals: return Scalar(f, parse_rat(s, 0));
        case FieldKind::gaussian_rationals: return Scalar(f, parse_gaussian(s));
        case FieldKind::prime:
        case FieldKind::extension: {
            bool neg = false;
            size_t i = 0;
            if (s[0] == '-') {
                neg = true;
                i = 1;
            }
            if (i >= s.size()) throw ParseError("empty scalar", i);
            Scalar out = Scalar::zero(f);
            if (s[i] == 'g') {
                if (f->kind() != FieldKind::extension)
                    throw ParseError("generator literal needs an extension field", i);
                uint64_t e = 1;
                if (i + 1 < s.size()) {
                    if (s[i + 1] != '^') throw ParseError("expected ^ after g", i + 1);
                    std::string es = s.substr(i + 2);
                    if (es.empty() || !std::all_of(es.begin(), es.end(), ::isdigit))
                        throw ParseError("bad exponent: " + es, i + 2);
                    e = std::stoull(es);
                }
                out = Scalar(f, f->ff_pow(f->generator_code(), e));
            } else {
                std::string digits = s.substr(i);
                if (!std::all_of(digits.begin(), digits.end(), ::isdigit))
                    throw ParseError("bad residue literal: " + s, i);
                mpz_class z(digits);
                mpz_class r = z % (unsigned long)f->p();
                out = Scalar(f, f->ff_from_int(r.get_si()));
            }
            return neg ? -out : out;
        }
    }
    throw ParseError("unreachable", 0);
}

std::string Scalar::str() const {
    switch (f_->kind()) {
        case FieldKind::rationals: return rat().get_str();
        case FieldKind::gaussian_rationals: {
            const Gaussian& a = gauss();
            if (a.im == 0) return a.re.get_str();
            std::string im;
            if (a.im == 1) im = "i";
            else if (a.im == -1) im = "-i";
            else im = a.im.get_str() + "i";
            if (a.re == 0) return im;
            return a.re.get_str() + (a.im > 0 ? "+" : "") + im;
        }
        case FieldKind::prime: return std::to_string(code());
        case FieldKind::extension: {
            uint32_t c = code();
            if (c == 0) return "0";
            uint32_t e = f_->log_table()[c];
            if (e == 0) return "1";
            if (e == 1) return "g";
            return "g^" + std::to_string(e);
        }
    }
    return "?";
}

mpz_class factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace permlab
