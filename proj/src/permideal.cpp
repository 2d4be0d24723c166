#include "permlab/permideal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "permlab/error.hpp"

namespace permlab {

namespace {

size_t meet_size(const std::vector<size_t>& a, const std::vector<size_t>& b) {
    size_t k = 0;
    for (size_t x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) ++k;
    return k;
}

std::vector<size_t> complement(size_t n, const std::vector<size_t>& idx) {
    std::vector<size_t> out;
    for (size_t j = 0; j < n; ++j)
        if (std::find(idx.begin(), idx.end(), j) == idx.end()) out.push_back(j);
    return out;
}

Poly entry_product(const PolyMatrix& x, size_t row, const std::vector<size_t>& cols) {
    Poly out = Poly::from_int(x.ring(), 1);
    for (size_t j : cols) out *= x.at(row, j);
    return out;
}

Scalar int_scalar(const Field* f, const mpz_class& v, bool negate) {
    mpz_class w = negate ? mpz_class(-v) : v;
    if (w.fits_slong_p()) return Scalar::from_int(f, w.get_si());
    if (f->kind() == FieldKind::rationals) return Scalar::from_rat(f, Rat(w));
    throw ArgError("integer constant too large for this field");
}

size_t var_of(const RingPtr& ring, const std::string& name) {
    auto idx = ring->var_index(name);
    if (!idx) throw RingError("missing variable " + name);
    return *idx;
}

} // namespace

std::string IdealBasis::serialize() const {
    std::ostringstream os;
    os << "ring " << ring->field()->name() << ' ' << m << ' ' << n << '\n';
    for (const auto& g : gens) os << g.str() << '\n';
    return os.str();
}

IdealBasis IdealBasis::deserialize(const std::string& text) {
    std::istringstream is(text);
    std::string word;
    if (!(is >> word) || word != "ring") throw IoError("ideal basis text must start with 'ring'");
    std::string field_name;
    size_t m = 0, n = 0;
    if (!(is >> field_name >> m >> n)) throw IoError("bad ideal basis header");
    std::string rest;
    std::getline(is, rest);
    IdealBasis out;
    out.m = m;
    out.n = n;
    const Field* f = Field::parse(field_name);
    out.ring = generic_matrix(f, m, n).ring();
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.gens.push_back(Poly::parse(out.ring, line));
        out.labels.push_back("g" + std::to_string(out.gens.size()));
    }
    return out;
}

IdealBasis permanental_ideal(const Field* f, size_t d, size_t m, size_t n) {
    if (d == 0 || d > std::min(m, n)) throw ArgError("permanental ideal: d out of range");
    PolyMatrix x = generic_matrix(f, m, n);
    IdealBasis out;
    out.ring = x.ring();
    out.m = m;
    out.n = n;
    out.label = "I_" + std::to_string(d) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    auto subs = sub_permanents(x, d);
    for (auto& [sel, val] : subs) {
        out.gens.push_back(std::move(val));
        out.labels.push_back("P" + sel.str());
    }
    return out;
}

CombinationParts combination_parts(const Field* f, size_t d, size_t n,
                                   const std::vector<size_t>& alpha, size_t row) {
    if (d < 1 || n < d || n > 2 * d - 1) throw ArgError("combination parts: need d <= n <= 2d-1");
    if (alpha.size() != d - 1 || row >= d) throw ArgError("combination parts: bad alpha or row");
    for (size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] >= n) throw ArgError("combination parts: alpha out of range");
        if (i && alpha[i] <= alpha[i - 1]) throw ArgError("combination parts: alpha not increasing");
    }
    PolyMatrix x = generic_matrix(f, d, n);
    RingPtr ring = x.ring();
    std::vector<size_t> other_rows = complement(d, {row});

    auto a_of = [&](const std::vector<size_t>& cols) {
        return permanent(x.submatrix(other_rows, cols));
    };
    auto a_prime_of = [&](const std::vector<size_t>& cols) {
        return a_of(cols) * entry_product(x, row, complement(n, cols));
    };

    CombinationParts parts(ring, a_of(alpha), a_prime_of(alpha));
    parts.d = d;
    parts.n = n;
    parts.row = row;
    parts.alpha = alpha;

    std::vector<size_t> all_rows = complement(d, {});
    parts.s.assign(d, Poly::zero(ring));
    for (const auto& beta : combinations(n, d)) {
        Poly pp = permanent(x.submatrix(all_rows, beta)) * entry_product(x, row, complement(n, beta));
        parts.s[meet_size(beta, alpha)] += pp;
        parts.p_prime.push_back({beta, std::move(pp)});
    }
    parts.t.assign(d, Poly::zero(ring));
    for (const auto& ap : combinations(n, d - 1)) parts.t[meet_size(ap, alpha)] += a_prime_of(ap);
    return parts;
}

IdentityReport verify_evid(const Field* f, size_t d, const std::vector<size_t>& alpha,
                           size_t row) {
    size_t n = 2 * d - 1;
    auto parts = combination_parts(f, d, n, alpha, row);
    IdentityReport rep(parts.ring);
    for (size_t i = 0; i < d; ++i) {
        Scalar w = int_scalar(f, factorial((unsigned)i) * factorial((unsigned)(d - i - 1)), i & 1);
        rep.lhs += w * parts.s[i];
    }
    long sign = (d % 2 == 0) ? -1 : 1; // (-1)^(d-1)
    Poly rhs = int_scalar(f, factorial((unsigned)d), sign < 0) * parts.a_alpha_prime;
    rep.difference = rep.lhs - rhs;
    rep.pass = rep.difference.is_zero();
    rep.sign = sign;
    std::ostringstream os;
    os << "combination equals " << (sign < 0 ? "-" : "") << d << "!*A'_alpha: "
       << (rep.pass ? "yes" : "no");
    rep.detail = os.str();
    return rep;
}

IdentityReport verify_preevid(const Field* f, size_t d, size_t n,
                              const std::vector<size_t>& alpha, size_t row) {
    if (!(d < n && n < 2 * d - 1)) throw ArgError("preevid needs d < n < 2d-1");
    auto parts = combination_parts(f, d, n, alpha, row);
    IdentityReport rep(parts.ring);
    size_t lo = 2 * d - n - 1;
    for (size_t i = lo; i < d; ++i) {
        Scalar w = int_scalar(
            f, factorial((unsigned)(i + n - 2 * d + 1)) * factorial((unsigned)(d - i - 1)), i & 1);
        rep.lhs += w * parts.s[i];
    }
    long sign_a = (d % 2 == 0) ? -1 : 1;     // (-1)^(d-1)
    long sign_t = (n % 2 == 0) ? -1 : 1;     // (-1)^(n+1)
    mpz_class fac = factorial((unsigned)(n - d + 1));
    Poly rhs = int_scalar(f, fac, sign_a < 0) * parts.a_alpha_prime +
               int_scalar(f, fac, sign_t < 0) * parts.t[2 * d - n - 2];
    rep.difference = rep.lhs - rhs;
    rep.pass = rep.difference.is_zero();
    rep.sign = sign_a;
    std::ostringstream os;
    os << "combination equals " << (sign_a < 0 ? "-" : "") << "(n-d+1)!*A'_alpha "
       << (sign_t < 0 ? "-" : "+") << " (n-d+1)!*T_" << 2 * d - n - 2 << ": "
       << (rep.pass ? "yes" : "no");
    rep.detail = os.str();
    return rep;
}

nlohmann::ordered_json MembershipCertificate::to_json() const {
    nlohmann::ordered_json j;
    j["field"] = ring->field()->name();
    size_t n = 0, m = 0;
    // rings built by generic_matrix carry x_<i>_<j> names; recover the shape
    {
        size_t best_i = 0, best_j = 0;
        for (size_t v = 0; v < ring->nvars(); ++v) {
            const std::string& nm = ring->var_name(v);
            size_t p1 = nm.find('_'), p2 = nm.rfind('_');
            best_i = std::max(best_i, (size_t)std::stoul(nm.substr(p1 + 1, p2 - p1 - 1)));
            best_j = std::max(best_j, (size_t)std::stoul(nm.substr(p2 + 1)));
        }
        m = best_i;
        n = best_j;
    }
    j["m"] = m;
    j["n"] = n;
    j["c"] = c.get_str();
    j["target"] = target.str();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [idx, q] : pairs) {
        nlohmann::ordered_json e;
        e["generator"] = idx;
        e["coefficient"] = q.str();
        arr.push_back(std::move(e));
    }
    j["pairs"] = std::move(arr);
    return j;
}

MembershipCertificate MembershipCertificate::from_json(const nlohmann::ordered_json& j) {
    const Field* f = Field::parse(j.at("field").get<std::string>());
    size_t m = j.at("m").get<size_t>(), n = j.at("n").get<size_t>();
    RingPtr ring = generic_matrix(f, m, n).ring();
    MembershipCertificate cert{ring, mpz_class(j.at("c").get<std::string>()),
                               Poly::parse(ring, j.at("target").get<std::string>()),
                               {}};
    for (const auto& e : j.at("pairs"))
        cert.pairs.push_back({e.at("generator").get<size_t>(),
                              Poly::parse(ring, e.at("coefficient").get<std::string>())});
    return cert;
}

MembershipCertificate moncor_certificate(size_t d) {
    if (d < 1) throw ArgError("certificate needs d >= 1");
    const Field* f = Field::rationals();
    PolyMatrix x1 = generic_matrix(f, 1, 1);
    MembershipCertificate cert{x1.ring(), 1, x1.at(0, 0), {{0, Poly::from_int(x1.ring(), 1)}}};
    for (size_t k = 2; k <= d; ++k) {
        size_t n = 2 * k - 1;
        PolyMatrix x = generic_matrix(f, k, n);
        RingPtr ring = x.ring();
        // lift the previous certificate along the shared variable names
        std::vector<std::pair<std::vector<size_t>, Poly>> lifted;
        auto prev_cols = combinations(2 * k - 3, k - 1);
        for (const auto& [idx, q] : cert.pairs)
            lifted.push_back({prev_cols[idx], q.substitute({}, ring)});

        // the entries multiplying everything up to the full k x (2k-1) grid:
        // rows 1..k-1 of the two new columns
        Poly extension = Poly::from_int(ring, 1);
        for (size_t i = 0; i + 1 < k; ++i) extension *= x.at(i, n - 2) * x.at(i, n - 1);

        auto betas = combinations(n, k);
        std::vector<Poly> coeff(betas.size(), Poly::zero(ring));
        std::vector<size_t> other_rows = complement(k, {k - 1});
        for (const auto& [alpha, q] : lifted) {
            Poly common = q * extension * entry_product(x, k - 1, alpha);
            for (size_t bi = 0; bi < betas.size(); ++bi) {
                size_t i = meet_size(betas[bi], alpha);
                // k! A'_alpha (distinguished row k) re-expanded over the P_beta
                Scalar w =
                    int_scalar(f, factorial((unsigned)i) * factorial((unsigned)(k - 1 - i)),
                               ((k - 1 + i) & 1) != 0);
                coeff[bi] += w * (common * entry_product(x, k - 1, complement(n, betas[bi])));
            }
        }
        MembershipCertificate next{ring, factorial((unsigned)k) * cert.c, Poly::from_int(ring, 1), {}};
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < n; ++j) next.target *= x.at(i, j);
        for (size_t bi = 0; bi < betas.size(); ++bi)
            if (!coeff[bi].is_zero()) next.pairs.push_back({bi, coeff[bi]});
        cert = std::move(next);
    }
    return cert;
}

IdentityReport verify_certificate(const MembershipCertificate& cert, const IdealBasis& basis) {
    if (cert.ring != basis.ring) throw ArgError("certificate and basis rings differ");
    IdentityReport rep(cert.ring);
    for (const auto& [idx, q] : cert.pairs) {
        if (idx >= basis.gens.size()) throw ArgError("certificate generator index out of range");
        rep.lhs += q * basis.gens[idx];
    }
    Poly rhs = int_scalar(cert.ring->field(), cert.c, false) * cert.target;
    rep.difference = rep.lhs - rhs;
    rep.pass = rep.difference.is_zero();
    rep.detail = rep.pass ? "certificate expands to c*target"
                          : "certificate mismatch; difference has " +
                                std::to_string(rep.difference.nterms()) + " terms";
    return rep;
}

DPlusOneForms dplus1_forms(const Field* field, size_t d) {
    if (d < 2) throw ArgError("forms need d >= 2");
    DPlusOneForms forms(generic_matrix(field, d, d + 1));
    forms.d = d;
    const PolyMatrix& x = forms.x;
    RingPtr ring = forms.ring;
    std::vector<size_t> all_rows = complement(d, {});

    for (size_t j = 0; j <= d; ++j)
        forms.p.push_back(permanent(x.submatrix(all_rows, complement(d + 1, {j}))));

    forms.b.assign(d, std::vector<std::vector<Poly>>(d + 1, std::vector<Poly>(d + 1, Poly::zero(ring))));
    for (size_t r = 0; r < d; ++r)
        for (size_t p = 0; p <= d; ++p)
            for (size_t q = 0; q <= d; ++q) {
                forms.b[r][p][q] = forms.p[q].derivative(var_of(
                    ring, "x_" + std::to_string(r + 1) + "_" + std::to_string(p + 1)));
                if (p == q && !forms.b[r][p][q].is_zero())
                    throw Error("B_{r,p,p} must vanish");
            }

    for (size_t p = 0; p <= d; ++p) forms.f.push_back(determinant(forms.l_matrix(p)));
    for (size_t r = 0; r < d; ++r) forms.g.push_back(determinant(forms.w_matrix(r)));
    return forms;
}

PolyMatrix DPlusOneForms::l_matrix(size_t p) const {
    PolyMatrix l(ring, d, d);
    size_t cj = 0;
    for (size_t col = 0; col <= d; ++col) {
        if (col == p) continue;
        for (size_t r = 0; r < d; ++r) l.set(r, cj, b[r][col][p]);
        ++cj;
    }
    return l;
}

PolyMatrix DPlusOneForms::w_matrix(size_t r) const {
    PolyMatrix w(ring, d + 1, d + 1);
    for (size_t p = 0; p <= d; ++p)
        for (size_t q = 0; q <= d; ++q) w.set(p, q, b[r][p][q]);
    return w;
}

IdentityReport verify_structj(const Field* field, size_t d) {
    auto forms = dplus1_forms(field, d);
    RingPtr ring = forms.ring;
    IdentityReport rep(ring);
    const Poly& x11 = forms.x.at(0, 0);

    // x_11 f_1 = sum_{j>=2} (-1)^j e_j P_j with e_j the minor of L_1 omitting
    // row 1 and the column labelled j
    PolyMatrix l1 = forms.l_matrix(0);
    std::vector<size_t> l1_rows;
    for (size_t r = 1; r < d; ++r) l1_rows.push_back(r);
    Poly fsum = Poly::zero(ring);
    for (size_t j = 1; j <= d; ++j) { // column label j+1 sits at position j-1 in L_1
        std::vector<size_t> keep;
        for (size_t cpos = 0; cpos < d; ++cpos)
            if (cpos != j - 1) keep.push_back(cpos);
        Poly ej = determinant(l1.submatrix(l1_rows, keep));
        Poly part = ej * forms.p[j];
        if ((j + 1) & 1)
            fsum -= part;
        else
            fsum += part;
    }
    Poly fdiff = fsum - x11 * forms.f[0];

    // x_11 g_1 = sum_j (-1)^{1+j} w_j P_j with w_j the minor of W_1 omitting
    // row 1 and column j
    PolyMatrix w1 = forms.w_matrix(0);
    std::vector<size_t> w1_rows;
    for (size_t r = 1; r <= d; ++r) w1_rows.push_back(r);
    Poly gsum = Poly::zero(ring);
    for (size_t j = 0; j <= d; ++j) {
        std::vector<size_t> keep;
        for (size_t cpos = 0; cpos <= d; ++cpos)
            if (cpos != j) keep.push_back(cpos);
        Poly wj = determinant(w1.submatrix(w1_rows, keep));
        Poly part = wj * forms.p[j];
        if (j & 1) // (-1)^{1+j} with j 1-based = (-1)^j with j 0-based
            gsum -= part;
        else
            gsum += part;
    }
    Poly gdiff = gsum - x11 * forms.g[0];

    rep.lhs = fsum;
    rep.difference = fdiff + gdiff; // both must vanish; report their sum if not
    rep.pass = fdiff.is_zero() && gdiff.is_zero();
    rep.detail = std::string("cofactor identities for x_11*f_1 and x_11*g_1: ") +
                 (rep.pass ? "hold" : "fail");
    return rep;
}

IdealBasis j_ideal(const Field* field, size_t d) {
    auto forms = dplus1_forms(field, d);
    IdealBasis out;
    out.ring = forms.ring;
    out.m = d;
    out.n = d + 1;
    out.label = "J_" + std::to_string(d);
    for (size_t j = 0; j <= d; ++j) {
        out.gens.push_back(forms.p[j]);
        out.labels.push_back("P" + std::to_string(j + 1));
    }
    for (size_t j = 0; j <= d; ++j) {
        out.gens.push_back(forms.f[j]);
        out.labels.push_back("f" + std::to_string(j + 1));
    }
    for (size_t r = 0; r < d; ++r) {
        out.gens.push_back(forms.g[r]);
        out.labels.push_back("g" + std::to_string(r + 1));
    }
    for (const auto& g : out.gens)
        if (g.is_zero()) throw Error("J_d generator unexpectedly zero");
    return out;
}

TypeSpec TypeSpec::of(std::vector<unsigned> parts) {
    TypeSpec spec{std::move(parts)};
    for (size_t i = 1; i < spec.v.size(); ++i)
        if (spec.v[i] > spec.v[i - 1]) throw ArgError("type must be weakly decreasing");
    for (unsigned p : spec.v)
        if (p == 0) throw ArgError("type parts must be positive");
    while (!spec.v.empty() && spec.v.back() == 1) spec.v.pop_back();
    return spec;
}

TypeSpec TypeSpec::parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::string cur;
    std::string body = text;
    if (!body.empty() && body.front() == '(' && body.back() == ')')
        body = body.substr(1, body.size() - 2);
    std::istringstream is(body);
    while (std::getline(is, cur, ',')) {
        try {
            parts.push_back((unsigned)std::stoul(cur));
        } catch (const std::exception&) {
            throw ArgError("bad type literal: " + text);
        }
    }
    if (parts.empty()) throw ArgError("empty type literal");
    return of(std::move(parts));
}

unsigned TypeSpec::s() const {
    unsigned total = 0;
    for (unsigned p : v) total += p;
    return total;
}

std::string TypeSpec::str() const {
    if (v.empty()) return "(1)";
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

TypePlacement canonical_placement(size_t d, size_t m, size_t n, const TypeSpec& spec) {
    if (spec.dprime() > d) throw ArgError("type: d'(v) exceeds d");
    size_t e = d - spec.dprime();
    if (e > m + n) throw ArgError("type: e too large");
    size_t total = m + n - e;
    size_t s = spec.s();
    if (s > std::min(m, n)) throw ArgError("type: s(v) exceeds matrix size");
    if (total < 2 * s) throw ArgError("type does not fit this matrix");
    size_t mp = std::min(m, total - s);
    size_t np = total - mp;
    if (mp < s || np < s || np > n) throw ArgError("type does not fit this matrix");
    TypePlacement pl;
    for (size_t i = 0; i < mp; ++i) pl.mrows.push_back(i);
    for (size_t j = 0; j < np; ++j) pl.mcols.push_back(j);
    size_t off = 0;
    for (unsigned part : spec.v) {
        std::vector<size_t> br, bc;
        for (size_t k = 0; k < part; ++k) {
            br.push_back(off + k);
            bc.push_back(off + k);
        }
        pl.brows.push_back(br);
        pl.bcols.push_back(bc);
        off += part;
    }
    return pl;
}

IdealBasis type_v_prime(const Field* f, size_t d, size_t m, size_t n, const TypeSpec& spec,
                        const TypePlacement& placement) {
    if (spec.dprime() > d) throw ArgError("type: d'(v) exceeds d");
    if (spec.s() > std::min(m, n)) throw ArgError("type: s(v) exceeds matrix size");
    size_t e = d - spec.dprime();
    if (placement.mrows.size() + placement.mcols.size() + e != m + n)
        throw ArgError("type placement: m' + n' + e must equal m + n");
    if (placement.brows.size() != spec.v.size() || placement.bcols.size() != spec.v.size())
        throw ArgError("type placement: one block per part of v");

    auto check_subset = [](const std::vector<size_t>& sub, const std::vector<size_t>& sup) {
        for (size_t x : sub)
            if (std::find(sup.begin(), sup.end(), x) == sup.end()) return false;
        return true;
    };
    std::set<size_t> used_rows, used_cols;
    for (size_t i = 0; i < spec.v.size(); ++i) {
        if (placement.brows[i].size() != spec.v[i] || placement.bcols[i].size() != spec.v[i])
            throw ArgError("type placement: block size must match v");
        if (!check_subset(placement.brows[i], placement.mrows) ||
            !check_subset(placement.bcols[i], placement.mcols))
            throw ArgError("type placement: blocks must lie inside M'");
        for (size_t r : placement.brows[i])
            if (!used_rows.insert(r).second) throw ArgError("type placement: blocks share a row");
        for (size_t c : placement.bcols[i])
            if (!used_cols.insert(c).second) throw ArgError("type placement: blocks share a column");
    }

    PolyMatrix x = generic_matrix(f, m, n);
    IdealBasis out;
    out.ring = x.ring();
    out.m = m;
    out.n = n;
    out.label = "type " + spec.str();
    for (size_t i = 0; i < spec.v.size(); ++i) {
        out.gens.push_back(permanent(x.submatrix(placement.brows[i], placement.bcols[i])));
        out.labels.push_back("a" + std::to_string(i + 1));
    }
    for (size_t r : placement.mrows)
        for (size_t c : placement.mcols) {
            if (used_rows.count(r) && used_cols.count(c)) {
                // entries in a block row AND block column of the same block are used
                bool inside = false;
                for (size_t i = 0; i < spec.v.size(); ++i)
                    if (std::find(placement.brows[i].begin(), placement.brows[i].end(), r) !=
                            placement.brows[i].end() &&
                        std::find(placement.bcols[i].begin(), placement.bcols[i].end(), c) !=
                            placement.bcols[i].end())
                        inside = true;
                if (inside) continue;
            }
            out.gens.push_back(x.at(r, c));
            out.labels.push_back("x_" + std::to_string(r + 1) + "_" + std::to_string(c + 1));
        }
    return out;
}

} // namespace permlab
