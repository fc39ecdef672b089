#include "sea/invariants.hpp"

#include <map>
#include "json.hpp"

#include "sea/error.hpp"
#include "sea/transvectant.hpp"
#include "sea/univariate.hpp"

namespace sea {

namespace {

// Transvectant with the order bookkeeping asserted on every call.
BinaryForm tv(const BinaryForm& f, const BinaryForm& g, int r, int expected_order, std::string_view name) {
    BinaryForm out = transvect(f, g, r);
    if (out.degree() != expected_order) {
        throw InternalError(std::string(name) + " has order " + std::to_string(out.degree()) + ", expected " +
                            std::to_string(expected_order));
    }
    return out;
}

Scalar tv0(const BinaryForm& f, const BinaryForm& g, int r, std::string_view name) {
    return tv(f, g, r, 0, name)[0];
}

void require_degree(const BinaryForm& f, int d, std::string_view system) {
    if (f.degree() != d) {
        throw PreconditionError(std::string(system) + " invariants need a degree " + std::to_string(d) +
                                " form, got degree " + std::to_string(f.degree()));
    }
}

Scalar integer_prefactor(std::initializer_list<std::pair<long, unsigned>> factors) {
    Integer r = 1;
    for (auto [p, e] : factors) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), e);
        r *= pe;
    }
    return Scalar(r);
}

}  // namespace

std::string_view to_string(SystemKind kind) {
    switch (kind) {
        case SystemKind::sextic: return "sextic";
        case SystemKind::octavic: return "octavic";
        case SystemKind::decimic: return "decimic";
        case SystemKind::general: return "general";
        case SystemKind::genus10: return "genus10";
    }
    return "?";
}

SystemKind system_kind_from_string(std::string_view text) {
    for (SystemKind k : {SystemKind::sextic, SystemKind::octavic, SystemKind::decimic, SystemKind::general,
                         SystemKind::genus10}) {
        if (to_string(k) == text) return k;
    }
    throw PreconditionError("unknown invariant system \"" + std::string(text) + "\"");
}

std::string_view to_string(IsoOutcome outcome) {
    switch (outcome) {
        case IsoOutcome::isomorphic: return "isomorphic";
        case IsoOutcome::not_isomorphic: return "not_isomorphic";
        case IsoOutcome::inconclusive: return "inconclusive";
    }
    return "?";
}

void InvariantVector::add(std::string name, int degree, std::string source, std::optional<Scalar> value) {
    if (find(name) != nullptr) throw InternalError("duplicate invariant name " + name);
    entries_.push_back({std::move(name), degree, std::move(source), std::move(value)});
}

const InvariantEntry* InvariantVector::find(std::string_view name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool InvariantVector::available(std::string_view name) const {
    const InvariantEntry* e = find(name);
    return e != nullptr && e->value.has_value();
}

const Scalar& InvariantVector::at(std::string_view name) const {
    const InvariantEntry* e = find(name);
    if (e == nullptr) throw PreconditionError("no invariant named " + std::string(name));
    if (!e->value) throw PreconditionError("invariant " + std::string(name) + " is unavailable for this degree");
    return *e->value;
}

void AbsoluteInvariants::add_ratio(std::string name, const std::optional<Scalar>& num,
                                   const std::optional<Scalar>& den) {
    AbsoluteEntry e{std::move(name), RatioState::unavailable, std::nullopt};
    if (num && den) {
        if (den->is_zero()) {
            e.state = RatioState::undefined;
        } else {
            e.state = RatioState::defined;
            e.value = *num / *den;
        }
    }
    entries_.push_back(std::move(e));
}

const AbsoluteEntry* AbsoluteInvariants::find(std::string_view name) const {
    for (const auto& e : entries_) {
        if (e.name == name) return &e;
    }
    return nullptr;
}

bool AbsoluteInvariants::defined(std::string_view name) const {
    const AbsoluteEntry* e = find(name);
    return e != nullptr && e->state == RatioState::defined;
}

const Scalar& AbsoluteInvariants::at(std::string_view name) const {
    const AbsoluteEntry* e = find(name);
    if (e == nullptr || e->state != RatioState::defined) {
        throw PreconditionError("absolute invariant " + std::string(name) + " is not defined");
    }
    return *e->value;
}

const BinaryForm& CovariantSet::at(std::string_view name) const {
    for (const auto& [n, f] : forms) {
        if (n == name) return f;
    }
    throw PreconditionError("no covariant named " + std::string(name));
}

// ---------------------------------------------------------------- sextics

InvariantSystem sextic_invariants(const BinaryForm& f) {
    require_degree(f, 6, "sextic");
    BinaryForm H = tv(f, f, 2, 8, "H");
    BinaryForm i = tv(f, f, 4, 4, "i");
    BinaryForm l = tv(i, f, 4, 2, "l");

    InvariantSystem sys{InvariantVector(SystemKind::sextic), {}};
    auto& inv = sys.invariants;
    inv.add("J2", 2, "(f,f)^6", tv0(f, f, 6, "J2"));
    inv.add("J4", 4, "(i,i)^4", tv0(i, i, 4, "J4"));
    inv.add("J6", 6, "(l,l)^2", tv0(l, l, 2, "J6"));
    inv.add("J10", 10, "(f,l^3)^6", tv0(f, form_pow(l, 3), 6, "J10"));
    sys.covariants.forms = {{"H", std::move(H)}, {"i", std::move(i)}, {"l", std::move(l)}};
    return sys;
}

AbsoluteInvariants sextic_absolute(const InvariantVector& inv) {
    if (inv.kind() != SystemKind::sextic) throw PreconditionError("expected a sextic invariant vector");
    const Scalar& j2 = inv.at("J2");
    const Scalar& j10 = inv.at("J10");
    AbsoluteInvariants abs(SystemKind::sextic);
    abs.add_ratio("t1", j2.pow(5), j10);
    abs.add_ratio("t2", j2.pow(3) * inv.at("J4"), j10);
    abs.add_ratio("t3", j2.pow(2) * inv.at("J6"), j10);
    return abs;
}

AbsoluteInvariants sextic_absolute(const BinaryForm& f) { return sextic_absolute(sextic_invariants(f).invariants); }

// ---------------------------------------------------------------- octavics

InvariantSystem octavic_invariants(const BinaryForm& f) {
    require_degree(f, 8, "octavic");
    BinaryForm g = tv(f, f, 4, 8, "g");
    BinaryForm k = tv(f, f, 6, 4, "k");
    BinaryForm h = tv(k, k, 2, 4, "h");
    BinaryForm m = tv(f, k, 4, 4, "m");
    BinaryForm n = tv(f, h, 4, 4, "n");
    BinaryForm p = tv(g, k, 4, 4, "p");
    BinaryForm q = tv(g, h, 4, 4, "q");

    InvariantSystem sys{InvariantVector(SystemKind::octavic), {}};
    auto& inv = sys.invariants;
    const Scalar third = Scalar(Rational(1, 3));
    inv.add("J2", 2, "2^2*5*7*(f,f)^8", integer_prefactor({{2, 2}, {5, 1}, {7, 1}}) * tv0(f, f, 8, "J2"));
    inv.add("J3", 3, "1/3*2^4*5^2*7^3*(f,g)^8",
            third * integer_prefactor({{2, 4}, {5, 2}, {7, 3}}) * tv0(f, g, 8, "J3"));
    inv.add("J4", 4, "2^9*3*7^4*(k,k)^4", integer_prefactor({{2, 9}, {3, 1}, {7, 4}}) * tv0(k, k, 4, "J4"));
    inv.add("J5", 5, "2^9*5*7^5*(m,k)^4", integer_prefactor({{2, 9}, {5, 1}, {7, 5}}) * tv0(m, k, 4, "J5"));
    inv.add("J6", 6, "2^14*3^2*7^6*(k,h)^4", integer_prefactor({{2, 14}, {3, 2}, {7, 6}}) * tv0(k, h, 4, "J6"));
    inv.add("J7", 7, "2^14*3*5*7^7*(m,h)^4",
            integer_prefactor({{2, 14}, {3, 1}, {5, 1}, {7, 7}}) * tv0(m, h, 4, "J7"));
    inv.add("J8", 8, "2^17*3*5^2*7^9*(p,h)^4",
            integer_prefactor({{2, 17}, {3, 1}, {5, 2}, {7, 9}}) * tv0(p, h, 4, "J8"));
    inv.add("J9", 9, "2^19*3^2*5*7^9*(n,h)^4",
            integer_prefactor({{2, 19}, {3, 2}, {5, 1}, {7, 9}}) * tv0(n, h, 4, "J9"));
    inv.add("J10", 10, "2^22*3^2*5^2*7^11*(q,h)^4",
            integer_prefactor({{2, 22}, {3, 2}, {5, 2}, {7, 11}}) * tv0(q, h, 4, "J10"));
    sys.covariants.forms = {{"g", std::move(g)}, {"k", std::move(k)}, {"h", std::move(h)}, {"m", std::move(m)},
                            {"n", std::move(n)}, {"p", std::move(p)}, {"q", std::move(q)}};
    return sys;
}

AbsoluteInvariants octavic_absolute(const InvariantVector& inv) {
    if (inv.kind() != SystemKind::octavic) throw PreconditionError("expected an octavic invariant vector");
    const Scalar& j2 = inv.at("J2");
    const Scalar& j3 = inv.at("J3");
    const Scalar& j4 = inv.at("J4");
    const Scalar& j5 = inv.at("J5");
    AbsoluteInvariants abs(SystemKind::octavic);
    abs.add_ratio("t1", j3.pow(2), j2.pow(3));
    abs.add_ratio("t2", j4, j2.pow(2));
    abs.add_ratio("t3", j5, j2 * j3);
    abs.add_ratio("t4", inv.at("J6"), j2 * j4);
    abs.add_ratio("t5", inv.at("J7"), j2 * j5);
    abs.add_ratio("t6", inv.at("J8"), j2.pow(4));
    return abs;
}

AbsoluteInvariants octavic_absolute(const BinaryForm& f) { return octavic_absolute(octavic_invariants(f).invariants); }

// ---------------------------------------------------------------- decimics

InvariantSystem decimic_invariants(const BinaryForm& f) {
    require_degree(f, 10, "decimic");
    BinaryForm k = tv(f, f, 8, 4, "k");
    BinaryForm q = tv(f, f, 6, 8, "q");
    BinaryForm m = tv(f, k, 4, 6, "m");
    BinaryForm r = tv(f, q, 8, 2, "r");
    BinaryForm kq = tv(q, q, 6, 4, "k_q");
    BinaryForm km = tv(m, m, 4, 4, "k_m");
    BinaryForm mq = tv(q, kq, 4, 4, "m_q");

    const BinaryForm kk = form_mul(k, k);
    const BinaryForm k2 = tv(k, k, 2, 4, "(k,k)^2");
    const BinaryForm m2 = tv(m, m, 2, 8, "(m,m)^2");

    InvariantSystem sys{InvariantVector(SystemKind::decimic), {}};
    auto& inv = sys.invariants;
    inv.add("J2", 2, "(f,f)^10", tv0(f, f, 10, "J2"));
    inv.add("J4", 4, "(k,k)^4", tv0(k, k, 4, "J4"));
    inv.add("A6", 6, "(m,m)^6", tv0(m, m, 6, "A6"));
    inv.add("C6", 6, "(r,r)^2", tv0(r, r, 2, "C6"));
    inv.add("J8", 8, "(k,k_m)^4", tv0(k, km, 4, "J8"));
    inv.add("J9", 9, "((k,m)^1,k*k)^8", tv0(tv(k, m, 1, 8, "(k,m)^1"), kk, 8, "J9"));
    inv.add("J10", 10, "((m,m)^2,k*k)^8", tv0(m2, kk, 8, "J10"));
    inv.add("J14", 14, "((k_q,k_q)^2,m_q)^4", tv0(tv(kq, kq, 2, 4, "(k_q,k_q)^2"), mq, 4, "J14"));
    inv.add("A14", 14, "((k,k)^2*(k,k)^2,(m,m)^2)^8", tv0(form_mul(k2, k2), m2, 8, "A14"));
    sys.covariants.forms = {{"k", std::move(k)},    {"q", std::move(q)},   {"m", std::move(m)},
                            {"r", std::move(r)},    {"k_q", std::move(kq)}, {"k_m", std::move(km)},
                            {"m_q", std::move(mq)}};
    return sys;
}

std::vector<std::pair<std::string, Scalar>> decimic_parameters(const InvariantVector& inv) {
    if (inv.kind() != SystemKind::decimic) throw PreconditionError("expected a decimic invariant vector");
    std::vector<std::pair<std::string, Scalar>> out;
    for (const char* name : {"J2", "J4", "A6", "C6", "J8", "J9", "J10"}) out.emplace_back(name, inv.at(name));
    out.emplace_back("J14+A14", inv.at("J14") + inv.at("A14"));
    return out;
}

// ---------------------------------------------------------------- general even degree

namespace {

// Lazily computed J_{4j} = (F, F)^(d - 2j).
class GeneralCovariants {
public:
    explicit GeneralCovariants(const BinaryForm& f) : f_(f), d_(f.degree()) {}

    int degree() const { return d_; }
    int genus() const { return (d_ - 2) / 2; }
    const BinaryForm& form() const { return f_; }

    bool has_j(int order) const { return order % 4 == 0 && order >= 4 && order / 4 <= genus(); }

    const BinaryForm& j(int order) {
        if (!has_j(order)) throw InternalError("J" + std::to_string(order) + " does not exist in degree " +
                                               std::to_string(d_));
        auto it = cache_.find(order);
        if (it == cache_.end()) {
            it = cache_.emplace(order, tv(f_, f_, d_ - order / 2, order, "J" + std::to_string(order))).first;
        }
        return it->second;
    }

    const std::map<int, BinaryForm>& computed() const { return cache_; }

private:
    const BinaryForm& f_;
    int d_;
    std::map<int, BinaryForm> cache_;
};

}  // namespace

InvariantSystem general_invariants(const BinaryForm& f) {
    const int d = f.degree();
    if (d % 2 != 0 || d < 6) {
        throw PreconditionError("general invariants need an even degree >= 6, got " + std::to_string(d));
    }
    GeneralCovariants c(f);
    InvariantSystem sys{InvariantVector(SystemKind::general), {}};
    auto& inv = sys.invariants;

    inv.add("I2", 2, "(F,F)^d", tv0(f, f, d, "I2"));

    std::optional<Scalar> i3;
    if (c.has_j(d)) i3 = tv0(f, c.j(d), d, "I3");
    inv.add("I3", 3, "(F,J_d)^d", i3);

    inv.add("I4", 4, "(J4,J4)^4", tv0(c.j(4), c.j(4), 4, "I4"));
    inv.add("I4p", 4, "(J8,J8)^8", tv0(c.j(8), c.j(8), 8, "I4p"));

    const BinaryForm fj4 = tv(f, c.j(4), 4, d - 4, "(F,J4)^4");
    inv.add("I6", 6, "((F,J4)^4,(F,J4)^4)^(d-4)", tv0(fj4, fj4, d - 4, "I6"));

    std::optional<BinaryForm> fj8;
    std::optional<Scalar> i6p;
    if (d >= 8) {
        fj8 = tv(f, c.j(8), 8, d - 8, "(F,J8)^8");
        i6p = tv0(*fj8, *fj8, d - 8, "I6p");
    }
    inv.add("I6p", 6, "((F,J8)^8,(F,J8)^8)^(d-8)", i6p);

    std::optional<Scalar> i6s;
    if (d >= 12) {
        const BinaryForm fj12 = tv(f, c.j(12), 12, d - 12, "(F,J12)^12");
        i6s = tv0(fj12, fj12, d - 12, "I6star");
    }
    inv.add("I6star", 6, "((F,J12)^12,(F,J12)^12)^(d-12)", i6s);

    std::optional<BinaryForm> m;
    std::optional<Scalar> i12;
    if (d >= 10) {
        m = tv(fj4, *fj8, d - 10, 8, "M");
        i12 = tv0(*m, *m, 8, "I12");
    }
    inv.add("I12", 12, "(M,M)^8", i12);

    for (const auto& [order, form] : c.computed()) sys.covariants.forms.emplace_back("J" + std::to_string(order), form);
    if (m) sys.covariants.forms.emplace_back("M", *m);
    return sys;
}

AbsoluteInvariants general_absolute(const InvariantVector& inv) {
    if (inv.kind() != SystemKind::general) throw PreconditionError("expected a general invariant vector");
    auto get = [&](std::string_view n) -> std::optional<Scalar> {
        const InvariantEntry* e = inv.find(n);
        return e != nullptr ? e->value : std::nullopt;
    };
    auto pw = [](const std::optional<Scalar>& s, unsigned k) -> std::optional<Scalar> {
        if (!s) return std::nullopt;
        return s->pow(k);
    };
    const auto i2 = get("I2"), i3 = get("I3"), i4p = get("I4p"), i6 = get("I6"), i6p = get("I6p"),
               i6s = get("I6star"), i12 = get("I12");
    AbsoluteInvariants abs(SystemKind::general);
    abs.add_ratio("i1", i4p, pw(i2, 2));
    abs.add_ratio("i2", pw(i3, 2), pw(i2, 3));
    abs.add_ratio("i3", i6s, pw(i3, 2));
    abs.add_ratio("j1", i6p, pw(i3, 2));
    abs.add_ratio("j2", i6, pw(i3, 2));
    abs.add_ratio("s1", pw(i6, 2), i12);
    abs.add_ratio("s2", pw(i6p, 2), i12);
    abs.add_ratio("v1", i6, i6s);
    abs.add_ratio("v2", pw(i4p, 3), pw(i3, 4));
    abs.add_ratio("v3", i6, i6p);
    abs.add_ratio("v4", pw(i6s, 2), pw(i3, 3));
    return abs;
}

AbsoluteInvariants general_absolute(const BinaryForm& f) { return general_absolute(general_invariants(f).invariants); }

Genus10Special genus10_special(const BinaryForm& f) {
    require_degree(f, 22, "genus-10 special");
    GeneralCovariants c(f);
    const BinaryForm fj4 = tv(f, c.j(4), 4, 18, "(F,J4)^4");
    const BinaryForm fj8 = tv(f, c.j(8), 8, 14, "(F,J8)^8");
    const BinaryForm m = tv(fj4, fj8, 12, 8, "M");
    const Scalar i12 = tv0(m, m, 8, "I12");
    if (!i12.is_zero()) {
        throw PreconditionError("genus-10 special invariants are defined only when I12 = 0; here I12 = " + i12.str());
    }
    const BinaryForm& j12 = c.j(12);
    const BinaryForm& j16 = c.j(16);
    const BinaryForm fj16 = tv(f, j16, 16, 6, "(F,J16)^16");
    const Scalar i6s = tv0(fj16, fj16, 6, "I6star_g10");
    BinaryForm s = tv(j12, j16, 12, 4, "S");
    const BinaryForm js = tv(j16, s, 4, 12, "(J16,S)^4");
    const Scalar i12s = tv0(js, js, 12, "I12star");

    Genus10Special out;
    out.invariants.add("I6star_g10", 6, "((F,J16)^16,(F,J16)^16)^(d-16)", i6s);
    out.invariants.add("I12star", 12, "((J16,S)^4,(J16,S)^4)^12", i12s);
    out.s = std::move(s);
    out.absolute.add_ratio("v5", i6s, i12s);
    return out;
}

// ---------------------------------------------------------------- isomorphism

namespace {

bool same_defined(const AbsoluteInvariants& a, const AbsoluteInvariants& b) {
    for (const auto& e : a.entries()) {
        if (e.state != RatioState::defined || !b.defined(e.name) || b.at(e.name) != *e.value) return false;
    }
    return true;
}

}  // namespace

IsoResult genus2_isomorphic(const BinaryForm& f1, const BinaryForm& f2) {
    require_degree(f1, 6, "genus-2");
    require_degree(f2, 6, "genus-2");
    const BinaryForm* forms[] = {&f1, &f2};
    std::vector<InvariantVector> vecs;
    for (int i = 0; i < 2; ++i) {
        const std::string which = i == 0 ? "first" : "second";
        if (!is_squarefree(*forms[i])) return {IsoOutcome::inconclusive, which + " sextic is not squarefree"};
        vecs.push_back(sextic_invariants(*forms[i]).invariants);
        if (vecs.back().at("J10").is_zero()) return {IsoOutcome::inconclusive, which + " sextic has J10 = 0"};
    }
    const bool same = same_defined(sextic_absolute(vecs[0]), sextic_absolute(vecs[1]));
    return {same ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic, {}};
}

IsoResult genus3_isomorphic(const BinaryForm& f1, const BinaryForm& f2) {
    require_degree(f1, 8, "genus-3");
    require_degree(f2, 8, "genus-3");
    const BinaryForm* forms[] = {&f1, &f2};
    std::vector<InvariantVector> vecs;
    for (int i = 0; i < 2; ++i) {
        const std::string which = i == 0 ? "first" : "second";
        if (!is_squarefree(*forms[i])) return {IsoOutcome::inconclusive, which + " octavic is not squarefree"};
        vecs.push_back(octavic_invariants(*forms[i]).invariants);
        for (const char* name : {"J2", "J3", "J4", "J5"}) {
            if (vecs.back().at(name).is_zero()) {
                return {IsoOutcome::inconclusive, which + " octavic has " + name + " = 0"};
            }
        }
    }
    const bool same = same_defined(octavic_absolute(vecs[0]), octavic_absolute(vecs[1]));
    return {same ? IsoOutcome::isomorphic : IsoOutcome::not_isomorphic, {}};
}

std::string to_json(const InvariantVector& inv, const AbsoluteInvariants& abs) {
    nlohmann::ordered_json doc;
    doc["kind"] = std::string(to_string(inv.kind()));
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    nlohmann::ordered_json avail = nlohmann::ordered_json::object();
    for (const auto& e : inv.entries()) {
        avail[e.name] = e.value.has_value();
        if (e.value) values[e.name] = e.value->str();
    }
    nlohmann::ordered_json absolute = nlohmann::ordered_json::object();
    for (const auto& e : abs.entries()) {
        absolute[e.name] = e.state == RatioState::defined ? e.value->str() : std::string("undefined");
        avail[e.name] = e.state != RatioState::unavailable;
    }
    doc["invariants"] = std::move(values);
    doc["absolute"] = std::move(absolute);
    doc["availability"] = std::move(avail);
    return doc.dump();
}

}  // namespace sea
