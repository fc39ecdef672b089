#include "sea/curves.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "json.hpp"
#include "sea/error.hpp"

namespace sea {

SuperellipticCurve make_curve(int n, UnivariatePoly f) {
    if (n < 2) throw PreconditionError("level n must be >= 2, got " + std::to_string(n));
    if (f.degree() < 2) throw PreconditionError("f must have degree >= 2, got " + std::to_string(f.degree()));
    if (!is_squarefree(f)) throw PreconditionError("f = " + f.str() + " has a repeated root (discriminant 0)");
    const int g = genus_formula(n, f.degree());
    return SuperellipticCurve(n, std::move(f), g);
}

std::string SuperellipticCurve::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["f"] = f_.str();
    j["genus"] = genus_;
    return j.dump();
}

int genus_formula(int n, int d) {
    if (n < 2 || d < 2) throw PreconditionError("genus formula needs n, d >= 2");
    return (n * (d - 1) - d - std::gcd(n, d)) / 2 + 1;
}

long hurwitz_bound(int g) {
    if (g < 2) throw PreconditionError("Hurwitz bound needs genus >= 2, got " + std::to_string(g));
    return 84L * (g - 1);
}

Signature::Signature(std::vector<std::pair<int, int>> indices, bool complete) : complete_(complete) {
    std::map<int, int> merged;
    for (auto [e, mult] : indices) {
        if (e < 2) throw PreconditionError("branch index must be >= 2, got " + std::to_string(e));
        if (mult < 1) throw PreconditionError("branch multiplicity must be >= 1, got " + std::to_string(mult));
        merged[e] += mult;
    }
    indices_.assign(merged.begin(), merged.end());
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("malformed " + std::string(what) + " \"" + std::string(text) + "\"");
    }
    return v;
}

}  // namespace

Signature Signature::parse(std::string_view text) {
    std::vector<std::pair<int, int>> out;
    std::string compact;
    for (char c : text) {
        if (c != ' ' && c != '(' && c != ')') compact += c;
    }
    std::string_view rest = compact;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto caret = item.find('^');
        if (caret == std::string_view::npos) {
            out.emplace_back(parse_int(item, "branch index"), 1);
        } else {
            out.emplace_back(parse_int(item.substr(0, caret), "branch index"),
                             parse_int(item.substr(caret + 1), "multiplicity"));
        }
    }
    if (out.empty()) throw ParseError("empty signature");
    return Signature(std::move(out));
}

int Signature::size() const {
    int s = 0;
    for (const auto& p : indices_) s += p.second;
    return s;
}

Signature Signature::with_index(int e) const {
    auto idx = indices_;
    idx.emplace_back(e, 1);
    return Signature(std::move(idx), complete_);
}

Signature Signature::marked_complete() const {
    Signature s = *this;
    s.complete_ = true;
    return s;
}

std::string Signature::str() const {
    std::string out;
    for (const auto& [e, mult] : indices_) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
        if (mult > 1) out += '^' + std::to_string(mult);
    }
    return out;
}

std::string Signature::to_json() const {
    nlohmann::ordered_json j;
    j["indices"] = indices_;
    j["complete"] = complete_;
    return j.dump();
}

Rational rh_residual(int g, long group_order, const Signature& sig, int quotient_genus) {
    if (group_order < 1) throw PreconditionError("group order must be >= 1");
    Rational sum = 2 * quotient_genus - 2;
    for (const auto& [e, mult] : sig.indices()) {
        if (group_order % e != 0) {
            throw PreconditionError("branch index " + std::to_string(e) + " does not divide |G| = " +
                                    std::to_string(group_order));
        }
        sum += Rational(mult) * (1 - Rational(1, e));
    }
    Rational lhs(2L * (g - 1), group_order);
    lhs.canonicalize();
    Rational out = lhs - sum;
    out.canonicalize();
    return out;
}

std::string_view to_string(CompletionStatus status) {
    switch (status) {
        case CompletionStatus::already_complete: return "already_complete";
        case CompletionStatus::completed: return "completed";
        case CompletionStatus::ambiguous: return "ambiguous";
        case CompletionStatus::failed: return "failed";
    }
    return "?";
}

Completion complete_signature(int g, long group_order, const Signature& printed) {
    if (rh_residual(g, group_order, printed) == 0) {
        return {printed.marked_complete(), CompletionStatus::already_complete, {}};
    }
    Completion out{printed, CompletionStatus::failed, {}};
    for (long e = 2; e <= group_order; ++e) {
        if (group_order % e != 0) continue;
        const Signature trial = printed.with_index(static_cast<int>(e));
        if (rh_residual(g, group_order, trial) == 0) out.candidates.push_back(static_cast<int>(e));
    }
    if (out.candidates.size() == 1) {
        out.signature = printed.with_index(out.candidates.front()).marked_complete();
        out.status = CompletionStatus::completed;
    } else if (out.candidates.size() > 1) {
        out.status = CompletionStatus::ambiguous;
    }
    return out;
}

std::string_view to_string(ReducedKind kind) {
    switch (kind) {
        case ReducedKind::Cm: return "Cm";
        case ReducedKind::D2m: return "D2m";
        case ReducedKind::A4: return "A4";
        case ReducedKind::S4: return "S4";
        case ReducedKind::A5: return "A5";
    }
    return "?";
}

ReducedKind reduced_kind_from_string(std::string_view text) {
    for (ReducedKind k : {ReducedKind::Cm, ReducedKind::D2m, ReducedKind::A4, ReducedKind::S4, ReducedKind::A5}) {
        if (to_string(k) == text) return k;
    }
    throw ParseError("unknown reduced group kind \"" + std::string(text) + "\"");
}

long ReducedGroup::order() const {
    switch (kind) {
        case ReducedKind::Cm: return m;
        case ReducedKind::D2m: return 2L * m;
        case ReducedKind::A4: return 12;
        case ReducedKind::S4: return 24;
        case ReducedKind::A5: return 60;
    }
    throw InternalError("bad reduced group kind");
}

std::string ReducedGroup::str() const {
    switch (kind) {
        case ReducedKind::Cm: return "C" + std::to_string(m);
        case ReducedKind::D2m: return "D" + std::to_string(2 * m);
        default: return std::string(to_string(kind));
    }
}

long full_group_order(int n, const ReducedGroup& reduced) {
    if ((reduced.kind == ReducedKind::Cm || reduced.kind == ReducedKind::D2m) && reduced.m < 1) {
        throw PreconditionError("reduced group " + std::string(to_string(reduced.kind)) + " needs m >= 1");
    }
    return n * reduced.order();
}

}  // namespace sea
