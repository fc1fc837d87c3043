#include "sphnn/logic.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sphnn {

Term plain(std::string name, bool atomic) {
    if (name.empty()) throw std::invalid_argument("term name must be nonempty");
    return Term{std::move(name), false, atomic};
}

Term comp(Term t) {
    t.complemented = !t.complemented;
    return t;
}

const char* to_string(SpatialRel r) {
    switch (r) {
        case SpatialRel::P: return "P";
        case SpatialRel::NotP: return "NotP";
        case SpatialRel::D: return "D";
        case SpatialRel::NotD: return "NotD";
    }
    return "?";
}

const char* to_string(CorpusFamily f) {
    return f == CorpusFamily::Extended16 ? "extended16" : "classic256";
}

SpatialConstraint make_constraint(SpatialRel rel, Term lhs, Term rhs) {
    if (lhs.name == rhs.name)
        throw std::invalid_argument("self-constraint on term '" + lhs.name + "'");
    return SpatialConstraint{rel, std::move(lhs), std::move(rhs)};
}

static std::string term_text(const Term& t) {
    return t.complemented ? "c_" + t.name : t.name;
}

std::string to_text(const Statement& s) {
    std::string pred;
    if (s.predicate.size() == 2)
        pred = term_text(s.predicate[0]) + "_or_" + term_text(s.predicate[1]);
    else
        pred = term_text(s.predicate.at(0));
    switch (s.quant) {
        case Quantifier::All: return "all " + term_text(s.subject) + " are " + pred;
        case Quantifier::Some: return "some " + term_text(s.subject) + " are " + pred;
        case Quantifier::No: return "no " + term_text(s.subject) + " are " + pred;
        case Quantifier::SomeNot: return "some " + term_text(s.subject) + " are not " + pred;
    }
    return "";
}

std::string to_text(const SpatialConstraint& c) {
    return std::string(to_string(c.rel)) + "(" + term_text(c.lhs) + "," + term_text(c.rhs) + ")";
}

ConstraintFormula translate_statement(const Statement& s) {
    if (s.predicate.empty() || s.predicate.size() > 2)
        throw std::invalid_argument("statement predicate must have one or two terms");
    if (s.predicate.size() == 2 && s.quant != Quantifier::All)
        throw std::invalid_argument("unsupported form: disjunctive predicate requires 'all'");

    if (s.predicate.size() == 2) {
        return ConstraintFormula{{{make_constraint(SpatialRel::P, s.subject, s.predicate[0])},
                                  {make_constraint(SpatialRel::P, s.subject, s.predicate[1])}}};
    }
    const Term& p = s.predicate[0];
    SpatialConstraint k;
    switch (s.quant) {
        case Quantifier::All:
            k = make_constraint(SpatialRel::P, s.subject, p);
            break;
        case Quantifier::No:
            k = make_constraint(SpatialRel::D, s.subject, p);
            break;
        case Quantifier::Some:
            // an atomic subject is its own witness: membership is two-valued
            k = s.subject.atomic ? make_constraint(SpatialRel::P, s.subject, p)
                                 : make_constraint(SpatialRel::NotD, s.subject, p);
            break;
        case Quantifier::SomeNot:
            k = s.subject.atomic ? make_constraint(SpatialRel::P, s.subject, comp(p))
                                 : make_constraint(SpatialRel::NotP, s.subject, p);
            break;
    }
    return ConstraintFormula{{{k}}};
}

Statement negate_conclusion(const Statement& s) {
    if (s.predicate.size() != 1)
        throw std::invalid_argument("unsupported form: cannot negate a disjunctive conclusion");
    Statement out = s;
    if (s.subject.atomic) {
        out.quant = Quantifier::All;
        switch (s.quant) {
            case Quantifier::All:
            case Quantifier::Some:
                out.predicate[0] = comp(s.predicate[0]);
                break;
            case Quantifier::No:
            case Quantifier::SomeNot:
                break; // No(a,B) and SomeNot(a,B) both mean "a outside B"
        }
        return out;
    }
    switch (s.quant) {
        case Quantifier::All: out.quant = Quantifier::SomeNot; break;
        case Quantifier::SomeNot: out.quant = Quantifier::All; break;
        case Quantifier::No: out.quant = Quantifier::Some; break;
        case Quantifier::Some: out.quant = Quantifier::No; break;
    }
    return out;
}

// Semantic content of a normalized constraint over the base (uncomplemented)
// sets of its two terms.
namespace {

enum class Kind { Cont, Disj, Cover, NotCont, NotDisj, NotCover };

struct Semantic {
    Kind kind;
    Term lhs, rhs; // complement flags stripped
};

Semantic semantic_of(const SpatialConstraint& c) {
    Term l = c.lhs, r = c.rhs;
    const bool lc = l.complemented, rc = r.complemented;
    l.complemented = r.complemented = false;
    switch (c.rel) {
        case SpatialRel::P:
            if (!lc && !rc) return {Kind::Cont, l, r};
            if (!lc && rc) return {Kind::Disj, l, r};
            if (lc && !rc) return {Kind::Cover, l, r};
            return {Kind::Cont, r, l}; // c_L inside c_R  <=>  R inside L
        case SpatialRel::D:
            if (!lc && !rc) return {Kind::Disj, l, r};
            if (!lc && rc) return {Kind::Cont, l, r};
            if (lc && !rc) return {Kind::Cont, r, l};
            return {Kind::Cover, l, r};
        case SpatialRel::NotP:
            if (!lc && !rc) return {Kind::NotCont, l, r};
            if (!lc && rc) return {Kind::NotDisj, l, r};
            if (lc && !rc) return {Kind::NotCover, l, r};
            return {Kind::NotCont, r, l};
        case SpatialRel::NotD:
            if (!lc && !rc) return {Kind::NotDisj, l, r};
            if (!lc && rc) return {Kind::NotCont, l, r};
            if (lc && !rc) return {Kind::NotCont, r, l};
            return {Kind::NotCover, l, r};
    }
    throw std::logic_error("unreachable");
}

// Canonical constraint for a semantic, with plain operands wherever the
// relation vocabulary allows it. Covering conditions keep one complement.
SpatialConstraint canonical_of(const Semantic& s) {
    switch (s.kind) {
        case Kind::Cont: return make_constraint(SpatialRel::P, s.lhs, s.rhs);
        case Kind::Disj: return make_constraint(SpatialRel::D, s.lhs, s.rhs);
        case Kind::Cover: return make_constraint(SpatialRel::P, comp(s.lhs), s.rhs);
        case Kind::NotCont: return make_constraint(SpatialRel::NotP, s.lhs, s.rhs);
        case Kind::NotDisj: return make_constraint(SpatialRel::NotD, s.lhs, s.rhs);
        case Kind::NotCover: return make_constraint(SpatialRel::NotP, comp(s.lhs), s.rhs);
    }
    throw std::logic_error("unreachable");
}

// Expresses a semantic as a constraint between the chosen node circles
// (pl/pr: term represented by its complement circle). Not every choice is
// expressible; nullopt marks those.
std::optional<SpatialConstraint> node_form(const Semantic& s, bool pl, bool pr) {
    Term nl = s.lhs, nr = s.rhs;
    nl.complemented = pl;
    nr.complemented = pr;
    switch (s.kind) {
        case Kind::Cont:
            if (!pl && !pr) return make_constraint(SpatialRel::P, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::D, nl, nr);
            if (pl && pr) return make_constraint(SpatialRel::P, nr, nl);
            return std::nullopt;
        case Kind::Disj:
            if (!pl && !pr) return make_constraint(SpatialRel::D, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::P, nl, nr);
            if (pl && !pr) return make_constraint(SpatialRel::P, nr, nl);
            return std::nullopt;
        case Kind::Cover:
            if (pl && !pr) return make_constraint(SpatialRel::P, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::P, nr, nl);
            if (pl && pr) return make_constraint(SpatialRel::D, nl, nr);
            return std::nullopt;
        case Kind::NotCont:
            if (!pl && !pr) return make_constraint(SpatialRel::NotP, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::NotD, nl, nr);
            if (pl && pr) return make_constraint(SpatialRel::NotP, nr, nl);
            return std::nullopt;
        case Kind::NotDisj:
            if (!pl && !pr) return make_constraint(SpatialRel::NotD, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::NotP, nl, nr);
            if (pl && !pr) return make_constraint(SpatialRel::NotP, nr, nl);
            return std::nullopt;
        case Kind::NotCover:
            if (pl && !pr) return make_constraint(SpatialRel::NotP, nl, nr);
            if (!pl && pr) return make_constraint(SpatialRel::NotP, nr, nl);
            if (pl && pr) return make_constraint(SpatialRel::NotD, nl, nr);
            return std::nullopt;
    }
    return std::nullopt;
}

} // namespace

Conjunction normalize(const Conjunction& c) {
    Conjunction out;
    out.reserve(c.size());
    for (const auto& k : c) out.push_back(canonical_of(semantic_of(k)));
    return out;
}

std::optional<Conjunction> find_circle_loop(const Conjunction& c) {
    if (c.empty()) return Conjunction{};
    const Conjunction nc = normalize(c);

    std::vector<std::string> names;
    std::vector<bool> atomic;
    std::map<std::string, int> index;
    auto term_index = [&](const Term& t) {
        auto it = index.find(t.name);
        if (it != index.end()) return it->second;
        int idx = static_cast<int>(names.size());
        index.emplace(t.name, idx);
        names.push_back(t.name);
        atomic.push_back(t.atomic);
        return idx;
    };

    std::vector<Semantic> sems;
    std::vector<std::pair<int, int>> ends;
    for (const auto& k : nc) {
        Semantic s = semantic_of(k);
        int li = term_index(s.lhs), ri = term_index(s.rhs);
        sems.push_back(std::move(s));
        ends.emplace_back(li, ri);
    }

    const int k_terms = static_cast<int>(names.size());
    if (k_terms > 20)
        throw std::invalid_argument("too many terms for polarity search");

    // Choose one circle per term (plain or complement) so every constraint
    // is expressible between chosen nodes; prefer as few complements as
    // possible. Atomic circles are always plain.
    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << k_terms); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        return __builtin_popcount(a) < __builtin_popcount(b);
    });

    for (unsigned mask : masks) {
        bool ok = true;
        for (int i = 0; i < k_terms && ok; ++i)
            if (atomic[i] && (mask >> i & 1)) ok = false;
        if (!ok) continue;

        Conjunction node;
        node.reserve(nc.size());
        for (size_t i = 0; i < sems.size() && ok; ++i) {
            bool pl = mask >> ends[i].first & 1;
            bool pr = mask >> ends[i].second & 1;
            auto nf = node_form(sems[i], pl, pr);
            if (!nf) {
                ok = false;
                break;
            }
            node.push_back(std::move(*nf));
        }
        if (!ok) continue;

        // Order constraints into a chain: each next edge touches an already
        // visited term where possible; disconnected components are chained
        // one after another.
        std::vector<bool> used(node.size(), false), seen(k_terms, false);
        Conjunction ordered;
        ordered.reserve(node.size());
        while (ordered.size() < node.size()) {
            int pick = -1;
            for (size_t i = 0; i < node.size(); ++i) {
                if (used[i]) continue;
                if (seen[ends[i].first] || seen[ends[i].second]) {
                    pick = static_cast<int>(i);
                    break;
                }
            }
            if (pick < 0)
                for (size_t i = 0; i < node.size(); ++i)
                    if (!used[i]) {
                        pick = static_cast<int>(i);
                        break;
                    }
            used[pick] = true;
            seen[ends[pick].first] = seen[ends[pick].second] = true;
            ordered.push_back(node[pick]);
        }
        return ordered;
    }
    return std::nullopt;
}

ConstraintFormula conjoin(const ConstraintFormula& a, const ConstraintFormula& b) {
    ConstraintFormula out;
    for (const auto& da : a.disjuncts)
        for (const auto& db : b.disjuncts) {
            Conjunction c = da;
            c.insert(c.end(), db.begin(), db.end());
            out.disjuncts.push_back(std::move(c));
        }
    return out;
}

ConstraintFormula refutation_formula(const std::vector<Statement>& premises,
                                     const Statement& conclusion) {
    ConstraintFormula f{{Conjunction{}}};
    for (const auto& p : premises) f = conjoin(f, translate_statement(p));
    f = conjoin(f, translate_statement(negate_conclusion(conclusion)));
    for (auto& d : f.disjuncts) d = normalize(d);
    return f;
}

} // namespace sphnn
