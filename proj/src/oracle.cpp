#include "sphnn/oracle.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace sphnn {

namespace {

struct RegionSpace {
    std::vector<std::string> names;
    std::vector<bool> atomic;
    std::map<std::string, int> index;
    int k = 0;
    std::uint32_t all = 0; // every region

    void add(const Term& t) {
        auto it = index.find(t.name);
        if (it == index.end()) {
            index.emplace(t.name, k);
            names.push_back(t.name);
            atomic.push_back(t.atomic);
            ++k;
        } else if (t.atomic) {
            atomic[it->second] = true;
        }
    }

    std::uint32_t ext(const Term& t) const {
        int idx = index.at(t.name);
        std::uint32_t m = 0;
        for (int r = 0; r < (1 << k); ++r) {
            bool inside = (r >> idx) & 1;
            if (inside != t.complemented) m |= 1u << r;
        }
        return m;
    }
};

struct BranchConstraints {
    std::uint32_t empty = 0;              // regions forced empty
    std::vector<std::uint32_t> witnesses; // each needs one surviving region
};

// Recursively place each atomic term in a single surviving region.
bool place_atomics(const RegionSpace& space, const BranchConstraints& bc,
                   const std::vector<int>& atomics, size_t next, std::uint32_t empty) {
    if (next == atomics.size()) {
        for (auto w : bc.witnesses)
            if ((w & ~empty) == 0) return false;
        return true;
    }
    Term t;
    t.name = space.names[atomics[next]];
    std::uint32_t cells = space.ext(t) & ~empty;
    for (int r = 0; r < (1 << space.k); ++r) {
        if (!(cells >> r & 1)) continue;
        std::uint32_t others = space.ext(t) & ~(1u << r);
        if (place_atomics(space, bc, atomics, next + 1, empty | others)) return true;
    }
    return false;
}

bool branch_satisfiable(const RegionSpace& space, const std::vector<Statement>& stmts) {
    BranchConstraints bc;
    for (const auto& s : stmts) {
        std::uint32_t subj = space.ext(s.subject);
        std::uint32_t pred = space.ext(s.predicate.at(0));
        switch (s.quant) {
            case Quantifier::All: bc.empty |= subj & ~pred; break;
            case Quantifier::No: bc.empty |= subj & pred; break;
            case Quantifier::Some: bc.witnesses.push_back(subj & pred); break;
            case Quantifier::SomeNot: bc.witnesses.push_back(subj & ~pred); break;
        }
    }
    // existential import for every term, and every complement nonempty
    for (int i = 0; i < space.k; ++i) {
        Term t;
        t.name = space.names[i];
        std::uint32_t e = space.ext(t);
        bc.witnesses.push_back(e);
        bc.witnesses.push_back(~e & space.all);
    }
    std::vector<int> atomics;
    for (int i = 0; i < space.k; ++i)
        if (space.atomic[i]) atomics.push_back(i);
    return place_atomics(space, bc, atomics, 0, bc.empty);
}

void expand_branches(const std::vector<Statement>& stmts, size_t next,
                     std::vector<Statement>& current,
                     std::vector<std::vector<Statement>>& out) {
    if (next == stmts.size()) {
        out.push_back(current);
        return;
    }
    const Statement& s = stmts[next];
    if (s.predicate.size() == 2) {
        for (int side = 0; side < 2; ++side) {
            Statement b = s;
            b.predicate = {s.predicate[side]};
            current.push_back(b);
            expand_branches(stmts, next + 1, current, out);
            current.pop_back();
        }
    } else {
        current.push_back(s);
        expand_branches(stmts, next + 1, current, out);
        current.pop_back();
    }
}

} // namespace

bool statements_satisfiable(const std::vector<Statement>& stmts, bool classical_disjunction) {
    RegionSpace space;
    for (const auto& s : stmts) {
        space.add(s.subject);
        for (const auto& p : s.predicate) space.add(p);
    }
    if (space.k > 5)
        throw std::invalid_argument("oracle refuses tasks with more than 5 terms");
    space.all = (space.k >= 5) ? 0xffffffffu : ((1u << (1 << space.k)) - 1u);

    if (classical_disjunction) {
        // "all S are G_or_H" empties the subject regions outside the union
        RegionSpace sp = space;
        BranchConstraints bc;
        std::vector<Statement> plain_stmts;
        for (const auto& s : stmts) {
            if (s.predicate.size() == 2) {
                if (s.quant != Quantifier::All)
                    throw std::invalid_argument("unsupported disjunctive form");
                bc.empty |= sp.ext(s.subject) & ~(sp.ext(s.predicate[0]) | sp.ext(s.predicate[1]));
            } else {
                plain_stmts.push_back(s);
            }
        }
        for (const auto& s : plain_stmts) {
            std::uint32_t subj = sp.ext(s.subject), pred = sp.ext(s.predicate[0]);
            switch (s.quant) {
                case Quantifier::All: bc.empty |= subj & ~pred; break;
                case Quantifier::No: bc.empty |= subj & pred; break;
                case Quantifier::Some: bc.witnesses.push_back(subj & pred); break;
                case Quantifier::SomeNot: bc.witnesses.push_back(subj & ~pred); break;
            }
        }
        for (int i = 0; i < sp.k; ++i) {
            Term t;
            t.name = sp.names[i];
            std::uint32_t e = sp.ext(t);
            bc.witnesses.push_back(e);
            bc.witnesses.push_back(~e & sp.all);
        }
        std::vector<int> atomics;
        for (int i = 0; i < sp.k; ++i)
            if (sp.atomic[i]) atomics.push_back(i);
        return place_atomics(sp, bc, atomics, 0, bc.empty);
    }

    std::vector<std::vector<Statement>> branches;
    std::vector<Statement> cur;
    expand_branches(stmts, 0, cur, branches);
    for (const auto& b : branches)
        if (branch_satisfiable(space, b)) return true;
    return false;
}

Statement classical_negation(const Statement& s) {
    if (s.predicate.size() != 1)
        throw std::invalid_argument("cannot negate a disjunctive conclusion");
    Statement out = s;
    switch (s.quant) {
        case Quantifier::All: out.quant = Quantifier::SomeNot; break;
        case Quantifier::SomeNot: out.quant = Quantifier::All; break;
        case Quantifier::No: out.quant = Quantifier::Some; break;
        case Quantifier::Some: out.quant = Quantifier::No; break;
    }
    return out;
}

bool brute_force_validity(const ReasoningTask& t, bool classical_disjunction) {
    std::vector<Statement> stmts = t.premises;
    stmts.push_back(classical_negation(t.conclusion));
    return !statements_satisfiable(stmts, classical_disjunction);
}

} // namespace sphnn
