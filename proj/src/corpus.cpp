#include "sphnn/logic.hpp"
#include "sphnn/oracle.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace sphnn {

namespace {

Statement stmt(Quantifier q, Term s, Term p) { return Statement{q, std::move(s), {std::move(p)}}; }

Statement stmt_or(Term s, Term p1, Term p2) {
    return Statement{Quantifier::All, std::move(s), {std::move(p1), std::move(p2)}};
}

struct ConclusionMood {
    Quantifier quant;
    const char* suffix;
};

constexpr ConclusionMood kConclusionMoods[] = {
    {Quantifier::All, "all"},
    {Quantifier::No, "no"},
    {Quantifier::Some, "some"},
    {Quantifier::SomeNot, "some-not"},
};

} // namespace

std::vector<ReasoningTask> generate_extended16() {
    const Term F = plain("F"), G = plain("G"), H = plain("H"), J = plain("J");
    const Term a = plain("a", true);

    struct TypeSpec {
        std::vector<Statement> premises;
        Term subj, pred;
    };
    const std::vector<TypeSpec> types = {
        /* 1 generalised modus ponens   */ {{stmt(Quantifier::All, F, G), stmt(Quantifier::All, a, F)}, a, G},
        /* 2 its negation variant       */ {{stmt(Quantifier::All, F, comp(G)), stmt(Quantifier::All, a, F)}, a, comp(G)},
        /* 3 generalised contraposition */ {{stmt(Quantifier::All, F, comp(G))}, G, comp(F)},
        /* 4 its negation variant       */ {{stmt(Quantifier::All, F, G)}, comp(G), comp(F)},
        /* 5 hypothetical syllogism 1   */ {{stmt(Quantifier::All, F, G), stmt(Quantifier::All, G, H)}, F, H},
        /* 6 its negation variant       */ {{stmt(Quantifier::All, F, comp(G)), stmt(Quantifier::All, comp(G), H)}, F, H},
        /* 7 hypothetical syllogism 2   */ {{stmt(Quantifier::All, F, G), stmt(Quantifier::All, comp(H), comp(G))}, F, H},
        /* 8 its negation variant       */ {{stmt(Quantifier::All, F, comp(G)), stmt(Quantifier::All, comp(H), G)}, F, H},
        /* 9 hypothetical syllogism 3   */ {{stmt(Quantifier::All, F, G), stmt(Quantifier::All, a, H), stmt(Quantifier::All, a, comp(G))}, a, comp(F)},
        /* 10 its negation variant      */ {{stmt(Quantifier::All, comp(F), G), stmt(Quantifier::All, a, H), stmt(Quantifier::All, a, comp(G))}, a, F},
        /* 11 generalised modus tollens */ {{stmt(Quantifier::All, F, G), stmt(Quantifier::All, a, comp(G))}, a, comp(F)},
        /* 12 its negation variant      */ {{stmt(Quantifier::All, F, comp(G)), stmt(Quantifier::All, a, G)}, a, comp(F)},
        /* 13 disjunctive syllogism     */ {{stmt_or(F, G, H), stmt(Quantifier::All, F, comp(G))}, F, H},
        /* 14 its negation variant      */ {{stmt_or(F, G, H), stmt(Quantifier::All, G, comp(F))}, F, H},
        /* 15 generalised dilemma       */ {{stmt_or(F, G, H), stmt(Quantifier::All, G, J), stmt(Quantifier::All, H, J)}, F, J},
        /* 16 its negation variant      */ {{stmt_or(F, G, H), stmt(Quantifier::All, J, comp(G)), stmt(Quantifier::All, J, comp(H))}, F, comp(J)},
    };

    std::vector<ReasoningTask> tasks;
    tasks.reserve(64);
    for (size_t i = 0; i < types.size(); ++i) {
        for (const auto& mood : kConclusionMoods) {
            ReasoningTask t;
            char id[32];
            std::snprintf(id, sizeof id, "ext16-%02zu-%s", i + 1, mood.suffix);
            t.id = id;
            t.premises = types[i].premises;
            t.conclusion = stmt(mood.quant, types[i].subj, types[i].pred);
            t.family = CorpusFamily::Extended16;
            t.gold_valid = brute_force_validity(t);
            tasks.push_back(std::move(t));
        }
    }
    return tasks;
}

std::vector<ReasoningTask> generate_classic256() {
    const Term S = plain("F"), M = plain("G"), P = plain("H");
    const char moods[] = {'A', 'E', 'I', 'O'};
    auto mood_stmt = [](char m, const Term& x, const Term& y) {
        switch (m) {
            case 'A': return stmt(Quantifier::All, x, y);
            case 'E': return stmt(Quantifier::No, x, y);
            case 'I': return stmt(Quantifier::Some, x, y);
            default: return stmt(Quantifier::SomeNot, x, y);
        }
    };
    // figure: placement of the middle term in the two premises
    auto premise_pair = [&](int fig, char m1, char m2) -> std::vector<Statement> {
        switch (fig) {
            case 1: return {mood_stmt(m1, M, P), mood_stmt(m2, S, M)};
            case 2: return {mood_stmt(m1, P, M), mood_stmt(m2, S, M)};
            case 3: return {mood_stmt(m1, M, P), mood_stmt(m2, M, S)};
            default: return {mood_stmt(m1, P, M), mood_stmt(m2, M, S)};
        }
    };

    std::vector<ReasoningTask> tasks;
    tasks.reserve(256);
    for (char m1 : moods)
        for (char m2 : moods)
            for (int fig = 1; fig <= 4; ++fig)
                for (char mc : moods) {
                    ReasoningTask t;
                    char id[32];
                    std::snprintf(id, sizeof id, "cls256-%c%c%c-%d", m1, m2, mc, fig);
                    t.id = id;
                    t.premises = premise_pair(fig, m1, m2);
                    t.conclusion = mood_stmt(mc, S, P);
                    t.family = CorpusFamily::Classic256;
                    t.gold_valid = brute_force_validity(t);
                    tasks.push_back(std::move(t));
                }
    return tasks;
}

std::string task_to_json_line(const ReasoningTask& t) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["premises"] = nlohmann::ordered_json::array();
    for (const auto& p : t.premises) j["premises"].push_back(to_text(p));
    j["conclusion"] = to_text(t.conclusion);
    j["gold_valid"] = t.gold_valid;
    j["family"] = to_string(t.family);
    return j.dump();
}

std::string corpus_to_jsonl(const std::vector<ReasoningTask>& tasks) {
    std::ostringstream out;
    for (const auto& t : tasks) out << task_to_json_line(t) << "\n";
    return out.str();
}

} // namespace sphnn
