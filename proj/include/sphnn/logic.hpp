#ifndef SPHNN_LOGIC_HPP
#define SPHNN_LOGIC_HPP

#include <optional>
#include <string>
#include <vector>

namespace sphnn {

/// A term of a statement. `complemented` selects the complement circle c_X;
/// `atomic` marks an individual constant, embedded as a minimal-radius circle.
struct Term {
    std::string name;
    bool complemented = false;
    bool atomic = false;

    friend bool operator==(const Term& a, const Term& b) {
        return a.name == b.name && a.complemented == b.complemented && a.atomic == b.atomic;
    }
};

Term plain(std::string name, bool atomic = false);
Term comp(Term t); // flips the complement flag

enum class Quantifier { All, Some, No, SomeNot };

/// `all F are G_or_H` is the only statement with a two-term predicate.
struct Statement {
    Quantifier quant = Quantifier::All;
    Term subject;
    std::vector<Term> predicate; // one term, or two for the disjunctive form

    friend bool operator==(const Statement& a, const Statement& b) {
        return a.quant == b.quant && a.subject == b.subject && a.predicate == b.predicate;
    }
};

std::string to_text(const Statement& s); // paper-style grammar, e.g. "some a are not c_G"

/// Qualitative spatial constraint between two (possibly complemented) circles.
enum class SpatialRel { P, NotP, D, NotD };

const char* to_string(SpatialRel r);

struct SpatialConstraint {
    SpatialRel rel = SpatialRel::P;
    Term lhs, rhs;

    friend bool operator==(const SpatialConstraint& a, const SpatialConstraint& b) {
        return a.rel == b.rel && a.lhs == b.lhs && a.rhs == b.rhs;
    }
};

SpatialConstraint make_constraint(SpatialRel rel, Term lhs, Term rhs);
std::string to_text(const SpatialConstraint& c);

using Conjunction = std::vector<SpatialConstraint>;

/// Disjunctive normal form f_1 v ... v f_m over spatial constraints.
struct ConstraintFormula {
    std::vector<Conjunction> disjuncts;
};

enum class CorpusFamily { Extended16, Classic256 };

const char* to_string(CorpusFamily f);

struct ReasoningTask {
    std::string id;
    std::vector<Statement> premises;
    Statement conclusion;
    bool gold_valid = false;
    CorpusFamily family = CorpusFamily::Extended16;
};

/// Statement -> spatial constraints in DNF.
/// All -> P, Some -> NotD, No -> D, SomeNot -> NotP; a disjunctive predicate
/// yields two disjuncts; atomic subjects use the two-valued membership
/// reading (Some/SomeNot collapse onto part-of constraints).
ConstraintFormula translate_statement(const Statement& s);

/// Contradictory of a conclusion: All <-> SomeNot, No <-> Some; atomic
/// subjects flip the predicate complement instead (individual membership
/// is two-valued).
Statement negate_conclusion(const Statement& s);

/// Rewrites complemented operands away wherever an equivalent plain
/// constraint exists (antipode identities). Residual complements encode
/// covering conditions, which have no plain-circle equivalent.
Conjunction normalize(const Conjunction& c);

/// Orders a normalized conjunction along a connected chain of circles,
/// choosing for each term either the circle or its complement so that every
/// constraint relates two chosen nodes. Empty when no such choice exists.
std::optional<Conjunction> find_circle_loop(const Conjunction& c);

/// DNF product of two formulas (order-preserving).
ConstraintFormula conjoin(const ConstraintFormula& a, const ConstraintFormula& b);

/// premises && negate(conclusion), translated and DNF-expanded; each
/// disjunct normalized.
ConstraintFormula refutation_formula(const std::vector<Statement>& premises,
                                     const Statement& conclusion);

/// The 16 extended reasoning types x 4 candidate conclusions, labels from
/// the enumeration oracle. Exactly 64 tasks, 32 valid.
std::vector<ReasoningTask> generate_extended16();

/// The 256 classic syllogisms (4 x 4 moods x 4 figures x 4 conclusion
/// moods), labels from the enumeration oracle. Exactly 24 valid.
std::vector<ReasoningTask> generate_classic256();

/// One task per line: {"id":..,"premises":[..],"conclusion":..,"gold_valid":..,"family":..}
std::string task_to_json_line(const ReasoningTask& t);
std::string corpus_to_jsonl(const std::vector<ReasoningTask>& tasks);

} // namespace sphnn

#endif
