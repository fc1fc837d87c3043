#ifndef SPHNN_ORACLE_HPP
#define SPHNN_ORACLE_HPP

#include "sphnn/logic.hpp"

namespace sphnn {

/// Ground-truth satisfiability over Venn-region assignments: every term and
/// every complement denotes a nonempty set, atomic terms occupy exactly one
/// region. With `classical_disjunction` the predicate "G_or_H" means the set
/// union; by default it means "inside G or inside H", matching the circle
/// translation.
bool statements_satisfiable(const std::vector<Statement>& stmts,
                            bool classical_disjunction = false);

/// Square-of-opposition contradictory, used to negate conclusions here.
Statement classical_negation(const Statement& s);

/// Enumeration-based validity: no region assignment satisfies
/// premises && not(conclusion). Independent of the sphere solver.
bool brute_force_validity(const ReasoningTask& t, bool classical_disjunction = false);

} // namespace sphnn

#endif
