#ifndef SPHNN_PARSER_HPP
#define SPHNN_PARSER_HPP

#include "sphnn/logic.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace sphnn {

struct ParseError : std::runtime_error {
    size_t position; // 0-based offset into the input text
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parses `QUANT SUBJ are [not] PRED` where QUANT is all/some/no, names
/// match [A-Za-z][A-Za-z0-9]*, `c_NAME` selects the complement and
/// `NAME_or_NAME` a disjunctive predicate. Terms named in `atomic_names`
/// are atomic.
Statement parse_statement(const std::string& text,
                          const std::vector<std::string>& atomic_names = {});

/// Inverse of to_text followed by parse_statement; single-lowercase-letter
/// names are treated as atomic, matching the generated corpora.
ReasoningTask task_from_json_line(const std::string& line);
std::vector<ReasoningTask> corpus_from_jsonl(const std::string& text);

} // namespace sphnn

#endif
