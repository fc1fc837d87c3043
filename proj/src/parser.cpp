#include "sphnn/parser.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sphnn {

namespace {

struct Token {
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back({text.substr(start, i - start), start});
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    static const char* reserved[] = {"all", "some", "no", "are", "not"};
    for (const char* r : reserved)
        if (s == r) return false;
    return true;
}

bool is_atomic(const std::string& name, const std::vector<std::string>& atomic_names) {
    return std::find(atomic_names.begin(), atomic_names.end(), name) != atomic_names.end();
}

Term parse_term(const Token& tok, const std::vector<std::string>& atomic_names) {
    std::string word = tok.text;
    bool complemented = false;
    if (word.rfind("c_", 0) == 0) {
        complemented = true;
        word = word.substr(2);
    }
    if (!valid_name(word)) throw ParseError("invalid term name '" + tok.text + "'", tok.pos);
    bool atomic = is_atomic(word, atomic_names);
    if (atomic && complemented)
        throw ParseError("atomic term '" + word + "' cannot be complemented", tok.pos);
    return Term{word, complemented, atomic};
}

std::vector<Term> parse_predicate(const Token& tok, const std::vector<std::string>& atomic_names) {
    size_t sep = tok.text.find("_or_");
    if (sep != std::string::npos) {
        std::string left = tok.text.substr(0, sep);
        std::string right = tok.text.substr(sep + 4);
        if (!valid_name(left) || !valid_name(right))
            throw ParseError("invalid disjunctive predicate '" + tok.text + "'", tok.pos);
        return {Term{left, false, is_atomic(left, atomic_names)},
                Term{right, false, is_atomic(right, atomic_names)}};
    }
    return {parse_term(tok, atomic_names)};
}

} // namespace

Statement parse_statement(const std::string& text, const std::vector<std::string>& atomic_names) {
    auto toks = tokenize(text);
    if (toks.empty()) throw ParseError("empty statement", 0);

    Quantifier quant;
    if (toks[0].text == "all")
        quant = Quantifier::All;
    else if (toks[0].text == "some")
        quant = Quantifier::Some;
    else if (toks[0].text == "no")
        quant = Quantifier::No;
    else
        throw ParseError("expected quantifier all/some/no, got '" + toks[0].text + "'",
                         toks[0].pos);

    if (toks.size() < 2) throw ParseError("expected subject term", text.size());
    Term subject = parse_term(toks[1], atomic_names);

    if (toks.size() < 3 || toks[2].text != "are")
        throw ParseError("expected 'are'", toks.size() < 3 ? text.size() : toks[2].pos);

    size_t pred_idx = 3;
    if (toks.size() > 3 && toks[3].text == "not") {
        if (quant != Quantifier::Some)
            throw ParseError("'not' is only valid after 'some ... are'", toks[3].pos);
        quant = Quantifier::SomeNot;
        pred_idx = 4;
    }
    if (toks.size() <= pred_idx) throw ParseError("expected predicate term", text.size());
    std::vector<Term> predicate = parse_predicate(toks[pred_idx], atomic_names);
    if (toks.size() > pred_idx + 1)
        throw ParseError("unexpected trailing token '" + toks[pred_idx + 1].text + "'",
                         toks[pred_idx + 1].pos);
    if (predicate.size() == 2 && quant != Quantifier::All)
        throw ParseError("disjunctive predicate requires 'all'", toks[pred_idx].pos);
    return Statement{quant, std::move(subject), std::move(predicate)};
}

ReasoningTask task_from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    ReasoningTask t;
    t.id = j.at("id").get<std::string>();
    t.gold_valid = j.at("gold_valid").get<bool>();
    std::string family = j.at("family").get<std::string>();
    if (family == "extended16")
        t.family = CorpusFamily::Extended16;
    else if (family == "classic256")
        t.family = CorpusFamily::Classic256;
    else
        throw std::invalid_argument("unknown corpus family '" + family + "'");

    // collect atomic names first: single lowercase letters by corpus convention
    std::vector<std::string> atomic_names;
    auto scan = [&atomic_names](const std::string& s) {
        std::istringstream in(s);
        std::string w;
        while (in >> w) {
            if (w.rfind("c_", 0) == 0) w = w.substr(2);
            if (w.size() == 1 && std::islower(static_cast<unsigned char>(w[0])) &&
                std::find(atomic_names.begin(), atomic_names.end(), w) == atomic_names.end())
                atomic_names.push_back(w);
        }
    };
    for (const auto& p : j.at("premises")) scan(p.get<std::string>());
    scan(j.at("conclusion").get<std::string>());

    for (const auto& p : j.at("premises"))
        t.premises.push_back(parse_statement(p.get<std::string>(), atomic_names));
    t.conclusion = parse_statement(j.at("conclusion").get<std::string>(), atomic_names);
    return t;
}

std::vector<ReasoningTask> corpus_from_jsonl(const std::string& text) {
    std::vector<ReasoningTask> tasks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        tasks.push_back(task_from_json_line(line));
    }
    return tasks;
}

} // namespace sphnn
