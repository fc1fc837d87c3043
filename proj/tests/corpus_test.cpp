#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphnn/logic.hpp"
#include "sphnn/oracle.hpp"

#include <map>
#include <set>
#include <sstream>

using namespace sphnn;

namespace {

std::string task_line(const ReasoningTask& t) {
    std::string line;
    for (const auto& p : t.premises) line += to_text(p) + ", ";
    line += to_text(t.conclusion);
    return line;
}

} // namespace

TEST_CASE("extended16 reproduces the sixteen configuration families") {
    auto tasks = generate_extended16();
    REQUIRE(tasks.size() == 64);

    int valid = 0;
    for (const auto& t : tasks) valid += t.gold_valid;
    CHECK(valid == 32);

    // first conclusion variant of every type, written out in full
    const char* expected_all[16] = {
        "all F are G, all a are F, all a are G",
        "all F are c_G, all a are F, all a are c_G",
        "all F are c_G, all G are c_F",
        "all F are G, all c_G are c_F",
        "all F are G, all G are H, all F are H",
        "all F are c_G, all c_G are H, all F are H",
        "all F are G, all c_H are c_G, all F are H",
        "all F are c_G, all c_H are G, all F are H",
        "all F are G, all a are H, all a are c_G, all a are c_F",
        "all c_F are G, all a are H, all a are c_G, all a are F",
        "all F are G, all a are c_G, all a are c_F",
        "all F are c_G, all a are G, all a are c_F",
        "all F are G_or_H, all F are c_G, all F are H",
        "all F are G_or_H, all G are c_F, all F are H",
        "all F are G_or_H, all G are J, all H are J, all F are J",
        "all F are G_or_H, all J are c_G, all J are c_H, all F are c_J",
    };
    for (int type = 0; type < 16; ++type) {
        const ReasoningTask& t = tasks[type * 4];
        CHECK(task_line(t) == expected_all[type]);
        CHECK(t.gold_valid); // the universal variant is the stated conclusion
    }

    // per type the four variants are all/no/some/some-not over one pair,
    // with the universal and particular ones valid
    for (int type = 0; type < 16; ++type) {
        const ReasoningTask* v = &tasks[type * 4];
        CHECK(v[0].conclusion.quant == Quantifier::All);
        CHECK(v[1].conclusion.quant == Quantifier::No);
        CHECK(v[2].conclusion.quant == Quantifier::Some);
        CHECK(v[3].conclusion.quant == Quantifier::SomeNot);
        CHECK(v[0].gold_valid);
        CHECK_FALSE(v[1].gold_valid);
        CHECK(v[2].gold_valid);
        CHECK_FALSE(v[3].gold_valid);
        for (int k = 1; k < 4; ++k) {
            CHECK(v[k].premises.size() == v[0].premises.size());
            CHECK(v[k].conclusion.subject == v[0].conclusion.subject);
            CHECK(v[k].conclusion.predicate == v[0].conclusion.predicate);
        }
    }

    // a few verbatim variant lines
    std::map<std::string, std::string> by_id;
    for (const auto& t : tasks) by_id[t.id] = task_line(t);
    CHECK(by_id["ext16-01-some-not"] == "all F are G, all a are F, some a are not G");
    CHECK(by_id["ext16-02-no"] == "all F are c_G, all a are F, no a are c_G");
    CHECK(by_id["ext16-13-some"] == "all F are G_or_H, all F are c_G, some F are H");
    CHECK(by_id["ext16-16-some-not"] ==
          "all F are G_or_H, all J are c_G, all J are c_H, some F are not c_J");
}

TEST_CASE("classic256 layout and the 24 valid forms") {
    auto tasks = generate_classic256();
    REQUIRE(tasks.size() == 256);

    int valid = 0;
    std::set<std::string> valid_ids;
    for (const auto& t : tasks) {
        if (t.gold_valid) {
            ++valid;
            valid_ids.insert(t.id);
        }
    }
    CHECK(valid == 24);

    // the classical catalogue under existential import
    const std::set<std::string> expected = {
        "cls256-AAA-1", "cls256-EAE-1", "cls256-AII-1", "cls256-EIO-1",
        "cls256-AAI-1", "cls256-EAO-1",
        "cls256-EAE-2", "cls256-AEE-2", "cls256-EIO-2", "cls256-AOO-2",
        "cls256-EAO-2", "cls256-AEO-2",
        "cls256-IAI-3", "cls256-AII-3", "cls256-OAO-3", "cls256-EIO-3",
        "cls256-AAI-3", "cls256-EAO-3",
        "cls256-AEE-4", "cls256-IAI-4", "cls256-EIO-4", "cls256-AEO-4",
        "cls256-EAO-4", "cls256-AAI-4",
    };
    CHECK(valid_ids == expected);

    // barbara spelled out
    for (const auto& t : tasks)
        if (t.id == "cls256-AAA-1") {
            CHECK(task_line(t) == "all G are H, all F are G, all F are H");
            CHECK(t.gold_valid);
        }
}

TEST_CASE("gold labels are invariant under term renaming") {
    auto tasks = generate_extended16();
    std::map<std::string, std::string> rename = {
        {"F", "Zebra"}, {"G", "Quark"}, {"H", "Moss"}, {"J", "Kite"}, {"a", "w"}};
    for (size_t i = 0; i < tasks.size(); i += 7) {
        ReasoningTask t = tasks[i];
        auto rn = [&rename](Term& term) { term.name = rename.at(term.name); };
        for (auto& p : t.premises) {
            rn(p.subject);
            for (auto& q : p.predicate) rn(q);
        }
        rn(t.conclusion.subject);
        for (auto& q : t.conclusion.predicate) rn(q);
        CHECK(brute_force_validity(t) == tasks[i].gold_valid);
    }
}

TEST_CASE("jsonl export shape") {
    auto tasks = generate_extended16();
    std::string line = task_to_json_line(tasks[0]);
    CHECK(line ==
          R"({"id":"ext16-01-all","premises":["all F are G","all a are F"],)"
          R"("conclusion":"all a are G","gold_valid":true,"family":"extended16"})");
    std::string all = corpus_to_jsonl(tasks);
    size_t lines = 0;
    for (char c : all) lines += c == '\n';
    CHECK(lines == 64);
}
