#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "common/fixtures.hpp"
#include "doctest.h"
#include "typeqa/errors.hpp"
#include "typeqa/ontology.hpp"
#include "typeqa/rng.hpp"

using namespace typeqa;
using namespace typeqa::testing;

namespace {

// Independent oracle: recursive three-color cycle detection.
bool has_cycle_brute(const TypeOntology& g) {
    std::map<std::string, int> color;  // 0 white, 1 gray, 2 black
    std::function<bool(const std::string&)> visit = [&](const std::string& v) -> bool {
        color[v] = 1;
        auto it = g.nodes.find(v);
        if (it != g.nodes.end()) {
            for (const std::string& p : it->second.parents) {
                if (!g.contains(p)) continue;
                if (color[p] == 1) return true;
                if (color[p] == 0 && visit(p)) return true;
            }
        }
        color[v] = 2;
        return false;
    };
    for (const auto& [id, _] : g.nodes)
        if (color[id] == 0 && visit(id)) return true;
    return false;
}

// Independent oracle: reachability by plain BFS over parent edges.
std::set<std::string> reachable_brute(const TypeOntology& g, const std::string& from) {
    std::set<std::string> seen;
    std::vector<std::string> queue{from};
    while (!queue.empty()) {
        const std::string v = queue.back();
        queue.pop_back();
        auto it = g.nodes.find(v);
        if (it == g.nodes.end()) continue;
        for (const std::string& p : it->second.parents)
            if (seen.insert(p).second) queue.push_back(p);
    }
    seen.erase(from);
    return seen;
}

std::string node_id(std::size_t i) { return "Q" + std::to_string(i + 1); }

// Random DAG: edges only point from later to earlier ranks of a shuffled
// topological order, so acyclicity holds by construction.
TypeOntology random_dag(std::size_t n, std::size_t max_parents, SplitMix64& rng) {
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.next_below(i + 1)]);

    TypeOntology g;
    for (std::size_t i = 0; i < n; ++i) g.nodes[node_id(i)] = TypeNode{node_id(i), {}, false};
    for (std::size_t rank = 1; rank < n; ++rank) {
        TypeNode& node = g.nodes[node_id(order[rank])];
        const std::size_t k = rng.next_below(max_parents + 1);
        for (std::size_t j = 0; j < k; ++j) {
            const std::string parent = node_id(order[rng.next_below(rank)]);
            if (std::find(node.parents.begin(), node.parents.end(), parent) ==
                node.parents.end())
                node.parents.push_back(parent);
        }
    }
    return g;
}

bool cycle_is_genuine(const TypeOntology& g, const std::vector<std::string>& cycle) {
    if (cycle.size() < 2) return false;
    if (cycle.front() != cycle.back()) return false;
    for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
        const TypeNode* node = g.find(cycle[i]);
        if (!node) return false;
        if (std::find(node->parents.begin(), node->parents.end(), cycle[i + 1]) ==
            node->parents.end())
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("build_ontology on the Venus example") {
    IngestResult r = ingest_lines({
        kg_line("Q30", "Venus", {}, {{"P31", "Q634"}}),
        kg_line("Q634", "planet", {}, {{"P279", "Q6999"}}),
    });
    OntologyBuild built = build_ontology(r.table);

    // Venus is not a type; planet and its parent are.
    CHECK_FALSE(built.ontology.contains("Q30"));
    REQUIRE(built.ontology.contains("Q634"));
    REQUIRE(built.ontology.contains("Q6999"));
    CHECK(built.ontology.find("Q634")->name == "planet");
    CHECK(built.ontology.find("Q634")->parents == std::vector<std::string>{"Q6999"});
    CHECK_FALSE(built.ontology.find("Q634")->dangling);
    CHECK(built.ontology.find("Q6999")->name == "Q6999");  // no record: named by id
    CHECK(built.ontology.find("Q6999")->dangling);
    CHECK(built.dangling_count == 1);

    CHECK(types_of(built.index, "Q30") == std::vector<std::string>{"Q634"});
    CHECK(types_of(built.index, "Q634") == std::vector<std::string>{"Q6999"});
}

TEST_CASE("build_ontology empty table") {
    OntologyBuild built = build_ontology(EntityTable{});
    CHECK(built.ontology.node_count() == 0);
    CHECK(built.index.entity_to_types.empty());
}

TEST_CASE("types_of preserves claim order and rejects unknown entities") {
    IngestResult r = ingest_lines({
        kg_line("Q1", "e", {}, {{"P31", "Q7"}, {"P31", "Q8"}}),
    });
    OntologyBuild built = build_ontology(r.table);
    CHECK(types_of(built.index, "Q1") == std::vector<std::string>{"Q7", "Q8"});
    CHECK_THROWS_AS(types_of(built.index, "Q99"), input_error);
}

TEST_CASE("validate_acyclic accepts chains and reports minimal cycles") {
    TypeOntology chain;
    chain.nodes["Qa"] = TypeNode{"a", {"Qb"}, false};
    chain.nodes["Qb"] = TypeNode{"b", {"Qc"}, false};
    chain.nodes["Qc"] = TypeNode{"c", {}, false};
    CHECK_FALSE(validate_acyclic(chain).has_value());

    TypeOntology two;
    two.nodes["Qa"] = TypeNode{"a", {"Qb"}, false};
    two.nodes["Qb"] = TypeNode{"b", {"Qa"}, false};
    auto report = validate_acyclic(two);
    REQUIRE(report.has_value());
    CHECK(report->cycle.size() == 3);
    CHECK(cycle_is_genuine(two, report->cycle));
    const std::vector<std::string> ab = {"Qa", "Qb", "Qa"};
    const std::vector<std::string> ba = {"Qb", "Qa", "Qb"};
    CHECK((report->cycle == ab || report->cycle == ba));

    TypeOntology self;
    self.nodes["Qa"] = TypeNode{"a", {"Qa"}, false};
    auto self_report = validate_acyclic(self);
    REQUIRE(self_report.has_value());
    CHECK(cycle_is_genuine(self, self_report->cycle));
}

TEST_CASE("validate_acyclic accepts a 10k-node generated DAG") {
    SplitMix64 rng(2024);
    TypeOntology g = random_dag(10000, 3, rng);
    CHECK_FALSE(validate_acyclic(g).has_value());
}

TEST_CASE("validate_acyclic agrees with a brute-force detector") {
    SplitMix64 rng(5);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 2 + rng.next_below(199);
        TypeOntology g = random_dag(n, 3, rng);
        // Half the time, wire in a random extra edge that may close a cycle.
        if (iter % 2 == 1) {
            const std::size_t from = rng.next_below(n);
            const std::size_t to = rng.next_below(n);
            g.nodes[node_id(from)].parents.push_back(node_id(to));
        }
        const auto report = validate_acyclic(g);
        CHECK(report.has_value() == has_cycle_brute(g));
        if (report) CHECK(cycle_is_genuine(g, report->cycle));
    }
}

TEST_CASE("ancestors matches brute-force reachability") {
    TypeOntology diamond;
    diamond.nodes["Qa"] = TypeNode{"a", {"Qb", "Qc"}, false};
    diamond.nodes["Qb"] = TypeNode{"b", {"Qd"}, false};
    diamond.nodes["Qc"] = TypeNode{"c", {"Qd"}, false};
    diamond.nodes["Qd"] = TypeNode{"d", {}, false};
    CHECK(ancestors(diamond, "Qa") == std::set<std::string>{"Qb", "Qc", "Qd"});
    CHECK(ancestors(diamond, "Qd").empty());
    CHECK_THROWS_AS(ancestors(diamond, "Qzz"), input_error);

    SplitMix64 rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        const std::size_t n = 2 + rng.next_below(199);
        TypeOntology g = random_dag(n, 4, rng);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string id = node_id(i);
            const std::set<std::string> got = ancestors(g, id);
            CHECK(got == reachable_brute(g, id));
            CHECK(got.count(id) == 0);
            CHECK(got.size() < g.node_count());
        }
    }
}

TEST_CASE("ontology and index serialization round-trips byte-identically") {
    PipelineFixture fx = chemistry_fixture();

    std::ostringstream onto_a, onto_b;
    save_ontology(onto_a, fx.built.ontology);
    std::istringstream onto_in(onto_a.str());
    TypeOntology loaded = load_ontology(onto_in);
    save_ontology(onto_b, loaded);
    CHECK(onto_a.str() == onto_b.str());
    CHECK(loaded.node_count() == fx.built.ontology.node_count());
    CHECK(loaded.find("Q200")->name == "chemist");
    CHECK(loaded.find("Q900")->dangling);

    std::ostringstream idx_a, idx_b;
    save_index(idx_a, fx.built.index);
    std::istringstream idx_in(idx_a.str());
    EntityTypeIndex idx = load_index(idx_in);
    save_index(idx_b, idx);
    CHECK(idx_a.str() == idx_b.str());
    CHECK(types_of(idx, "Q100") == std::vector<std::string>{"Q200"});
}

TEST_CASE("load_ontology and load_index reject malformed records") {
    std::istringstream bad_onto("{\"type_id\":\"Q1\"}\n");
    CHECK_THROWS_AS(load_ontology(bad_onto), input_error);
    std::istringstream dup(
        "{\"entity_id\":\"Q1\",\"types\":[\"Q2\"]}\n{\"entity_id\":\"Q1\",\"types\":[\"Q3\"]}\n");
    CHECK_THROWS_AS(load_index(dup), input_error);
    std::istringstream empty_types("{\"entity_id\":\"Q1\",\"types\":[]}\n");
    CHECK_THROWS_AS(load_index(empty_types), input_error);
}
