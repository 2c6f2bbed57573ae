/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "besgraph/besgraph.hpp"
#include "support.hpp"

namespace bg = besgraph;
using bg::Decoration;
using bg::Formula;
using bg::Op;

namespace {

bg::GraphNode node(std::string id, Op op, std::set<unsigned> ranks = {}) {
    return bg::GraphNode{id, id, Decoration{op, std::move(ranks)}};
}

bg::EquationSystem application() { return bg::parse_bes(bg::fixtures::application); }

bool has_constraint(const std::vector<bg::BessyViolation> &v, int c) {
    for (const auto &x : v)
        if (x.constraint == c) return true;
    return false;
}

TEST(Bessy, ApplicationQuotientIsBessy) {
    EXPECT_TRUE(bg::is_bessy(bg::minimise_bes(application()).quotient).empty());
}

TEST(Bessy, ConstantWithSuccessor) {
    const auto g = bg::StructureGraph::from_ids({node("a", Op::top), node("b", Op::none, {0})},
                                                {{"a", "b"}, {"b", "b"}}, "a");
    EXPECT_TRUE(has_constraint(bg::is_bessy(g), 1));
}

TEST(Bessy, UnrankedCycle) {
    const auto g = bg::StructureGraph::from_ids({node("a", Op::none), node("b", Op::none)},
                                                {{"a", "b"}, {"b", "a"}}, "a");
    const auto v = bg::is_bessy(g);
    EXPECT_TRUE(has_constraint(v, 2));
    EXPECT_TRUE(has_constraint(v, 5));
    EXPECT_THROW(bg::require_bessy(g), bg::PreconditionError);
}

TEST(Bessy, RankInterval) {
    const auto g = bg::StructureGraph::from_ids({node("a", Op::none, {2}), node("b", Op::none, {4})},
                                                {{"a", "b"}, {"b", "a"}}, "a");
    EXPECT_TRUE(has_constraint(bg::is_bessy(g), 4));
}

TEST(Bessy, SeveralSuccessorsNeedAnOperator) {
    const auto g = bg::StructureGraph::from_ids({node("a", Op::none, {0}), node("b", Op::none, {0})},
                                                {{"a", "a"}, {"a", "b"}, {"b", "b"}}, "a");
    EXPECT_TRUE(has_constraint(bg::is_bessy(g), 3));
}

TEST(Bisimilar, Reflexive) {
    const auto g = bg::build_graph(application());
    const auto w = bg::bisimilar(g, g);
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->initial_related);
    EXPECT_TRUE(bg::is_bisimulation(g, g, w->pairs));
}

TEST(Bisimilar, IdempotencyIsNotIdentified) {
    for (const char *sign : {"mu", "nu"}) {
        const auto a = bg::parse_bes(std::string(sign) + " X = X && X;");
        const auto b = bg::parse_bes(std::string(sign) + " X = X;");
        EXPECT_FALSE(bg::bisimilar(bg::build_graph(a), bg::build_graph(b))) << sign;
        EXPECT_EQ(bg::solve_gauss(a), bg::solve_gauss(b)) << sign;
    }
}

TEST(Bisimilar, AssociativityInContext) {
    const auto e = bg::parse_bes("nu X = Y; mu Y = Z || X; nu Z = X && Z;");
    const auto f = bg::parse_formula("(X && Y) && Z"), f2 = bg::parse_formula("X && (Y && Z)");
    const auto w = bg::bisimilar_in_context(e, f, e, f2);
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->initial_related);
}

TEST(Bisimilar, ApplicationVariables) {
    const auto e = application();
    auto related = [&](const char *a, const char *b) {
        return bg::bisimilar_in_context(e, Formula::variable(a), e, Formula::variable(b)).has_value();
    };
    EXPECT_TRUE(related("X_s0", "X_s1"));
    EXPECT_TRUE(related("Z_s0", "Z_s2"));
    EXPECT_TRUE(related("Z_s1", "Z_s2"));
    EXPECT_FALSE(related("X_s0", "Y_s0"));
    EXPECT_FALSE(related("X_s0", "X_s2"));
}

TEST(Minimize, Application) {
    const auto g = bg::build_graph(application());
    EXPECT_EQ(g.size(), 12u);
    const auto q = bg::minimize(g);
    EXPECT_EQ(q.graph.size(), 7u);
    std::set<std::string> labels;
    for (const auto &n : q.graph.nodes()) labels.insert(n.label);
    EXPECT_EQ(labels, (std::set<std::string>{"X_s0", "Y_s0", "X_s0 && Z_s1", "X_s2", "Y_s2", "Z_s0", "true"}));
    const auto w = bg::bisimilar(g, q.graph);
    ASSERT_TRUE(w);
    EXPECT_TRUE(bg::is_bisimulation(g, q.graph, w->pairs));
}

TEST(Minimize, ExampleGraphIsAlreadyMinimal) {
    const auto g = bg::build_graph(bg::parse_bes(bg::fixtures::example_structure_graph));
    const auto q = bg::minimize(g);
    EXPECT_EQ(q.graph.size(), 5u);
    EXPECT_TRUE(bg::graph_isomorphic(g, q.graph));
    for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v) EXPECT_FALSE(bg::testing::naive_bisimilar(g, u, g, v));
}

TEST(Minimize, MinimalGraphIsAFixpoint) {
    const auto q = bg::minimize(bg::build_graph(application())).graph;
    EXPECT_TRUE(bg::graph_isomorphic(bg::minimize(q).graph, q));
}

TEST(Term, Examples) {
    const auto q = bg::minimise_bes(application()).quotient;
    bg::GraphTranslator tr(q);
    const std::size_t top = *q.find_label("true");
    EXPECT_EQ(tr.term(top), Formula::truth());
    const std::size_t x = *q.find_label("X_s0");
    EXPECT_EQ(tr.term(x), Formula::variable("X_X_s0"));
    const std::size_t conj = *q.find_label("X_s0 && Z_s1");
    EXPECT_EQ(tr.term(conj), bg::parse_formula("X_X_s0 && X_Z_s0"));
    EXPECT_EQ(tr.rhs(*q.find_label("Y_s0")), bg::parse_formula("(X_X_s0 && X_Z_s0) || X_Y_s0"));
    EXPECT_EQ(tr.rhs(*q.find_label("Y_s2")), Formula::truth());
    EXPECT_EQ(tr.rhs(x), Formula::variable("X_Y_s0"));
}

TEST(Term, MeetIsOrderIndependent) {
    const std::vector<Formula> a{Formula::variable("B"), Formula::variable("A"), Formula::truth()};
    const std::vector<Formula> b{Formula::truth(), Formula::variable("A"), Formula::variable("B")};
    EXPECT_EQ(bg::meet(a), bg::meet(b));
    EXPECT_EQ(bg::join(a), bg::join(b));
    EXPECT_EQ(bg::meet({Formula::variable("A"), Formula::variable("A")}), Formula::variable("A"));
}

TEST(GraphToBes, ApplicationQuotient) {
    const auto m = bg::minimise_bes(application());
    EXPECT_EQ(bg::print_bes(m.system), "nu X_X_s0 = X_Y_s0;\n"
                                       "nu X_X_s2 = X_Y_s2;\n"
                                       "mu X_Y_s0 = (X_X_s0 && X_Z_s0) || X_Y_s0;\n"
                                       "mu X_Y_s2 = true;\n"
                                       "nu X_Z_s0 = X_Z_s0;\n");
    EXPECT_EQ(bg::size(m.system), 14u);
    EXPECT_EQ(m.formula, Formula::variable("X_X_s0"));
    EXPECT_EQ(m.legend.at("X_Z_s0"), (std::vector<std::string>{"Z_s0", "Z_s1", "Z_s2"}));
}

TEST(GraphToBes, SingleSelfLoop) {
    const auto g = bg::StructureGraph::from_ids({node("u", Op::none, {0})}, {{"u", "u"}}, "u");
    const auto bt = bg::graph_to_bes(g);
    ASSERT_EQ(bt.system.size(), 1u);
    EXPECT_EQ(bt.system[0].sign, bg::Fixpoint::nu);
    EXPECT_EQ(bt.system[0].rhs, Formula::variable(bt.system[0].lhs));
    EXPECT_EQ(bt.formula, Formula::variable(bt.system[0].lhs));
}

TEST(GraphToBes, ExampleGraph) {
    const auto e = bg::parse_bes(bg::fixtures::example_structure_graph);
    const auto g = bg::build_graph(e);
    const auto bt = bg::graph_to_bes(g);
    EXPECT_EQ(bt.system.size(), 4u);
    const auto s = bg::solve_oracle(bt.system);
    for (const auto &eq : e) EXPECT_FALSE(s.at(*bt.variable_of[*g.find_label(eq.lhs)]));
}

TEST(GraphToBes, RefusesMultiRankAndNonBessy) {
    const auto multi = bg::StructureGraph::from_ids({node("u", Op::none, {0, 1})}, {{"u", "u"}}, "u");
    EXPECT_TRUE(bg::is_bessy(multi).empty());
    EXPECT_THROW(bg::graph_to_bes(multi), bg::PreconditionError);
    const auto cyc = bg::StructureGraph::from_ids({node("a", Op::and_sym), node("b", Op::and_sym)},
                                                  {{"a", "b"}, {"b", "a"}}, "a");
    EXPECT_THROW(bg::graph_to_bes(cyc), bg::PreconditionError);
}

TEST(Isomorphism, Examples) {
    const auto g = bg::build_graph(application());
    EXPECT_TRUE(bg::graph_isomorphic(g, g));
    const auto one = bg::StructureGraph::from_ids({node("u", Op::none, {0})}, {{"u", "u"}}, "u");
    const auto two = bg::StructureGraph::from_ids({node("u", Op::none, {0}), node("v", Op::none, {0})},
                                                  {{"u", "v"}, {"v", "u"}}, "u");
    EXPECT_FALSE(bg::graph_isomorphic(one, two));
    EXPECT_TRUE(bg::bisimilar(one, two));
}

TEST(DependencyGraph, Examples) {
    const auto d = bg::to_dependency_graph(bg::parse_bes("mu X = AND{X, Y}; nu Y = Y;"));
    EXPECT_EQ(d.edges, (std::set<std::pair<std::string, std::string>>{{"X", "X"}, {"X", "Y"}, {"Y", "Y"}}));
    EXPECT_EQ(d.logic.at("X"), Op::and_sym);
    EXPECT_EQ(d.logic.at("Y"), Op::none);

    const auto single = bg::to_dependency_graph(bg::parse_bes("nu X = OR{X};"));
    EXPECT_EQ(single.vertices.size(), 1u);
    EXPECT_EQ(single.logic.at("X"), Op::or_sym);
    EXPECT_EQ(single.rank.at("X"), 0u);

    const auto mutex = bg::to_srf(bg::parse_bes(bg::fixtures::mutex));
    EXPECT_EQ(bg::to_dependency_graph(mutex).vertices.size(), mutex.size());
}

TEST(Properties, BisimulationAgainstNaiveOracle) {
    const auto seed = bg::testing::base_seed() ^ 0xb151;
    for (std::size_t i = 0; i < bg::testing::case_count(200); ++i) {
        bg::GenConfig cfg;
        cfg.seed = seed + i;
        cfg.variable_count = 2 + i % 9;
        const auto g = bg::gen_graph(cfg);
        cfg.seed = seed + i + 7777;
        const auto h = bg::gen_graph(cfg);
        ASSERT_EQ(bg::bisimilar(g, h).has_value(), bg::testing::naive_bisimilar(g, h)) << "seed " << seed + i;
        const auto p = bg::bisimulation_partition(g);
        for (std::size_t u = 0; u < g.size(); ++u)
            for (std::size_t v = 0; v < g.size(); ++v)
                ASSERT_EQ(p.block_of[u] == p.block_of[v], bg::testing::naive_bisimilar(g, u, g, v));
    }
}

TEST(Properties, BisimilarityIsAnEquivalence) {
    const auto seed = bg::testing::base_seed() ^ 0xe9;
    for (std::size_t i = 0; i < bg::testing::case_count(100); ++i) {
        bg::GenConfig cfg;
        cfg.variable_count = 3;
        cfg.seed = seed + i;
        const auto a = bg::gen_graph(cfg);
        cfg.seed += 1000;
        const auto b = bg::gen_graph(cfg);
        cfg.seed += 1000;
        const auto c = bg::gen_graph(cfg);
        ASSERT_TRUE(bg::bisimilar(a, a));
        const auto ab = bg::bisimilar(a, b), ba = bg::bisimilar(b, a);
        ASSERT_EQ(ab.has_value(), ba.has_value());
        if (ab) {
            std::vector<std::pair<std::size_t, std::size_t>> transposed;
            for (auto [u, v] : ab->pairs) transposed.emplace_back(v, u);
            ASSERT_TRUE(bg::is_bisimulation(b, a, transposed));
        }
        if (ab && bg::bisimilar(b, c)) {
            ASSERT_TRUE(bg::bisimilar(a, c));
        }
    }
}

TEST(Properties, MinimisationIsSoundCoarseAndBessyPreserving) {
    const auto seed = bg::testing::base_seed() ^ 0x3141;
    for (std::size_t i = 0; i < bg::testing::case_count(200); ++i) {
        const auto e = bg::gen_bes(bg::testing::random_config(seed + i));
        const auto g = bg::build_graph(e);
        const auto q = bg::minimize(g);
        ASSERT_TRUE(bg::is_bessy(q.graph).empty()) << bg::print_bes(e);
        const auto w = bg::bisimilar(g, q.graph);
        ASSERT_TRUE(w && w->initial_related);
        if (q.graph.size() > 20) continue;
        for (std::size_t u = 0; u < q.graph.size(); ++u)
            for (std::size_t v = u + 1; v < q.graph.size(); ++v)
                ASSERT_FALSE(bg::bisimilar_nodes(q.graph, u, v)) << bg::print_bes(e);
    }
}

TEST(Properties, BackTranslationKeepsTheSolution) {
    const auto seed = bg::testing::base_seed() ^ 0x7a;
    for (std::size_t i = 0; i < bg::testing::case_count(200); ++i) {
        const auto cfg = bg::testing::random_config(seed + i);
        const auto e = bg::gen_bes(cfg);
        const auto f = bg::gen_formula(cfg, i);
        const auto g = bg::build_graph(e, f);
        const auto bt = bg::graph_to_bes(g);
        ASSERT_EQ(bg::solve_formula(bt.system, bt.formula), bg::solve_formula(e, f))
            << "seed " << cfg.seed << "\n" << bg::print_bes(e) << bg::to_string(f);
        ASSERT_EQ(bg::GraphTranslator(g).term(g.init()), bt.formula);
    }
}

} // namespace
