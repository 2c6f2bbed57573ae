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
using bg::Formula;

namespace {

bg::Assignment all(const bg::EquationSystem &e, bool v) {
    bg::Assignment a;
    for (const auto &eq : e) a[eq.lhs] = v;
    return a;
}

TEST(EvalFormula, Examples) {
    const bg::Assignment a{{"X", true}, {"Y", false}, {"Z", true}};
    EXPECT_TRUE(bg::eval_formula(bg::parse_formula("(X && Y) || Z"), a));
    EXPECT_TRUE(bg::eval_formula(Formula::truth(), bg::Assignment{}));
    EXPECT_TRUE(bg::eval_formula(Formula::and_set({"X", "Y"}), bg::Assignment{{"X", true}, {"Y", true}}));
    EXPECT_FALSE(bg::eval_formula(Formula::and_set({"X", "Y"}), a));
    EXPECT_TRUE(bg::eval_formula(Formula::or_set({"X", "Y"}), a));
}

TEST(EvalFormula, UnboundVariableIsAnError) {
    EXPECT_THROW(bg::eval_formula(bg::parse_formula("X && Q"), bg::Assignment{{"X", false}}), bg::Error);
    EXPECT_TRUE(bg::eval_formula(bg::parse_formula("Q"), bg::Environment::constant(true)));
}

TEST(SolveRecursive, OrderSensitivity) {
    const auto e1 = bg::parse_bes("mu X = Y; nu Y = X;");
    const auto e2 = bg::parse_bes("nu Y = X; mu X = Y;");
    const auto s1 = bg::solve_recursive(e1, bg::Environment::constant(false));
    const auto s2 = bg::solve_recursive(e2, bg::Environment::constant(false));
    EXPECT_FALSE(s1("X"));
    EXPECT_FALSE(s1("Y"));
    EXPECT_TRUE(s2("X"));
    EXPECT_TRUE(s2("Y"));
    EXPECT_NE(bg::solve_oracle(e1), bg::solve_oracle(e2));
}

TEST(SolveRecursive, OpenSystemDependsOnEnvironment) {
    const auto e = bg::parse_bes("mu X = X || Q;");
    EXPECT_TRUE(bg::solve_recursive(e, bg::Environment::constant(true))("X"));
    EXPECT_FALSE(bg::solve_recursive(e, bg::Environment::constant(false))("X"));
    EXPECT_THROW(bg::solve_oracle(e), bg::PreconditionError);
    EXPECT_THROW(bg::solve_gauss(e), bg::PreconditionError);
}

TEST(Solve, Mutex) {
    const auto e = bg::parse_bes(bg::fixtures::mutex);
    EXPECT_EQ(bg::solve_oracle(e), all(e, true));
    EXPECT_EQ(bg::solve_gauss(e), all(e, true));
}

TEST(Solve, Application) {
    const auto e = bg::parse_bes(bg::fixtures::application);
    EXPECT_EQ(bg::solve_gauss(e), all(e, true));
    EXPECT_EQ(bg::solve_oracle(e), all(e, true));
}

TEST(Solve, ExampleSystemIsAllFalse) {
    const auto e = bg::parse_bes(bg::fixtures::example_structure_graph);
    EXPECT_EQ(bg::solve_oracle(e), all(e, false));
    EXPECT_EQ(bg::solve_gauss(e), all(e, false));
}

TEST(Solve, Trivial) {
    EXPECT_EQ(bg::solve_gauss(bg::parse_bes("nu X = X;")), (bg::Assignment{{"X", true}}));
    EXPECT_EQ(bg::solve_gauss(bg::parse_bes("mu X = X;")), (bg::Assignment{{"X", false}}));
    EXPECT_EQ(bg::solve_gauss(bg::parse_bes("mu X = AND{X, Y}; nu Y = OR{Y};")),
              (bg::Assignment{{"X", false}, {"Y", true}}));
}

TEST(SolveFormula, Examples) {
    const auto app = bg::parse_bes(bg::fixtures::application);
    EXPECT_TRUE(bg::solve_formula(app, bg::parse_formula("X_s1 && Z_s0")));
    EXPECT_TRUE(bg::solve_formula(app, Formula::truth()));
    EXPECT_TRUE(bg::solve_formula(bg::parse_bes("mu X = X;"), Formula::truth()));
    EXPECT_FALSE(bg::solve_formula(bg::parse_bes("mu X = Y; nu Y = X;"), bg::parse_formula("X || Y")));
    EXPECT_FALSE(bg::solve_formula(bg::parse_bes("mu X = Y; nu Y = X;"), bg::parse_formula("X || Y"),
                                   bg::SolveMethod::oracle));
}

TEST(Properties, GaussAgreesWithOracleInBothEnvironments) {
    const auto seed = bg::testing::base_seed() ^ 0x5011;
    for (std::size_t i = 0; i < bg::testing::case_count(300); ++i) {
        const auto cfg = bg::testing::random_config(seed + i);
        const auto e = bg::gen_bes(cfg);
        const auto gauss = bg::solve_gauss(e);
        const auto lo = bg::solve_recursive(e, bg::Environment::constant(false));
        const auto hi = bg::solve_recursive(e, bg::Environment::constant(true));
        for (const auto &eq : e) {
            ASSERT_EQ(gauss.at(eq.lhs), lo(eq.lhs)) << "seed " << cfg.seed << "\n" << bg::print_bes(e);
            ASSERT_EQ(gauss.at(eq.lhs), hi(eq.lhs)) << "seed " << cfg.seed << "\n" << bg::print_bes(e);
        }
    }
}

TEST(Properties, SolutionSatisfiesEveryEquation) {
    const auto seed = bg::testing::base_seed() ^ 0x10ca1;
    for (std::size_t i = 0; i < bg::testing::case_count(300); ++i) {
        const auto e = bg::gen_bes(bg::testing::random_config(seed + i));
        const auto a = bg::solve_gauss(e);
        for (const auto &eq : e) ASSERT_EQ(bg::eval_formula(eq.rhs, a), a.at(eq.lhs)) << bg::print_bes(e);
    }
}

TEST(Properties, EvalIsMonotone) {
    bg::RandomStream s(bg::testing::base_seed() ^ 0x307);
    for (std::size_t i = 0; i < bg::testing::case_count(500); ++i) {
        bg::GenConfig cfg;
        cfg.variable_count = 5;
        cfg.max_rhs_depth = 5;
        cfg.constant_probability = 0.1;
        const Formula f = bg::gen_formula(cfg, i);
        bg::Assignment a;
        for (std::size_t k = 0; k < cfg.variable_count; ++k) a[bg::generated_variable(k)] = s.chance(0.5);
        const bool before = bg::eval_formula(f, a);
        for (auto &[x, v] : a) {
            if (v) continue;
            v = true;
            ASSERT_TRUE(!before || bg::eval_formula(f, a)) << bg::to_string(f);
            v = false;
        }
    }
}

} // namespace
