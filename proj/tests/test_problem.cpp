#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "tsuic/problem.hpp"

#include "fixtures.hpp"

using namespace tsuic;

TEST_CASE("parse_problem reads the worked three-receiver instance") {
    Problem p = parse_problem(fixtures::kExample1);
    CHECK(p.n == 3);
    CHECK(p.t == 1);
    CHECK(p.side_info[0] == 0b010);
    CHECK(p.side_info[1] == 0b001);
    CHECK(p.side_info[2] == 0b001);
    CHECK(p.m1 == 0b101);
    CHECK(p.m2 == 0b110);
}

TEST_CASE("parse_problem defaults t to 1 and accepts whitespace") {
    Problem p = parse_problem(" (1 | 2), (2|1), (3|1) ; M1 = {1,3}; M2={2,3} ");
    CHECK(p.t == 1);
    CHECK(p.side_info[2] == 0b001);
}

TEST_CASE("parse_problem rejects malformed input") {
    CHECK_THROWS_AS(parse_problem("(1|1); M1={1}; M2={1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("(1|),(1|); M1={1}; M2={1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("(1|4); M1={1}; M2={1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("(1|),(2|); M1={1}; M2={1}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("(1|); M1={1}; M2={1}; t=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_problem("(1|),(2|1); M1={1,2}; M2={2}; t=9"), std::invalid_argument);
}

TEST_CASE("to_text round trips through parse_problem") {
    for (const std::string& text : {fixtures::kExample1, fixtures::kFig5, fixtures::kFig6,
                                    fixtures::kFig7, fixtures::kFig8}) {
        Problem p = parse_problem(text);
        Problem q = parse_problem(to_text(p));
        CHECK(q.n == p.n);
        CHECK(q.t == p.t);
        CHECK(q.side_info == p.side_info);
        CHECK(q.m1 == p.m1);
        CHECK(q.m2 == p.m2);
    }
}

TEST_CASE("partition separates private and common messages") {
    Problem p = parse_problem(fixtures::kFig5);
    MessagePartition mp = partition(p);
    CHECK(mp.p1 == 0b00110);
    CHECK(mp.p2 == 0b11000);
    CHECK(mp.p3 == 0b00001);
    CHECK(mp.d1 == std::vector<int>{1, 2});
    CHECK(mp.d2 == std::vector<int>{3, 4});
    CHECK(mp.d3 == std::vector<int>{0});
}

TEST_CASE("sender_constraint_graph joins the private vertex sets completely") {
    Problem p = parse_problem(fixtures::kExample1);
    SenderConstraintGraph sg = sender_constraint_graph(p, partition(p));
    CHECK(sg.n == 3);
    REQUIRE(sg.edges.size() == 1);
    CHECK(sg.edges[0] == std::pair<int, int>{0, 1});

    Problem q = parse_problem(fixtures::kFig5);
    SenderConstraintGraph sq = sender_constraint_graph(q, partition(q));
    CHECK(sq.edges.size() == 4); // |V(D1)| * |V(D2)| = 2 * 2
}

TEST_CASE("interaction_map reproduces the worked interaction digraphs") {
    auto arcs_of = [](const std::string& text) {
        Problem p = parse_problem(text);
        return interaction_map(p, partition(p));
    };

    InteractionDigraph h1 = arcs_of(fixtures::kExample1);
    CHECK(h1.has(1, 2));
    CHECK(h1.has(2, 1));
    CHECK(h1.has(3, 1));
    CHECK_FALSE(h1.has(1, 3));
    CHECK_FALSE(h1.has(2, 3));
    CHECK_FALSE(h1.has(3, 2));

    InteractionDigraph h5 = arcs_of(fixtures::kFig5);
    CHECK(h5.has(1, 2));
    CHECK(h5.has(1, 3));
    CHECK(h5.has(2, 3));
    CHECK_FALSE(h5.is_cyclic());

    InteractionDigraph h6 = arcs_of(fixtures::kFig6);
    CHECK(h6.has(1, 3));
    CHECK(h6.has(3, 1));
    CHECK(h6.has(2, 3));
    CHECK(h6.has(3, 2));
    CHECK_FALSE(h6.has(1, 2));

    InteractionDigraph h7 = arcs_of(fixtures::kFig7);
    CHECK(h7.has(1, 3));
    CHECK(h7.has(3, 1));
    CHECK(h7.has(2, 1));
    CHECK(h7.out_degree(3) == 1);

    InteractionDigraph h8 = arcs_of(fixtures::kFig8);
    CHECK(h8.has(1, 2));
    CHECK(h8.has(2, 1));
    CHECK(h8.out_degree(3) == 0);
    CHECK(h8.in_degree(3) == 0);
}

TEST_CASE("classify assigns the expected case and catalog labels") {
    auto cls_of = [](const std::string& text) {
        Problem p = parse_problem(text);
        return classify(interaction_map(p, partition(p)));
    };

    InteractionClass c1 = cls_of(fixtures::kExample1);
    CHECK(c1.case_label == CaseLabel::IID);
    REQUIRE(c1.paper_label.has_value());
    CHECK(*c1.paper_label == "H_33");

    InteractionClass c5 = cls_of(fixtures::kFig5);
    CHECK(c5.case_label == CaseLabel::I);
    REQUIRE(c5.paper_label.has_value());
    CHECK(*c5.paper_label == "H_7");
    CHECK_FALSE(c5.paper_label_inferred);

    InteractionClass c6 = cls_of(fixtures::kFig6);
    CHECK(c6.case_label == CaseLabel::IIB);
    REQUIRE(c6.paper_label.has_value());
    CHECK(*c6.paper_label == "H_18");

    InteractionClass c7 = cls_of(fixtures::kFig7);
    CHECK(c7.case_label == CaseLabel::IIC);
    REQUIRE(c7.paper_label.has_value());
    CHECK(*c7.paper_label == "H_23");

    InteractionClass c8 = cls_of(fixtures::kFig8);
    CHECK(c8.case_label == CaseLabel::IIA);
    REQUIRE(c8.paper_label.has_value());
    CHECK(*c8.paper_label == "H_15");
}

TEST_CASE("enumerate_classes yields 36 canonical classes with the known case counts") {
    std::vector<InteractionClass> classes = enumerate_classes();
    REQUIRE(classes.size() == 36);

    std::map<CaseLabel, int> counts;
    std::set<uint8_t> seen;
    for (const InteractionClass& c : classes) {
        ++counts[c.case_label];
        CHECK(seen.insert(c.canonical_arcs).second);
        InteractionDigraph h{c.canonical_arcs};
        CHECK(h.canonical() == c.canonical_arcs);
    }
    CHECK(counts[CaseLabel::I] == 14);
    CHECK(counts[CaseLabel::IIA] == 3);
    CHECK(counts[CaseLabel::IIB] == 3);
    CHECK(counts[CaseLabel::IIC] == 12);
    CHECK(counts[CaseLabel::IID] == 4);

    for (size_t i = 1; i < classes.size(); ++i)
        CHECK(classes[i - 1].canonical_arcs < classes[i].canonical_arcs);
}

TEST_CASE("classification is invariant under swapping the private groups") {
    for (int mask = 0; mask < 64; ++mask) {
        InteractionDigraph h{static_cast<uint8_t>(mask)};
        InteractionClass a = classify(h);
        InteractionClass b = classify(h.swapped());
        CHECK(a.class_id == b.class_id);
        CHECK(a.case_label == b.case_label);
    }
}

TEST_CASE("swapping twice restores the interaction digraph") {
    for (int mask = 0; mask < 64; ++mask) {
        InteractionDigraph h{static_cast<uint8_t>(mask)};
        CHECK(h.swapped().swapped().arcs == h.arcs);
    }
}

TEST_CASE("fully participated detection") {
    Problem p5 = parse_problem(fixtures::kFig5);
    CHECK(is_fully_participated(p5, partition(p5)));

    Problem p7 = parse_problem(fixtures::kFig7);
    CHECK(is_fully_participated(p7, partition(p7)));

    // Receiver 2 of group D1 loses its knowledge of x4: the arc (1,2) stays
    // (receiver 3 still supplies it) but is no longer fully participated.
    Problem broken = parse_problem("(1|),(2|1,5),(3|1,2,4,5),(4|1,5),(5|1,4); M1={1,2,3}; M2={1,4,5}");
    MessagePartition mpb = partition(broken);
    CHECK(interaction_map(broken, mpb).has(1, 2));
    CHECK_FALSE(is_fully_participated(broken, mpb));
}

TEST_CASE("case predicates cover the defining patterns") {
    auto label_of = [](uint8_t arcs) { return classify(InteractionDigraph{arcs}).case_label; };
    auto mask_of = [](std::initializer_list<std::pair<int, int>> arcs) {
        InteractionDigraph h;
        for (auto [i, j] : arcs) h.add(i, j);
        return h.arcs;
    };

    CHECK(label_of(0) == CaseLabel::I);                                  // empty
    CHECK(label_of(mask_of({{1, 2}, {2, 1}})) == CaseLabel::IIA);        // 2-cycle, group 3 silent
    CHECK(label_of(mask_of({{1, 3}, {3, 1}, {2, 3}, {3, 2}})) == CaseLabel::IIB);
    CHECK(label_of(mask_of({{1, 3}, {3, 1}})) == CaseLabel::IIC);
    CHECK(label_of(mask_of({{2, 3}, {3, 2}, {1, 2}})) == CaseLabel::IIC);
    CHECK(label_of(mask_of({{1, 2}, {2, 1}, {3, 1}})) == CaseLabel::IID);
    CHECK(label_of(mask_of({{1, 2}, {2, 3}, {3, 1}})) == CaseLabel::IID); // 3-cycle
}
