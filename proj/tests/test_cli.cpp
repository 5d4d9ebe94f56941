#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trichain/sysio.hpp"

#include <fstream>
#include <sstream>

#include "test_util.hpp"

using namespace tt;

namespace {

std::string read_data(const std::string& name) {
    std::ifstream in(std::string(TRICHAIN_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("parse_system on the running example") {
    SystemFile sys = parse_system("vars: x y\nchain:\nx^3 - x^2 + 2\n(x^5+x)*y^3 - x^3*y^2\n");
    CHECK(sys.vars.names() == std::vector<std::string>{"x", "y"});
    REQUIRE(sys.chain.size() == 2);
    CHECK(sys.chain.poly(0) == P("x^3-x^2+2", sys.vars));
    CHECK(sys.chain.poly(1) == P("(x^5+x)*y^3-x^3*y^2", sys.vars));
}

TEST_CASE("parse_system trivial and error cases") {
    SystemFile sys = parse_system("vars: x\nchain:\nx\n");
    CHECK(sys.chain.size() == 1);

    CHECK_THROWS_AS(parse_system("vars: x y\nchain:\ny\nx\n"), ParseError);       // not ascending
    CHECK_THROWS_AS(parse_system("vars: x y\nchain:\nx\nx+1\n"), ParseError);     // duplicate lv
    CHECK_THROWS_AS(parse_system("vars: x\nchain:\n5\n"), ParseError);            // constant
    CHECK_THROWS_AS(parse_system("vars: x\nchain:\nx^\n"), ParseError);           // syntax
    CHECK_THROWS_AS(parse_system("chain:\nx\n"), ParseError);                     // missing vars
    try {
        parse_system("vars: x y\nchain:\nx\n2y\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
}

TEST_CASE("comments and blank lines are ignored") {
    SystemFile sys = parse_system("# corpus file\nvars: x y\n\nchain:\nx  # level 1\ny\n");
    CHECK(sys.chain.size() == 2);
}

TEST_CASE("decompose document and JSON round-trip") {
    SystemFile sys = parse_system(read_data("ex47.sys"));
    ResultDocument doc = run_decompose(sys);
    CHECK(doc.command == "decompose");
    REQUIRE(doc.branches.has_value());
    CHECK(doc.branches->size() == 4);
    std::vector<std::vector<int>> arrays;
    for (const auto& b : *doc.branches) arrays.push_back(b.array);
    std::sort(arrays.begin(), arrays.end());
    CHECK(arrays == std::vector<std::vector<int>>{{1, 1}, {1, 1}, {1, 2}, {1, 2}});

    ResultDocument back = document_from_json(document_to_json(doc));
    CHECK(back == doc);
}

TEST_CASE("mult document reports array and product") {
    SystemFile sys = parse_system(read_data("t2.sys"));
    ResultDocument doc = run_mult(sys, "1,1");
    CHECK(doc.product == 20);
    REQUIRE(doc.array.has_value());
    CHECK(*doc.array == std::vector<int>{20, 1});
    CHECK(document_from_json(document_to_json(doc)) == doc);

    CHECK_THROWS_AS(run_mult(parse_system(read_data("t1.sys")), "5,5"), std::domain_error);
}

TEST_CASE("isolate document") {
    SystemFile sys = parse_system(read_data("ex47.sys"));
    RunOptions opt;
    opt.width = Rational(1, 64);
    ResultDocument doc = run_isolate(sys, opt);
    REQUIRE(doc.zeros.has_value());
    REQUIRE(doc.zeros->size() == 2);
    CHECK((*doc.zeros)[0].multiplicity == 2);
    CHECK((*doc.zeros)[1].multiplicity == 1);
    for (const auto& z : *doc.zeros)
        for (const auto& iv : z.box) {
            Rational lo = rational_from_string(iv[0]), hi = rational_from_string(iv[1]);
            CHECK(hi - lo <= Rational(1, 64));
        }
    CHECK(document_from_json(document_to_json(doc)) == doc);
}

TEST_CASE("oracle document") {
    SystemFile sys = parse_system(read_data("t1.sys"));
    ResultDocument doc = run_oracle(sys, "1,1");
    CHECK(doc.multiplicity == 1);
    CHECK(document_from_json(document_to_json(doc)) == doc);
    CHECK_THROWS_AS(run_oracle(sys, "1+1i,0"), std::domain_error);  // rational points only
}

TEST_CASE("check validates the whole shipped corpus") {
    for (const char* name : {"ex47.sys", "t1.sys", "t2.sys", "t3.sys", "t4.sys", "t5.sys",
                             "t6.sys", "t7.sys", "t8.sys", "t9.sys", "t10.sys"}) {
        SystemFile sys = parse_system(read_data(name));
        ResultDocument doc = run_check(sys);
        INFO(name);
        CHECK(doc.regular == true);
        CHECK(document_from_json(document_to_json(doc)) == doc);
    }
}

TEST_CASE("check flags a non-regular chain") {
    SystemFile sys = parse_system("vars: x y\nchain:\nx\nx*y-1\n");
    CHECK(run_check(sys).regular == false);
}
