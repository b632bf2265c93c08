#include "hsubdiv/construct.hpp"

#include "hsubdiv/catalog.hpp"
#include "hsubdiv/errors.hpp"
#include "hsubdiv/reproduction.hpp"

#include <catch_amalgamated.hpp>

using namespace hsubdiv;

namespace {

const char* kMerrienTemplate = R"({
  "d": 2,
  "name": "merrien",
  "matrices": {
    "-1": [["1/2", "?lambda"], ["?c", "?q"]],
    "0":  [["1", "0"], ["0", "1/2"]],
    "1":  [["1/2", "-?lambda"], ["-?c", "?q"]]
  }
})";

const char* kExtendedTemplate = R"({
  "d": 2,
  "name": "extended",
  "matrices": {
    "-3": [["?b1", "?b2"], ["?b3", "?b4"]],
    "-1": [["?a1", "?a2"], ["?a3", "?a4"]],
    "0":  [["1", "0"], ["0", "1/2"]],
    "1":  [["?a1", "-?a2"], ["-?a3", "?a4"]],
    "3":  [["?b1", "-?b2"], ["-?b3", "?b4"]]
  }
})";

// The Merrien template keeps (1-mu)/2 and mu/4 as independent unknowns c, q;
// membership checks below substitute the aliased values.

} // namespace

TEST_CASE("template parsing and unknown ordering") {
    const MaskTemplate tpl = load_template(kExtendedTemplate);
    CHECK(tpl.d == 2);
    CHECK(tpl.unknown_names() ==
          std::vector<std::string>{"b1", "b2", "b3", "b4", "a1", "a2", "a3", "a4"});
    const HermiteMask inst = instantiate(
        tpl, {{"b1", rat(0)}, {"b2", rat(1, 384)}, {"b3", rat(0)}, {"b4", rat(1, 1408)},
              {"a1", rat(1, 2)}, {"a2", rat(-17, 128)}, {"a3", rat(135, 176)},
              {"a4", rat(-189, 1408)}});
    CHECK(inst.coeff(1)(0, 1) == rat(17, 128)); // mirrored sign applied
    CHECK_THROWS_AS(instantiate(tpl, {}), InputError);
}

TEST_CASE("template rejections") {
    CHECK_THROWS_WITH(load_template(R"({"d": 2, "matrices": {"0": [["?","0"],["0","1"]]}})"),
                      Catch::Matchers::ContainsSubstring("empty unknown name"));
    CHECK_THROWS_WITH(load_template(R"({"d": 2, "matrices": {"0": [["x","0"],["0","1"]]}})"),
                      Catch::Matchers::ContainsSubstring("offset 0"));
    CHECK_THROWS_AS(load_template(R"({"d": 4, "matrices": {}})"), InputError);
}

TEST_CASE("degree-1 system holds for every Merrien parameter pair") {
    const MaskTemplate tpl = load_template(kMerrienTemplate);
    const LinearSystem sys = build_system(tpl, rat(0), 1);
    CHECK(sys.names == std::vector<std::string>{"lambda", "c", "q"});
    CHECK(sys.A.rows() == 8); // constants (4) + degree 1 (4)
    const LinearSolution sol = solve_linear(sys.A, sys.b);
    REQUIRE(sol.kind == LinearSolution::Kind::Parametric);
    // One relation (c + 2q = 1/2) ties the raw entries; it is an identity of
    // the two-parameter family, so lambda and mu stay unconstrained.
    CHECK(sol.nullspace.size() == 2);
    for (const auto& [lambda, mu] : std::vector<std::pair<Rational, Rational>>{
             {rat(1, 7), rat(2, 5)}, {rat(-3), rat(9, 8)}, {rat(0), rat(0)}}) {
        const Vec u{lambda, (1 - mu) / 2, mu / 4};
        CHECK(sys.A * u == sys.b);
    }
}

TEST_CASE("degree-2 system forces lambda = -1/8 and leaves mu free") {
    const MaskTemplate tpl = load_template(kMerrienTemplate);
    const auto res = construct(tpl, rat(0), 2);
    REQUIRE(res.status == ConstructionResult::Status::Parametric);
    CHECK(res.solution.at("lambda") == rat(-1, 8));
    CHECK(res.free_names.size() == 1);
    // membership: any mu satisfies the degree-2 system through c = (1-mu)/2,
    // q = mu/4
    const LinearSystem sys = build_system(tpl, rat(0), 2);
    for (const Rational& mu : {rat(2, 5), rat(-1, 2), rat(7)}) {
        const Vec u{rat(-1, 8), (1 - mu) / 2, mu / 4};
        CHECK(sys.A * u == sys.b);
    }
}

TEST_CASE("degree-4 Merrien system is infeasible") {
    const MaskTemplate tpl = load_template(kMerrienTemplate);
    const auto res = construct(tpl, rat(0), 4);
    CHECK(res.status == ConstructionResult::Status::Infeasible);
    CHECK_FALSE(res.infeasible_row.empty());
    CHECK_FALSE(res.mask.has_value());
}

TEST_CASE("extended template: the degree-5 family has two parameters") {
    const MaskTemplate tpl = load_template(kExtendedTemplate);
    const LinearSystem sys = build_system(tpl, rat(0), 5);
    CHECK(sys.A.rows() == 4 + 5 * 4);
    const LinearSolution sol = solve_linear(sys.A, sys.b);
    REQUIRE(sol.kind == LinearSolution::Kind::Parametric);
    CHECK(sol.nullspace.size() == 2);

    // membership of the published relation set for a grid of (b2, b3)
    for (const auto& [b2, b3] :
         std::vector<std::pair<Rational, Rational>>{{rat(0), rat(0)},
                                                    {rat(1, 384), rat(0)},
                                                    {rat(1, 7), rat(2, 5)}}) {
        const HermiteMask m = extended_interpolatory(b2, b3);
        const Vec u{m.coeff(-3)(0, 0), m.coeff(-3)(0, 1), m.coeff(-3)(1, 0), m.coeff(-3)(1, 1),
                    m.coeff(-1)(0, 0), m.coeff(-1)(0, 1), m.coeff(-1)(1, 0), m.coeff(-1)(1, 1)};
        CHECK(sys.A * u == sys.b);
    }
}

TEST_CASE("binding b2, b3 reproduces the published instance") {
    const MaskTemplate tpl = load_template(kExtendedTemplate);
    const auto res = construct(tpl, rat(0), 5, {{"b2", rat(1, 384)}, {"b3", rat(0)}});
    REQUIRE(res.status == ConstructionResult::Status::Parametric);
    CHECK(res.solution.at("a1") == rat(1, 2));
    CHECK(res.solution.at("a2") == rat(-17, 128));
    CHECK(res.solution.at("a3") == rat(135, 176));
    CHECK(res.solution.at("a4") == rat(-189, 1408));
    CHECK(res.solution.at("b1") == rat(0));
    CHECK(res.solution.at("b4") == rat(1, 1408));
    REQUIRE(res.mask.has_value());
    const auto rep = certify(*res.mask, rat(0), 6);
    REQUIRE(rep.certified_degree.has_value());
    CHECK(*rep.certified_degree >= 5);
}

TEST_CASE("conflicting bindings surface as infeasible with the binding named") {
    const MaskTemplate tpl = load_template(kMerrienTemplate);
    // degree 2 forces lambda = -1/8; binding it elsewhere must conflict
    const auto res = construct(tpl, rat(0), 2, {{"lambda", rat(1, 3)}});
    CHECK(res.status == ConstructionResult::Status::Infeasible);
    CHECK_FALSE(res.infeasible_row.empty());
}

TEST_CASE("bindings must name template unknowns") {
    const MaskTemplate tpl = load_template(kMerrienTemplate);
    CHECK_THROWS_AS(construct(tpl, rat(0), 1, {{"nope", rat(1)}}), InputError);
}

TEST_CASE("primal3 template: degree 3 leaves a three-parameter family") {
    const char* tpl_text = R"({
      "d": 3,
      "name": "primal3",
      "matrices": {
        "-1": [["?l1", "?l2", "?l3"], ["?m1", "?m2", "?m3"], ["?e1", "?e2", "?e3"]],
        "0":  [["1", "0", "0"], ["0", "1/2", "0"], ["0", "0", "1/4"]],
        "1":  [["?l1", "-?l2", "?l3"], ["-?m1", "?m2", "-?m3"], ["?e1", "-?e2", "?e3"]]
      }
    })";
    // The template works on the raw matrix entries (rows already scaled by
    // D), so unknowns here are D-scaled parameters; the solution set still
    // has dimension 3.
    const MaskTemplate tpl = load_template(tpl_text);
    const LinearSystem sys = build_system(tpl, rat(0), 3);
    const LinearSolution sol = solve_linear(sys.A, sys.b);
    REQUIRE(sol.kind == LinearSolution::Kind::Parametric);
    CHECK(sol.nullspace.size() == 3);

    // membership: scaled parameters of a constrained instance solve the system
    const Primal3Params p = degree3_constraints(rat(2, 5), rat(1, 5), rat(1, 7));
    const HermiteMask m = primal3(p);
    Vec u;
    const std::vector<std::string> names = sys.names;
    const Matrix a_minus = m.coeff(-1);
    u = {a_minus(0, 0), a_minus(0, 1), a_minus(0, 2), a_minus(1, 0), a_minus(1, 1),
         a_minus(1, 2), a_minus(2, 0), a_minus(2, 1), a_minus(2, 2)};
    CHECK(sys.A * u == sys.b);

    const auto res = construct(tpl, rat(0), 3);
    REQUIRE(res.status == ConstructionResult::Status::Parametric);
    REQUIRE(res.mask.has_value());
    const auto rep = certify(*res.mask, rat(0), 3);
    REQUIRE(rep.certified_degree.has_value());
    CHECK(*rep.certified_degree >= 3);
}

TEST_CASE("all-fixed template with satisfied conditions solves trivially") {
    const HermiteMask m = merrien(rat(-1, 8), rat(-1, 2));
    const std::string text = save_mask(m);
    // reuse the mask document as a template: every entry is a literal
    const MaskTemplate tpl = load_template(text);
    CHECK(tpl.unknown_names().empty());
    const auto res = construct(tpl, rat(0), 3);
    CHECK(res.status == ConstructionResult::Status::Solved);
    const auto res4 = construct(tpl, rat(0), 4);
    CHECK(res4.status == ConstructionResult::Status::Infeasible);
}
