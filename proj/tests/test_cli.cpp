#include "howe/json_io.hpp"
#include "howe_cli/cli.hpp"
#include "support.hpp"

#include <sstream>

using namespace fixtures;
using howe::cli::run;

namespace {

howe::cli::Outcome call(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    return run(args, in);
}

std::string dump(const Json& j) { return j.dump(); }

} // namespace

TEST_CASE("orbits subcommand") {
    const auto r = call({"orbits", "--space", R"({"base":"C","division":"C","epsilon":-1,"dim":4})", "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["orbits"].size() == 4);
    for (const auto& t : j["orbits"])
        CHECK(tableau_from_json(t).space() == ca(4));
    const auto text = call({"orbits", "--space", R"({"base":"C","division":"C","epsilon":-1,"dim":4})"});
    CHECK(text.out.find("4 orbits") != std::string::npos);
}

TEST_CASE("descend subcommand") {
    const auto op = dump(to_json(ctab(ca(4), {{2, 2}})));
    const auto r = call({"descend", "--orbit-prime", op, "--target-space", dump(to_json(cs(2))), "--json"});
    REQUIRE(r.exit_code == 0);
    const auto j = Json::parse(r.out);
    CHECK(j["a"] == 2);
    CHECK(j["b"] == 0);
    CHECK(tableau_from_json(j["target"]) == zero_orbit(cs(2)));
}

TEST_CASE("stdin payloads") {
    const auto r = call({"stabilizer", "--orbit", "-", "--json"}, dump(to_json(ctab(ca(4), {{2, 1}, {1, 2}}))));
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["stabilizer"]["lie_dim"] == 3);
}

TEST_CASE("exit codes") {
    CHECK(call({"orbits", "--space", "{nope"}).exit_code == 1);
    CHECK(call({"orbits", "--space", R"({"base":"R","division":"R","epsilon":1,"dim":3})"}).exit_code == 1);
    CHECK(call({"orbits", "--bogus", "1"}).exit_code == 1);
    CHECK(call({"frobnicate"}).exit_code == 1);
    CHECK(call({}).exit_code == 1);

    const auto r = call({"descend", "--orbit-prime", dump(to_json(ctab(ca(4), {{4, 1}}))), "--target-space",
                         dump(to_json(cs(2)))});
    CHECK(r.exit_code == 2);
    const auto err = Json::parse(r.out);
    CHECK(err["code"] == "NotInImage");
    CHECK(err.contains("message"));
    CHECK(err.contains("context"));
}

TEST_CASE("JSON output re-parses under the same schema") {
    const auto o = ctab(cs(4), {{3, 1}, {1, 1}});
    const auto pf = call({"pair-factor", "--orbit-prime", dump(to_json(o)), "--target-space", dump(to_json(ca(4))),
                          "--json"});
    REQUIRE(pf.exit_code == 0);
    const auto j = Json::parse(pf.out);
    CHECK(tableau_from_json(j["descent"]["source"]) == o);
    CHECK(j["reduced_pair_dims"]["W_gamma"] == 2);

    const auto orbits = call({"orbits", "--space", dump(to_json(rs(2, 2))), "--json"});
    for (const auto& t : Json::parse(orbits.out)["orbits"])
        CHECK(to_json(tableau_from_json(t)) == t);

    Cycle c = make_cycle(ctab(ca(2), {{2, 1}}), ra(2));
    add_term(c, Tableau(ra(2), {{2, rs(1, 0)}}), 2);
    add_term(c, Tableau(ra(2), {{2, rs(0, 1)}}), 5);
    const auto cl = call({"cycle-lift", "--cycle", dump(to_json(c)), "--orbit-prime", dump(to_json(ctab(cs(3), {{3, 1}}))),
                          "--target-space", dump(to_json(rs(2, 1))), "--json"});
    REQUIRE(cl.exit_code == 0);
    const auto lifted = cycle_from_json(Json::parse(cl.out));
    CHECK(lifted.total() == 2);
    CHECK(to_json(lifted) == Json::parse(cl.out));
}

TEST_CASE("text and JSON modes agree") {
    const auto args = std::vector<std::string>{"range", "--nu", "1", "--space", dump(to_json(ra(4))), "--target-space",
                                               dump(to_json(rs(5, 0)))};
    const auto text = call(args);
    auto json_args = args;
    json_args.push_back("--json");
    const auto j = Json::parse(call(json_args).out);
    CHECK(j["threshold"] == "3/4");
    CHECK(j["in_range"] == true);
    CHECK(text.out.find("3/4") != std::string::npos);
    CHECK(text.out.find("in the convergent range") != std::string::npos);

    const auto w = call({"whittaker", "--orbit", dump(to_json(ctab(ca(4), {{2, 1}, {1, 2}}))), "--json"});
    const auto wt = call({"whittaker", "--orbit", dump(to_json(ctab(ca(4), {{2, 1}, {1, 2}})))});
    const auto wj = Json::parse(w.out);
    CHECK(wt.out.find("dim g_-1 = " + std::to_string(wj["dim_g_minus1"].get<int>())) != std::string::npos);
    CHECK(wt.out.find("Heisenberg") != std::string::npos);
}

TEST_CASE("lift subcommand") {
    const auto r = call({"lift", "--orbit", dump(to_json(zero_orbit(cs(2)))), "--target-space", dump(to_json(ca(4))),
                         "--json"});
    REQUIRE(r.exit_code == 0);
    CHECK(tableau_from_json(Json::parse(r.out)["lift"]) == ctab(ca(4), {{2, 2}}));
}

TEST_CASE("real descent flag") {
    const auto r = call({"descend", "--real", "--orbit-prime", dump(to_json(Tableau(ra(4), {{2, rs(2, 0)}}))),
                         "--target-space", dump(to_json(rs(1, 1))), "--json"});
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.out)["target"].is_null());
}

TEST_CASE("verify is deterministic and passes") {
    const auto a = call({"verify", "--suite", "dim-identity", "--max-dims", "4,6", "--seed", "3"});
    CHECK(a.exit_code == 0);
    CHECK(a.out.find("all pairs pass") != std::string::npos);
    const auto c1 = Json::parse(call({"verify", "--suite", "cycles", "--seed", "5", "--json"}).out);
    const auto c2 = Json::parse(call({"verify", "--suite", "cycles", "--seed", "5", "--json"}).out);
    CHECK(c1["suites"][0]["checks"] == c2["suites"][0]["checks"]);
    CHECK(call({"verify", "--suite", "nothing"}).exit_code == 1);
    CHECK(call({"verify", "--max-dims", "4"}).exit_code == 1);
}
