#include <doctest.h>
#include "carlson/cli.hpp"
#include <cmath>
#include <random>
#include <sstream>
#include <json.hpp>

using namespace carlson;
using cli::parse_complex;

namespace {

struct outcome {
    int code = 0;
    std::string out, err;
};

outcome run_cli(std::initializer_list<const char*> args) {
    std::ostringstream out, err;
    outcome oc;
    oc.code = cli::run(std::vector<std::string>(args.begin(), args.end()), out, err);
    oc.out = out.str();
    oc.err = err.str();
    return oc;
}

} // namespace

TEST_CASE("complex literals: accepted forms") {
    CHECK(parse_complex("1.5") == cplx(1.5, 0));
    CHECK(parse_complex("-2") == cplx(-2, 0));
    CHECK(parse_complex("+3") == cplx(3, 0));
    CHECK(parse_complex(".5") == cplx(0.5, 0));
    CHECK(parse_complex("1e+5") == cplx(1e5, 0));
    CHECK(parse_complex("3+4i") == cplx(3, 4));
    CHECK(parse_complex("1-i") == cplx(1, -1));
    CHECK(parse_complex("-1e-3-2.5i") == cplx(-1e-3, -2.5));
    CHECK(parse_complex("i") == cplx(0, 1));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("+i") == cplx(0, 1));
    CHECK(parse_complex("2i") == cplx(0, 2));
    CHECK(parse_complex("-2.5e2i") == cplx(0, -250));
    CHECK(parse_complex("1E2+1E-2i") == cplx(100, 0.01));
}

TEST_CASE("complex literals: rejected forms") {
    for (const char* bad :
         {"", "1+", "i1", "2+3", "1 + 2i", " 1", "abc", "--1", "inf", "nan",
          "-inf", "1e", "+-1i", "1+2j", "1i+2", "2ii", "1.5+i2", "0x10"})
        CHECK_THROWS_AS((void)parse_complex(bad), std::invalid_argument);
}

TEST_CASE("formatting round-trips exactly") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> ex(-280, 280);
    for (int t = 0; t < 100000; ++t) {
        const cplx z{std::ldexp(u(rng), ex(rng)), std::ldexp(u(rng), ex(rng))};
        CHECK(parse_complex(cli::format_complex(z)) == z);
    }
    CHECK(cli::format_complex(cplx(1, 0)) == "1");
    CHECK(cli::format_complex(cplx(0, -1)) == "0-1i");
    CHECK(cli::format_complex(cplx(0.5, 2)) == "0.5+2i");

    CHECK(cli::format_display(cplx(3, 0)) == "3");
    CHECK(cli::format_display(cplx(1.0 / 3.0, 0)) == "0.333333333333333");
    CHECK(cli::format_display(cplx(1, -2)) == "1-2i");
    // a negative zero imaginary part counts as real
    CHECK(cli::format_display(cplx(2, -0.0)) == "2");
}

TEST_CASE("eval command") {
    const outcome rf_plain = run_cli({"eval", "rf", "1", "2", "0"});
    CHECK(rf_plain.code == 0);
    CHECK(rf_plain.out == "1.31102877714606\n");
    CHECK(rf_plain.err.empty());

    const outcome pi_val = run_cli({"eval", "rc", "0", "0.25"});
    CHECK(pi_val.code == 0);
    CHECK(pi_val.out == "3.14159265358979\n");

    const outcome cpx = run_cli({"eval", "rf", "-1+i", "i", "0"});
    CHECK(cpx.code == 0);
    CHECK(cpx.out.find("0.79612586584") != std::string::npos);
    CHECK(cpx.out.find("-1.2138566698") != std::string::npos);
    CHECK(cpx.out.find('i') != std::string::npos);

    // leading minus on a positional is an argument, not a flag
    const outcome neg = run_cli({"eval", "atan", "-1", "2"});
    CHECK(neg.code == 0);
    CHECK(neg.out.find("-0.46364760900") != std::string::npos);

    const outcome tight = run_cli({"eval", "rf", "1", "2", "0", "--rel-err", "1e-13"});
    CHECK(tight.code == 0);
    CHECK(tight.out == "1.31102877714606\n");
}

TEST_CASE("eval: json output") {
    const outcome oc =
        run_cli({"eval", "rf", "1", "2", "0", "--json", "--rel-err", "1e-12"});
    REQUIRE(oc.code == 0);
    const nlohmann::json j = nlohmann::json::parse(oc.out);
    CHECK(std::abs(j["re"].get<double>() - 1.3110287771460599) < 1e-13);
    CHECK(j["im"].get<double>() == 0.0);
    CHECK(j["n_iter"].get<int>() >= 1);
    CHECK(j["r"].get<double>() == 1e-12);

    // field order is fixed for line-oriented consumers
    CHECK(oc.out.find("{\"re\":") == 0);

    const outcome q = run_cli({"quartic", "1", "0", "0", "1", "0", "0", "0", "3", "--json"});
    REQUIRE(q.code == 0);
    const nlohmann::json qj = nlohmann::json::parse(q.out);
    CHECK(qj["re"].get<double>() == 3.0);
    CHECK(qj["n_iter"].get<int>() == 0);
}

TEST_CASE("exit codes: usage trouble is 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"eval"}).code == 2);
    CHECK(run_cli({"eval", "nope", "1"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2", "0", "9"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2", "zz"}).code == 2);
    CHECK(run_cli({"eval", "rju", "1", "2", "3", "4"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2", "0", "--bad-flag"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2", "0", "--rel-err", "abc"}).code == 2);
    CHECK(run_cli({"eval", "rf", "1", "2", "0", "--rel-err"}).code == 2);
    CHECK(run_cli({"selftest", "--trials", "0"}).code == 2);
    CHECK(run_cli({"selftest", "--trials", "-5"}).code == 2);
    CHECK(run_cli({"selftest", "--seed", "-1"}).code == 2);
    CHECK(run_cli({"quartic", "1", "0", "0", "1", "0", "0", "0"}).code == 2);
    CHECK(run_cli({"eval", "F", "i", "0.5"}).code == 2);  // phi must be real

    const outcome oc = run_cli({"eval", "rf", "1", "2"});
    CHECK(oc.err.find("usage error:") != std::string::npos);
    CHECK(oc.err.find("usage: carlson") != std::string::npos);
}

TEST_CASE("exit codes: domain trouble is 1") {
    const outcome neg = run_cli({"eval", "rf", "-1", "2", "0"});
    CHECK(neg.code == 1);
    CHECK(neg.err.find("error:") != std::string::npos);
    CHECK(neg.out.empty());

    CHECK(run_cli({"eval", "rf", "1", "2", "0", "--rel-err", "0.5"}).code == 1);
    CHECK(run_cli({"eval", "rc", "1", "0"}).code == 1);
    CHECK(run_cli({"quartic", "-1", "0", "1", "1", "0", "0", "0", "2"}).code == 1);
    CHECK(run_cli({"selftest", "--corpus", "no/such/file.txt"}).code == 1);
}

TEST_CASE("admissibility override flag") {
    const outcome blocked = run_cli({"eval", "rj", "-1+i", "-2-i", "-i", "-1+i"});
    CHECK(blocked.code == 1);
    const outcome forced =
        run_cli({"eval", "rj", "-1+i", "-2-i", "-i", "-1+i", "--unchecked"});
    CHECK(forced.code == 0);
    CHECK(forced.out.find("1.8249027393") != std::string::npos);
    CHECK(forced.out.find("-1.2218475784") != std::string::npos);
}

TEST_CASE("help lands on stdout and succeeds") {
    const outcome oc = run_cli({"--help"});
    CHECK(oc.code == 0);
    CHECK(oc.out.find("usage: carlson") != std::string::npos);
    CHECK(oc.out.find("--rel-err") != std::string::npos);
    CHECK(oc.err.empty());
    CHECK(run_cli({"-h"}).code == 0);
}

TEST_CASE("quartic command") {
    const outcome unit = run_cli({"quartic", "1", "0", "0", "1", "0", "0", "0", "3"});
    CHECK(unit.code == 0);
    CHECK(unit.out == "3\n");

    const outcome inf = run_cli({"quartic", "0", "0.5", "0", "-1", "0", "1", "1", "inf"});
    CHECK(inf.code == 0);
    CHECK(inf.out.find("2.622057554292") != std::string::npos);
}

TEST_CASE("selftest command") {
    const outcome oc = run_cli({"selftest", "--trials", "20"});
    CHECK(oc.code == 0);
    CHECK(oc.out.find("corpus: 34/34 ok") != std::string::npos);
    CHECK(oc.out.find("identities: 20 trials, 0 failures") != std::string::npos);
    CHECK(oc.out.find("rd-cycle") != std::string::npos);
    CHECK(oc.out.find("roundings") != std::string::npos);

    const outcome from_file =
        run_cli({"selftest", "--trials", "5", "--corpus", CORPUS_FILE});
    CHECK(from_file.code == 0);
    CHECK(from_file.out.find("corpus: 34/34 ok") != std::string::npos);

    const outcome seeded = run_cli({"selftest", "--trials", "5", "--seed", "99"});
    CHECK(seeded.code == 0);
    CHECK(seeded.out.find("seed 99") != std::string::npos);
}
