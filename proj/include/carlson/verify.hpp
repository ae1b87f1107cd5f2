#pragma once
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>
#include "carlson/core.hpp"

namespace carlson {

// Built-in verification: the check-value table and the randomized identity
// suite.  Both produce plain reports; nothing here throws on a value mismatch.

struct check_record {
    std::string fn;              // rf rc rj rju rd rg  (rju: run unchecked)
    std::vector<cplx> args;
    cplx expected{};
    int line = 0;
};

// The table bundled into the library; identical content ships as a text file.
const std::vector<check_record>& embedded_corpus();

// One record per line: `<fn> <args as complex literals> <expected-re>
// <expected-im>`; `#` starts a comment.  Malformed lines throw domain_error.
std::vector<check_record> parse_corpus(std::istream& in);
std::vector<check_record> load_corpus(const std::string& path);

struct corpus_report {
    int total = 0;
    int failures = 0;
    double max_rel_dev = 0;
    std::string worst;           // entry with the largest deviation
    std::vector<std::string> failure_lines;
};

// Evaluates every record at tolerance r and compares against the stored
// value; a record fails when its relative deviation exceeds 10*r.
corpus_report run_check_corpus(const std::vector<check_record>& records, double r);

// Translation identity material for one random trial: positive x, y, p, a
// shift lam off the cut, and the partner shift mu with lam*mu = x*y.  The two
// degenerate-integral arguments a, b satisfy b - a = p(p-x)(p-y) up to a few
// roundings, which the constructor checks.
struct consistency_case {
    double x = 0, y = 0, p = 0;
    cplx lam{}, mu{};
    cplx a{}, b{};
    bool construction_ok = false;
};
consistency_case make_consistency_case(double x, double y, double p, cplx lam);

struct consistency_report {
    std::uint64_t seed = 0;
    int trials = 0;
    int failures = 0;
    double max_residual = 0;
    // Worst residual per identity family: translation of the first-kind,
    // degenerate, third-kind (with its companion), second-kind integrals,
    // then the cyclic second-kind sum.  Index 3 tracks the a/b construction.
    double worst_by_id[6] = {0, 0, 0, 0, 0, 0};
    std::vector<std::string> failure_lines;
};

// `trials` rounds of all identities at tolerance r; a residual beyond 10*r
// counts as a failure.  Deterministic in `seed`, which the report echoes.
consistency_report run_consistency_suite(std::uint64_t seed, int trials, double r);

} // namespace carlson
