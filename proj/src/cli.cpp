#include "carlson/cli.hpp"
#include "carlson/adapters.hpp"
#include "carlson/quartic.hpp"
#include "carlson/verify.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <json.hpp>

namespace carlson::cli {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char usage_text[] =
    "usage: carlson <command> [arguments] [flags]\n"
    "\n"
    "commands:\n"
    "  eval <fn> <args...>              evaluate a function at complex arguments\n"
    "  selftest                         run the check table and the identity suite\n"
    "  quartic f1 g1 h1 f2 g2 h2 y x    integrate 1/sqrt(q1 q2) over [y, x]\n"
    "                                   (q = f + 2gt + ht^2; x may be 'inf')\n"
    "\n"
    "flags:\n"
    "  --rel-err R     relative-error tolerance (default 1e-10)\n"
    "  --json          machine-readable output for eval/quartic\n"
    "  --unchecked     run rj without its admissibility classes\n"
    "  --trials N      identity-suite rounds for selftest (default 1000)\n"
    "  --seed S        identity-suite seed (default 20260815)\n"
    "  --corpus PATH   check-value table to use instead of the built-in one\n"
    "\n"
    "functions (arity):\n"
    "  rf(3) rc(2) rj(4) rd(3) rg(3) rf0(2) rg0(2) rd0(2)\n"
    "  K(1) E(1) F(2) Einc(2) Pi(3) D(2) zeta(2) lambda0(2)\n"
    "  el1(2) el2(4) el3(3) cel(4)\n"
    "  ln(2) atan(2) atanh(2) asin(2) asinh(2) acos(2) acosh(2)\n"
    "\n"
    "complex literals: 1.5  -2  3+4i  -1e-3-2.5i  i  -i  2i\n";

double parse_double(std::string_view s, const char* what) {
    bool neg = false;
    std::string_view body = s;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body.remove_prefix(1);
    }
    double v = 0;
    const auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (body.empty() || ec != std::errc() || p != body.data() + body.size() ||
        !std::isfinite(v))
        throw usage_error(std::string(what) + ": expected a finite number, got '" +
                          std::string(s) + "'");
    return neg ? -v : v;
}

long parse_long(std::string_view s, const char* what) {
    long v = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size())
        throw usage_error(std::string(what) + ": expected an integer, got '" +
                          std::string(s) + "'");
    return v;
}

std::string short_digits(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

std::string digits15(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

std::string brief(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double real_arg(const cplx& v, const char* what) {
    if (v.imag() != 0.0)
        throw usage_error(std::string(what) + " must be real");
    return v.real();
}

using arglist = std::vector<cplx>;

struct fn_entry {
    const char* name;
    int arity;
    eval_result (*call)(const arglist&, double, bool);
};

eval_result plain(cplx v, double r) { return {v, r, 0, false}; }

constexpr fn_entry registry[] = {
    {"rf", 3, [](const arglist& a, double r, bool) { return rf(a[0], a[1], a[2], r); }},
    {"rc", 2, [](const arglist& a, double r, bool) { return rc(a[0], a[1], r); }},
    {"rj", 4, [](const arglist& a, double r, bool u) { return rj(a[0], a[1], a[2], a[3], r, u); }},
    {"rd", 3, [](const arglist& a, double r, bool) { return rd(a[0], a[1], a[2], r); }},
    {"rg", 3, [](const arglist& a, double r, bool) { return rg(a[0], a[1], a[2], r); }},
    {"rf0", 2, [](const arglist& a, double r, bool) {
         const complete_pair cp = complete_rf_rg(a[0], a[1], r);
         return eval_result{cp.rf0, r, cp.n_iterations, false};
     }},
    {"rg0", 2, [](const arglist& a, double r, bool) {
         const complete_pair cp = complete_rf_rg(a[0], a[1], r);
         return eval_result{cp.rg0, r, cp.n_iterations, false};
     }},
    {"rd0", 2, [](const arglist& a, double r, bool) {
         return plain(rd_complete(a[0], a[1], r), r);
     }},
    {"K", 1, [](const arglist& a, double r, bool) { return plain(complete_K_E(a[0], r).K, r); }},
    {"E", 1, [](const arglist& a, double r, bool) { return plain(complete_K_E(a[0], r).E, r); }},
    {"F", 2, [](const arglist& a, double r, bool) {
         return plain(legendre_F(real_arg(a[0], "phi"), a[1], r), r);
     }},
    {"Einc", 2, [](const arglist& a, double r, bool) {
         return plain(legendre_E_inc(real_arg(a[0], "phi"), a[1], r), r);
     }},
    {"Pi", 3, [](const arglist& a, double r, bool) {
         return plain(legendre_Pi(real_arg(a[0], "phi"), a[1], real_arg(a[2], "n"), r), r);
     }},
    {"D", 2, [](const arglist& a, double r, bool) {
         return plain(legendre_D(real_arg(a[0], "phi"), a[1], r), r);
     }},
    {"zeta", 2, [](const arglist& a, double r, bool) {
         return plain(jacobi_zeta(real_arg(a[0], "beta"), a[1], r), r);
     }},
    {"lambda0", 2, [](const arglist& a, double r, bool) {
         return plain(heuman_lambda(real_arg(a[0], "beta"), real_arg(a[1], "k"), r), r);
     }},
    {"el1", 2, [](const arglist& a, double r, bool) {
         return plain(el1(real_arg(a[0], "x"), a[1], r), r);
     }},
    {"el2", 4, [](const arglist& a, double r, bool) {
         return plain(el2(real_arg(a[0], "x"), a[1], a[2], a[3], r), r);
     }},
    {"el3", 3, [](const arglist& a, double r, bool) {
         return plain(el3(real_arg(a[0], "x"), a[1], a[2], r), r);
     }},
    {"cel", 4, [](const arglist& a, double r, bool) {
         return plain(cel(a[0], a[1], a[2], a[3], r), r);
     }},
    {"ln", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::log_ratio, a[0], a[1], r), r);
     }},
    {"atan", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arctan, a[0], a[1], r), r);
     }},
    {"atanh", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arctanh, a[0], a[1], r), r);
     }},
    {"asin", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arcsin, a[0], a[1], r), r);
     }},
    {"asinh", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arcsinh, a[0], a[1], r), r);
     }},
    {"acos", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arccos, a[0], a[1], r), r);
     }},
    {"acosh", 2, [](const arglist& a, double r, bool) {
         return plain(inverse_via_rc(inverse_kind::arccosh, a[0], a[1], r), r);
     }},
};

struct options {
    double rel_err = default_tolerance;
    bool json = false;
    bool unchecked = false;
    long trials = 1000;
    std::uint64_t seed = 20260815;
    std::string corpus_path;
    std::vector<std::string> pos;
};

options parse_options(const std::vector<std::string>& args) {
    options o;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        const auto next = [&](const char* what) -> const std::string& {
            if (i + 1 >= args.size())
                throw usage_error(std::string(what) + " needs a value");
            return args[++i];
        };
        if (a == "--json") {
            o.json = true;
        } else if (a == "--unchecked") {
            o.unchecked = true;
        } else if (a == "--rel-err") {
            o.rel_err = parse_double(next("--rel-err"), "--rel-err");
        } else if (a == "--trials") {
            o.trials = parse_long(next("--trials"), "--trials");
            if (o.trials <= 0) throw usage_error("--trials must be positive");
        } else if (a == "--seed") {
            const long s = parse_long(next("--seed"), "--seed");
            if (s < 0) throw usage_error("--seed must be nonnegative");
            o.seed = static_cast<std::uint64_t>(s);
        } else if (a == "--corpus") {
            o.corpus_path = next("--corpus");
        } else if (a == "--help" || a == "-h") {
            throw usage_error("help");
        } else if (a.size() >= 2 && a[0] == '-' && a[1] == '-') {
            throw usage_error("unknown flag '" + a + "'");
        } else {
            o.pos.push_back(a);
        }
    }
    return o;
}

void emit(const eval_result& res, const options& o, std::ostream& out) {
    if (o.json) {
        nlohmann::ordered_json j;
        j["re"] = res.value.real();
        j["im"] = res.value.imag();
        j["n_iter"] = res.n_iterations;
        j["r"] = res.r;
        out << j.dump() << "\n";
    } else {
        out << format_display(res.value) << "\n";
    }
}

int cmd_eval(const options& o, std::ostream& out) {
    if (o.pos.size() < 2) throw usage_error("eval needs a function name");
    const std::string& name = o.pos[1];
    for (const fn_entry& e : registry) {
        if (name != e.name) continue;
        if (static_cast<int>(o.pos.size()) - 2 != e.arity)
            throw usage_error(name + " takes " + std::to_string(e.arity) +
                              " argument(s)");
        arglist args;
        for (int k = 0; k < e.arity; ++k)
            args.push_back(parse_complex(o.pos[2 + k]));
        emit(e.call(args, o.rel_err, o.unchecked), o, out);
        return 0;
    }
    throw usage_error("unknown function '" + name + "'");
}

int cmd_quartic(const options& o, std::ostream& out) {
    if (o.pos.size() != 9)
        throw usage_error("quartic takes f1 g1 h1 f2 g2 h2 y x");
    quartic_spec sp;
    sp.q1.f = parse_double(o.pos[1], "f1");
    sp.q1.g = parse_double(o.pos[2], "g1");
    sp.q1.h = parse_double(o.pos[3], "h1");
    sp.q2.f = parse_double(o.pos[4], "f2");
    sp.q2.g = parse_double(o.pos[5], "g2");
    sp.q2.h = parse_double(o.pos[6], "h2");
    sp.lower = parse_double(o.pos[7], "y");
    if (o.pos[8] == "inf") {
        sp.upper_infinite = true;
    } else {
        sp.upper = parse_double(o.pos[8], "x");
    }
    const double v = eval_quartic(sp, o.rel_err);
    emit({cplx(v), o.rel_err, 0, false}, o, out);
    return 0;
}

int cmd_selftest(const options& o, std::ostream& out) {
    const std::vector<check_record> records =
        o.corpus_path.empty() ? embedded_corpus() : load_corpus(o.corpus_path);
    const corpus_report crep = run_check_corpus(records, o.rel_err);
    out << "corpus: " << (crep.total - crep.failures) << "/" << crep.total
        << " ok, max rel dev " << brief(crep.max_rel_dev) << " (worst: "
        << crep.worst << ")\n";
    for (const std::string& line : crep.failure_lines)
        out << "  FAIL " << line << "\n";

    const consistency_report irep = run_consistency_suite(
        o.seed, static_cast<int>(o.trials), o.rel_err);
    out << "identities: " << irep.trials << " trials, " << irep.failures
        << " failures, max residual " << brief(irep.max_residual) << " (seed "
        << irep.seed << ", r " << brief(o.rel_err) << ")\n";
    static const char* family[6] = {"rf-shift", "rc-shift", "rj-shift",
                                    "ab-construction", "rd-shift", "rd-cycle"};
    for (int i = 0; i < 6; ++i) {
        out << "  " << family[i] << ": worst "
            << brief(irep.worst_by_id[i]);
        if (i == 3) out << " roundings";
        out << "\n";
    }
    for (const std::string& line : irep.failure_lines)
        out << "  FAIL " << line << "\n";

    return (crep.failures || irep.failures) ? 1 : 0;
}

int run_impl(const std::vector<std::string>& args, std::ostream& out) {
    const options o = parse_options(args);
    if (o.pos.empty()) throw usage_error("no command");
    if (o.pos[0] == "eval") return cmd_eval(o, out);
    if (o.pos[0] == "quartic") return cmd_quartic(o, out);
    if (o.pos[0] == "selftest") return cmd_selftest(o, out);
    throw usage_error("unknown command '" + o.pos[0] + "'");
}

} // namespace

cplx parse_complex(std::string_view text) {
    const auto fail = [&](const char* why) {
        return std::invalid_argument("bad complex literal '" + std::string(text) +
                                     "': " + why);
    };
    if (text.empty()) throw fail("empty");
    for (const char c : text)
        if (c == ' ' || c == '\t') throw fail("whitespace");

    const auto parse_part = [&](std::string_view s) -> double {
        bool neg = false;
        if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
            neg = s[0] == '-';
            s.remove_prefix(1);
        }
        if (s.empty()) throw fail("missing digits");
        if (s[0] == '+' || s[0] == '-') throw fail("repeated sign");
        double v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw fail("not a number");
        if (!std::isfinite(v)) throw fail("not finite");
        return neg ? -v : v;
    };
    const auto parse_imag = [&](std::string_view s) -> double {
        // includes its sign and the trailing i
        s.remove_suffix(1);
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_part(s);
    };

    std::size_t split = std::string_view::npos;
    for (std::size_t i = 1; i < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos) {
        if (text.back() == 'i') return {0.0, parse_imag(text)};
        return {parse_part(text), 0.0};
    }
    const std::string_view head = text.substr(0, split);
    const std::string_view rest = text.substr(split);
    if (head.find('i') != std::string_view::npos) throw fail("real part contains i");
    if (rest.back() != 'i') throw fail("imaginary part must end in i");
    return {parse_part(head), parse_imag(rest)};
}

std::string format_complex(const cplx& z) {
    if (z.imag() == 0.0) return short_digits(z.real());
    std::string s = short_digits(z.real());
    const std::string im = short_digits(z.imag());
    if (im[0] != '-') s += '+';
    s += im;
    s += 'i';
    return s;
}

std::string format_display(const cplx& z) {
    if (z.imag() == 0.0) return digits15(z.real());
    std::string s = digits15(z.real());
    const std::string im = digits15(z.imag());
    if (im[0] != '-') s += '+';
    s += im;
    s += 'i';
    return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(args, out);
    } catch (const usage_error& e) {
        if (std::string_view(e.what()) == "help") {
            out << usage_text;
            return 0;
        }
        err << "usage error: " << e.what() << "\n\n" << usage_text;
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace carlson::cli
