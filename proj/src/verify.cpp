#include "carlson/verify.hpp"
#include "carlson/cli.hpp"
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace carlson {

namespace {

int arity_of(const std::string& fn) {
    if (fn == "rf" || fn == "rd" || fn == "rg") return 3;
    if (fn == "rc") return 2;
    if (fn == "rj" || fn == "rju") return 4;
    return -1;
}

eval_result eval_record(const check_record& rec, double r) {
    const auto& a = rec.args;
    if (rec.fn == "rf") return rf(a[0], a[1], a[2], r);
    if (rec.fn == "rc") return rc(a[0], a[1], r);
    if (rec.fn == "rj") return rj(a[0], a[1], a[2], a[3], r);
    if (rec.fn == "rju") return rj(a[0], a[1], a[2], a[3], r, true);
    if (rec.fn == "rd") return rd(a[0], a[1], a[2], r);
    return rg(a[0], a[1], a[2], r);
}

std::string describe(const check_record& rec) {
    std::string s = rec.fn;
    for (const cplx& a : rec.args) s += " " + cli::format_complex(a);
    return s;
}

double parse_expected_part(const std::string& tok, int lineno) {
    try {
        const cplx v = cli::parse_complex(tok);
        if (v.imag() != 0.0) throw std::invalid_argument("not a real literal");
        return v.real();
    } catch (const std::invalid_argument& e) {
        throw domain_error("corpus line " + std::to_string(lineno) +
                           ": bad expected value '" + tok + "': " + e.what());
    }
}

} // namespace

std::vector<check_record> parse_corpus(std::istream& in) {
    std::vector<check_record> recs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        check_record rec;
        rec.fn = tok[0];
        rec.line = lineno;
        const int arity = arity_of(rec.fn);
        if (arity < 0)
            throw domain_error("corpus line " + std::to_string(lineno) +
                               ": unknown function '" + rec.fn + "'");
        if (static_cast<int>(tok.size()) != arity + 3)
            throw domain_error("corpus line " + std::to_string(lineno) +
                               ": expected " + std::to_string(arity) +
                               " arguments plus a complex result");
        for (int i = 1; i <= arity; ++i) {
            try {
                rec.args.push_back(cli::parse_complex(tok[i]));
            } catch (const std::invalid_argument& e) {
                throw domain_error("corpus line " + std::to_string(lineno) +
                                   ": bad argument '" + tok[i] + "': " + e.what());
            }
        }
        rec.expected = {parse_expected_part(tok[arity + 1], lineno),
                        parse_expected_part(tok[arity + 2], lineno)};
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::vector<check_record> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open corpus file: " + path);
    return parse_corpus(in);
}

corpus_report run_check_corpus(const std::vector<check_record>& records, double r) {
    corpus_report rep;
    for (const check_record& rec : records) {
        ++rep.total;
        double dev = std::numeric_limits<double>::infinity();
        std::string reason;
        try {
            const cplx got = eval_record(rec, r).value;
            dev = std::abs(got - rec.expected) / std::abs(rec.expected);
        } catch (const std::exception& e) {
            reason = std::string("threw: ") + e.what();
        }
        if (reason.empty() && dev > rep.max_rel_dev) {
            rep.max_rel_dev = dev;
            rep.worst = describe(rec);
        }
        if (!reason.empty() || dev > 10.0 * r) {
            ++rep.failures;
            std::ostringstream os;
            os << "line " << rec.line << ": " << describe(rec) << " ";
            if (reason.empty())
                os << "rel dev " << dev;
            else
                os << reason;
            rep.failure_lines.push_back(os.str());
        }
    }
    return rep;
}

consistency_case make_consistency_case(double x, double y, double p, cplx lam) {
    consistency_case c;
    c.x = x;
    c.y = y;
    c.p = p;
    c.lam = lam;
    c.mu = x * y / lam;
    c.a = (p * p) * (lam + c.mu + x + y);
    c.b = p * (p + lam) * (p + c.mu);
    const cplx prod = p * (p - x) * (p - y);
    const double scale = std::abs(c.a) + std::abs(c.b) + std::abs(prod);
    c.construction_ok = std::abs((c.b - c.a) - prod) <=
                        8.0 * std::numeric_limits<double>::epsilon() * scale;
    return c;
}

consistency_report run_consistency_suite(std::uint64_t seed, int trials, double r) {
    consistency_report rep;
    rep.seed = seed;
    rep.trials = trials;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    constexpr double pi = std::numbers::pi;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    const auto residual = [](cplx lhs, cplx rhs) {
        return std::abs(lhs - rhs) /
               std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    };
    const char* family[6] = {"rf-shift", "rc-shift", "rj-shift",
                             "ab-construction", "rd-shift", "rd-cycle"};
    const auto note = [&](int id, int trial, double res, const std::string& where) {
        rep.worst_by_id[id] = std::max(rep.worst_by_id[id], res);
        if (id != 3) rep.max_residual = std::max(rep.max_residual, res);
        const bool bad = (id == 3) ? res > 8.0 : res > 10.0 * r;
        if (bad) {
            ++rep.failures;
            if (rep.failure_lines.size() < 25) {
                std::ostringstream os;
                os << "trial " << trial << " " << family[id] << " residual " << res
                   << " at " << where;
                rep.failure_lines.push_back(os.str());
            }
        }
    };

    for (int t = 0; t < trials; ++t) {
        const double x = 10.0 * (1.0 - u01(rng));
        const double y = 10.0 * (1.0 - u01(rng));
        const double p = 10.0 * (1.0 - u01(rng));
        const double mag = std::exp(std::log(1e-2) + std::log(1e4) * u01(rng));
        const double ph = (2.0 * u01(rng) - 1.0) * 0.999999 * pi;
        const cplx lam = (t % 3 == 0) ? cplx(mag, 0.0) : std::polar(mag, ph);
        const consistency_case cs = make_consistency_case(x, y, p, lam);

        std::ostringstream ws;
        ws << "x=" << x << " y=" << y << " p=" << p << " lam=" << cli::format_complex(lam);
        const std::string where = ws.str();

        {
            const cplx prod = p * (p - x) * (p - y);
            const double scale = std::abs(cs.a) + std::abs(cs.b) + std::abs(prod);
            note(3, t, std::abs((cs.b - cs.a) - prod) / (eps * scale), where);
        }
        {
            const cplx lhs = rf(x + cs.lam, y + cs.lam, cs.lam, r).value +
                             rf(x + cs.mu, y + cs.mu, cs.mu, r).value;
            const cplx rhs = rf(x, y, 0.0, r).value;
            note(0, t, residual(lhs, rhs), where);
        }
        {
            // the degenerate translation pairs shifts with lam * mu = x^2
            const cplx mu2 = (x * x) / cs.lam;
            const cplx lhs = rc(cs.lam, x + cs.lam, r).value +
                             rc(mu2, x + mu2, r).value;
            const cplx rhs = rc(0.0, x, r).value;
            note(1, t, residual(lhs, rhs), where);
        }
        {
            // shifts with a negative real part leave the admissible classes,
            // though the identity still holds; run those unchecked
            const bool outside = cs.lam.real() < 0.0;
            const cplx lhs =
                rj(x + cs.lam, y + cs.lam, cs.lam, p + cs.lam, r, outside).value +
                rj(x + cs.mu, y + cs.mu, cs.mu, p + cs.mu, r, outside).value;
            const cplx rhs = rj(x, y, 0.0, p, r).value - 3.0 * rc(cs.a, cs.b, r).value;
            note(2, t, residual(lhs, rhs), where);
        }
        {
            const cplx lhs = rd(cs.lam, x + cs.lam, y + cs.lam, r).value +
                             rd(cs.mu, x + cs.mu, y + cs.mu, r).value;
            const cplx rhs = rd(0.0, x, y, r).value -
                             3.0 / (y * principal_sqrt(x + y + cs.lam + cs.mu));
            note(4, t, residual(lhs, rhs), where);
        }
        {
            cplx w[3];
            for (cplx& v : w) {
                const double m = std::exp(std::log(1e-2) + std::log(1e4) * u01(rng));
                const double a = (2.0 * u01(rng) - 1.0) * 0.999999 * pi;
                v = (t % 3 == 0) ? cplx(m, 0.0) : std::polar(m, a);
            }
            const cplx lhs = rd(w[0], w[1], w[2], r).value +
                             rd(w[1], w[2], w[0], r).value +
                             rd(w[2], w[0], w[1], r).value;
            const cplx rhs = 3.0 / (principal_sqrt(w[0]) * principal_sqrt(w[1]) *
                                    principal_sqrt(w[2]));
            std::ostringstream cw;
            cw << "x=" << cli::format_complex(w[0]) << " y=" << cli::format_complex(w[1])
               << " z=" << cli::format_complex(w[2]);
            note(5, t, residual(lhs, rhs), cw.str());
        }
    }
    return rep;
}

} // namespace carlson
