// heightlab: command-line front end. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 domain error, 2 FAIL verdict in `verify`,
// 3 precision exhausted, 64 usage error.

#include "heightlab/bounds.hpp"
#include "heightlab/errors.hpp"
#include "heightlab/families.hpp"
#include "heightlab/heights.hpp"
#include "heightlab/perms.hpp"
#include "heightlab/poly.hpp"
#include "heightlab/roots.hpp"
#include "heightlab/serialize.hpp"
#include "heightlab/snfun.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace heightlab;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerifyFail = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;

struct Options {
    std::string coeffs;
    std::string poly;
    std::string a;
    std::string group;
    std::string mode = "multiplicative";
    std::string x;
    std::string y;
    std::string format = "json";
    long bits = 256;
    double tol = kDefaultTolerance;
    std::size_t n = 0;
    std::size_t h = 0;
    std::size_t k = 0;
    std::size_t primes = 20;
};

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        out.push_back(item);
    }
    return out;
}

IntPoly read_poly(const Options& o)
{
    if (!o.coeffs.empty() == !o.poly.empty()) {
        throw CLI::ValidationError("exactly one of --coeffs or --poly is required");
    }
    if (!o.poly.empty()) {
        const std::string prefix = "laguerre:";
        if (o.poly.rfind(prefix, 0) != 0) {
            throw CLI::ValidationError("unknown polynomial family '" + o.poly + "' (expected laguerre:N)");
        }
        try {
            return laguerre_poly(std::stoul(o.poly.substr(prefix.size())));
        } catch (const std::logic_error&) {
            throw CLI::ValidationError("malformed family size in '" + o.poly + "'");
        }
    }
    std::vector<mpz_class> coeffs;
    for (const auto& token : split_commas(o.coeffs)) {
        mpz_class v;
        if (v.set_str(token, 10) != 0) {
            throw CLI::ValidationError("malformed coefficient '" + token + "'");
        }
        coeffs.push_back(std::move(v));
    }
    return IntPoly(std::move(coeffs));
}

CenteredVector read_rationals(const std::string& text)
{
    std::vector<mpq_class> values;
    for (const auto& token : split_commas(text)) {
        mpq_class v;
        if (v.set_str(token, 10) != 0 || v.get_den() == 0) {
            throw CLI::ValidationError("malformed rational '" + token + "'");
        }
        v.canonicalize();
        values.push_back(std::move(v));
    }
    return CenteredVector(std::move(values));
}

ExponentVector read_exponents(const Options& o)
{
    if (o.a.empty()) {
        throw CLI::ValidationError("--a is required");
    }
    try {
        return ExponentVector::parse(o.a);
    } catch (const DomainError& e) {
        throw CLI::ValidationError(e.what());
    }
}

GroupTag read_group(const Options& o)
{
    if (o.group.empty()) {
        throw CLI::ValidationError("--group is required (an or sn)");
    }
    return parse_group(o.group);
}

std::string csv_cell(const Json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string s;
        for (const auto& e : v) {
            s += (s.empty() ? "" : ";") + csv_cell(e);
        }
        return s;
    }
    return v.dump();
}

// Flattens nested objects into dotted keys.
void flatten(const Json& j, const std::string& prefix, std::ostream& out)
{
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten(value, name, out);
        } else {
            out << name << ',' << csv_cell(value) << '\n';
        }
    }
}

void emit(const Json& j, const Options& o)
{
    if (o.format == "csv") {
        std::cout << "key,value\n";
        flatten(j, "", std::cout);
    } else {
        std::cout << j.dump() << '\n';
    }
}

Json ints(const ExponentVector& a)
{
    return Json(std::vector<long>(a.begin(), a.end()));
}

int cmd_roots(const Options& o)
{
    const ConjugateSet cs = find_roots(read_poly(o), o.bits);
    const Json j = to_json(cs);
    if (o.format == "csv") {
        std::cout << "index,re,im,radius\n";
        std::size_t i = 1;
        for (const auto& r : j["roots"]) {
            std::cout << i++ << ',' << r["re"].get<std::string>() << ',' << r["im"].get<std::string>() << ','
                      << r["radius"].get<std::string>() << '\n';
        }
    } else {
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int cmd_mahler(const Options& o)
{
    const IntPoly p = read_poly(o);
    const ConjugateSet cs = find_roots(p, o.bits);
    const HeightValue m = mahler_from_poly(p, cs);
    const Interval height = m.enclosure() / Interval(static_cast<long>(cs.size()), m.precision_bits());
    Json j;
    j["polynomial"] = to_json(p);
    j["log_mahler"] = to_json(m);
    j["height"] = to_json(HeightValue(height));
    emit(j, o);
    return 0;
}

int cmd_height(const Options& o, CombinationMode mode)
{
    const IntPoly p = read_poly(o);
    const ExponentVector a = read_exponents(o);
    const GroupTag g = read_group(o);
    const ConjugateSet cs = find_roots(p, o.bits);
    const HeightValue h = mode == CombinationMode::Multiplicative ? height_multiplicative(cs, a, g, o.tol)
                                                                  : height_additive(cs, a, g, o.tol);
    Json j;
    j["mode"] = to_string(mode);
    j["group"] = to_string(g);
    j["a"] = ints(a);
    j["height"] = to_json(h);
    emit(j, o);
    return 0;
}

int cmd_sn(const Options& o)
{
    Json j;
    if (!o.x.empty() || !o.y.empty()) {
        const CenteredVector x = read_rationals(o.x);
        const CenteredVector y = read_rationals(o.y);
        const GroupTag g = o.group.empty() ? GroupTag::Alternating : parse_group(o.group);
        j["n"] = x.size();
        j["group"] = to_string(g);
        j["s_n"] = s_n_bruteforce(x, y, g).get_str();
    } else {
        if (o.n == 0 || o.h == 0 || o.k == 0) {
            throw CLI::ValidationError("sn needs --x/--y or --n/--h/--k");
        }
        j["n"] = o.n;
        j["h"] = o.h;
        j["k"] = o.k;
        j["s_n"] = s_n_closed_zz(o.n, o.h, o.k).get_str();
    }
    emit(j, o);
    return 0;
}

int cmd_cn(const Options& o)
{
    emit(to_json(c_n(o.n)), o);
    return 0;
}

int cmd_check_generator(const Options& o)
{
    Json j;
    j["generator"] = generator_criterion(read_exponents(o), read_group(o));
    emit(j, o);
    return 0;
}

int cmd_laguerre(const Options& o)
{
    const IntPoly p = laguerre_poly(o.n);
    Json j;
    j["n"] = o.n;
    j["polynomial"] = to_json(p);
    j["norm"] = laguerre_norm(o.n).get_str();
    if (o.n >= 2) {
        j["alternating_conditions"] = to_json(an_necessary_conditions(p, o.primes));
    }
    emit(j, o);
    return 0;
}

int cmd_verify(const Options& o)
{
    const IntPoly p = read_poly(o);
    const ExponentVector a = read_exponents(o);
    const GroupTag g = read_group(o);
    VerifyOptions vo;
    vo.bits = o.bits;
    vo.tolerance = o.tol;
    const auto reports = verify_suite(p, a, g, parse_mode(o.mode), vo);
    if (o.format == "csv") {
        std::cout << to_csv(reports);
    } else {
        std::cout << to_json(reports).dump() << '\n';
    }
    return any_failure(reports) ? kExitVerifyFail : 0;
}

void poly_flags(CLI::App* sub, Options& o)
{
    sub->add_option("--coeffs", o.coeffs, "integer coefficients, constant term first: c0,c1,...");
    sub->add_option("--poly", o.poly, "named polynomial, e.g. laguerre:8");
    sub->add_option("--bits", o.bits, "root certification target in bits")->check(CLI::Range(8L, 4096L));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mahler measures and heights of combinations of conjugates"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* roots = app.add_subcommand("roots", "certified root enclosures");
    poly_flags(roots, o);
    roots->callback([&] { action = [&] { return cmd_roots(o); }; });

    auto* mahler = app.add_subcommand("mahler", "log Mahler measure and height of a root");
    poly_flags(mahler, o);
    mahler->callback([&] { action = [&] { return cmd_mahler(o); }; });

    for (auto [name, mode] : {std::pair{"height-mult", CombinationMode::Multiplicative},
                              std::pair{"height-add", CombinationMode::Additive}}) {
        auto* sub = app.add_subcommand(name, std::string("height of the ") + to_string(mode) + " combination");
        poly_flags(sub, o);
        sub->add_option("--a", o.a, "integer vector a_1,...,a_n")->required();
        sub->add_option("--group", o.group, "an or sn")->required();
        sub->add_option("--tol", o.tol, "tolerance on the certified error radius");
        sub->callback([&o, &action, mode = mode] { action = [&o, mode] { return cmd_height(o, mode); }; });
    }

    auto* sn = app.add_subcommand("sn", "s_n(x, y) by enumeration, or s_n(z^(n,h), z^(n,k)) in closed form");
    sn->set_help_flag("--help", "Print this help message and exit");
    sn->add_option("--x", o.x, "rationals summing to zero, e.g. 1,1,-1,-1");
    sn->add_option("--y", o.y, "rationals summing to zero");
    sn->add_option("--group", o.group, "an (default) or sn");
    sn->add_option("--n", o.n);
    sn->add_option("--h", o.h);
    sn->add_option("--k", o.k);
    sn->callback([&] { action = [&] { return cmd_sn(o); }; });

    auto* cn = app.add_subcommand("cn", "c_n with its argmin and the ratio c_n sqrt(pi n / 2)");
    cn->add_option("--n", o.n)->required()->check(CLI::Range(2UL, 100000UL));
    cn->callback([&] { action = [&] { return cmd_cn(o); }; });

    auto* gen = app.add_subcommand("check-generator", "whether the combination generates the Galois closure");
    gen->add_option("--a", o.a)->required();
    gen->add_option("--group", o.group)->required();
    gen->callback([&] { action = [&] { return cmd_check_generator(o); }; });

    auto* lag = app.add_subcommand("laguerre", "truncated exponential polynomial with alternating-group evidence");
    lag->add_option("--n", o.n)->required()->check(CLI::Range(1UL, 1000UL));
    lag->add_option("--primes", o.primes, "prime budget for the irreducibility evidence");
    lag->callback([&] { action = [&] { return cmd_laguerre(o); }; });

    auto* families = app.add_subcommand("families", "polynomial families");
    families->require_subcommand(1);
    auto* fam_lag = families->add_subcommand("laguerre", "emit the polynomial JSON");
    fam_lag->add_option("--n", o.n)->required()->check(CLI::Range(1UL, 1000UL));
    fam_lag->callback([&] {
        action = [&] {
            std::cout << to_json(laguerre_poly(o.n)).dump() << '\n';
            return 0;
        };
    });

    auto* verify = app.add_subcommand("verify", "evaluate every applicable inequality and identity");
    poly_flags(verify, o);
    verify->add_option("--a", o.a)->required();
    verify->add_option("--group", o.group)->required();
    verify->add_option("--mode", o.mode, "multiplicative or additive");
    verify->add_option("--tol", o.tol, "tolerance on certified error radii");
    verify->callback([&] { action = [&] { return cmd_verify(o); }; });

    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    }
}
