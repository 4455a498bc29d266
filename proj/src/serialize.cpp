#include "heightlab/serialize.hpp"

#include "heightlab/errors.hpp"

#include <sstream>

namespace heightlab {

Json to_json(const IntPoly& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) {
        arr.push_back(c.get_str());
    }
    return arr;
}

IntPoly poly_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        throw DomainError("polynomial JSON must be a nonempty array of coefficients");
    }
    std::vector<mpz_class> coeffs;
    for (const auto& c : j) {
        mpz_class v;
        if (c.is_string()) {
            if (v.set_str(c.get<std::string>(), 10) != 0) {
                throw DomainError("invalid decimal coefficient '" + c.get<std::string>() + "'");
            }
        } else if (c.is_number_integer()) {
            v = c.get<long>();
        } else {
            throw DomainError("polynomial coefficients must be decimal strings");
        }
        coeffs.push_back(std::move(v));
    }
    return IntPoly(std::move(coeffs));
}

namespace {

// Upper bound on |x - decimal(x)| for the string that to_string() prints.
BigFloat printing_error(const BigFloat& x, const std::string& printed)
{
    const mpfr_prec_t wide = 2 * x.precision() + 64;
    const BigFloat back = BigFloat::parse(printed, wide, MPFR_RNDN);
    BigFloat diff(wide);
    mpfr_sub(diff.get(), x.get(), back.get(), MPFR_RNDN);
    mpfr_abs(diff.get(), diff.get(), MPFR_RNDU);
    if (back.is_zero()) {
        return diff;
    }
    // one extra ulp of the wide format covers the parse rounding
    BigFloat ulp(wide);
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(back.get()) - wide + 1, MPFR_RNDU);
    mpfr_add(diff.get(), diff.get(), ulp.get(), MPFR_RNDU);
    return diff;
}

} // namespace

Json to_json(const ConjugateSet& cs)
{
    Json roots = Json::array();
    for (const auto& d : cs.disks()) {
        const std::string re = d.center.re.to_string();
        const std::string im = d.center.im.to_string();
        BigFloat r(d.radius.precision());
        mpfr_add(r.get(), d.radius.get(), printing_error(d.center.re, re).get(), MPFR_RNDU);
        mpfr_add(r.get(), r.get(), printing_error(d.center.im, im).get(), MPFR_RNDU);
        Json root;
        root["re"] = re;
        root["im"] = im;
        root["radius"] = r.to_string(MPFR_RNDU);
        roots.push_back(std::move(root));
    }
    Json out;
    out["polynomial"] = to_json(cs.source());
    out["precision_bits"] = cs.precision_bits();
    out["target_bits"] = cs.target_bits();
    out["roots"] = std::move(roots);
    return out;
}

Json to_json(const HeightValue& h)
{
    Json out;
    out["value"] = h.value().to_string();
    out["error_radius"] = h.error_radius().to_string(MPFR_RNDU);
    out["precision_bits"] = h.precision_bits();
    return out;
}

Json to_json(const Interval& x)
{
    Json out;
    out["lower"] = x.lower().to_string(MPFR_RNDD);
    out["upper"] = x.upper().to_string(MPFR_RNDU);
    return out;
}

Json to_json(const CnResult& c)
{
    Json out;
    out["n"] = c.n;
    out["c_n"] = c.value.get_str();
    out["ratio"] = c.ratio;
    out["argmin"] = Json::array({c.argmin_h, c.argmin_k});
    return out;
}

Json to_json(const IrreducibilityEvidence& e)
{
    Json patterns = Json::array();
    for (const auto& p : e.patterns) {
        Json item;
        item["prime"] = p.prime;
        item["factor_degrees"] = p.factor_degrees;
        patterns.push_back(std::move(item));
    }
    Json out;
    out["verdict"] = to_string(e.verdict);
    out["patterns"] = std::move(patterns);
    out["skipped_primes"] = e.skipped_primes;
    out["possible_factor_degrees"] = e.possible_factor_degrees;
    return out;
}

Json to_json(const AlternatingEvidence& e)
{
    Json out;
    out["discriminant"] = e.discriminant.get_str();
    out["squarefree"] = e.squarefree;
    out["disc_is_square"] = e.disc_is_square;
    out["irreducibility"] = e.irreducibility ? to_json(*e.irreducibility) : Json(nullptr);
    return out;
}

Json to_json(const BoundReport& r)
{
    Json out;
    out["name"] = r.name;
    out["relation"] = to_string(r.relation);
    out["verdict"] = to_string(r.verdict);
    out["vacuous"] = r.vacuous;
    if (r.verdict != Verdict::Skipped) {
        out["lhs"] = to_json(r.lhs);
        out["rhs"] = to_json(r.rhs);
        out["margin"] = to_json(r.margin);
    }
    if (r.exact_lhs) {
        out["exact_lhs"] = r.exact_lhs->get_str();
        out["exact_rhs"] = r.exact_rhs->get_str();
    }
    out["note"] = r.note;
    return out;
}

Json to_json(const std::vector<BoundReport>& reports)
{
    Json arr = Json::array();
    for (const auto& r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

std::string to_csv(const std::vector<BoundReport>& reports)
{
    auto cell = [](const Interval& x) { return x.midpoint().to_string(20, MPFR_RNDN); };
    std::ostringstream out;
    out << "name,lhs,rhs,relation,margin,verdict\n";
    for (const auto& r : reports) {
        // names contain commas (lemma56[1,2,3,4]); quote every name
        out << '"' << r.name << "\",";
        if (r.verdict == Verdict::Skipped) {
            out << ",," << to_string(r.relation) << ",," << to_string(r.verdict) << '\n';
            continue;
        }
        out << cell(r.lhs) << ',' << cell(r.rhs) << ',' << to_string(r.relation) << ',' << cell(r.margin) << ','
            << to_string(r.verdict) << (r.vacuous ? "-VACUOUS" : "") << '\n';
    }
    return out.str();
}

} // namespace heightlab
