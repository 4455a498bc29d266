#include "heightlab/common.hpp"

#include "heightlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace heightlab {

mpz_class ExponentVector::sum() const
{
    mpz_class s = 0;
    for (long v : values_) {
        s += v;
    }
    return s;
}

mpz_class ExponentVector::abs_sum() const
{
    mpz_class s = 0;
    for (long v : values_) {
        s += mpz_class(v) * (v < 0 ? -1 : 1);
    }
    return s;
}

std::size_t ExponentVector::distinct_count() const
{
    return std::set<long>(values_.begin(), values_.end()).size();
}

bool ExponentVector::all_equal() const
{
    return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) == values_.end();
}

std::string ExponentVector::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out << (i ? "," : "") << values_[i];
    }
    return out.str();
}

ExponentVector ExponentVector::parse(const std::string& text)
{
    std::vector<long> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) {
            next = text.size();
        }
        std::string token = text.substr(pos, next - pos);
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        long v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw DomainError("malformed integer list: '" + text + "'");
        }
        values.push_back(v);
        pos = next + 1;
    }
    return ExponentVector(std::move(values));
}

const char* to_string(GroupTag g)
{
    return g == GroupTag::Alternating ? "alternating" : "symmetric";
}

const char* to_string(CombinationMode m)
{
    return m == CombinationMode::Multiplicative ? "multiplicative" : "additive";
}

GroupTag parse_group(const std::string& text)
{
    if (text == "an" || text == "alternating" || text == "A") {
        return GroupTag::Alternating;
    }
    if (text == "sn" || text == "symmetric" || text == "S") {
        return GroupTag::Symmetric;
    }
    throw DomainError("unknown group '" + text + "' (expected an or sn)");
}

CombinationMode parse_mode(const std::string& text)
{
    if (text == "multiplicative" || text == "mult") {
        return CombinationMode::Multiplicative;
    }
    if (text == "additive" || text == "add") {
        return CombinationMode::Additive;
    }
    throw DomainError("unknown mode '" + text + "' (expected multiplicative or additive)");
}

mpz_class factorial(unsigned long n)
{
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

mpq_class exact_ratio(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

mpz_class group_order(std::size_t n, GroupTag g)
{
    mpz_class f = factorial(n);
    if (g == GroupTag::Alternating && n >= 2) {
        f /= 2;
    }
    return f;
}

} // namespace heightlab
