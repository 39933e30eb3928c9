#include "gaidec/rational.hpp"

#include "gaidec/errors.hpp"

#include <cctype>

namespace gaidec {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rat rat_parse(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view num_digits = num;
    if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
    if (!all_digits(num_digits) || !all_digits(den))
        throw ValidationError("not a rational \"p\" or \"p/q\": '" + std::string(text) + "'");
    BigInt p(std::string(num), 10);
    BigInt q(std::string(den), 10);
    if (q == 0)
        throw ValidationError("zero denominator in rational '" + std::string(text) + "'");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& value) {
    return value.get_str();
}

std::string rat_decimal(const Rat& value, int digits) {
    if (digits < 0) digits = 0;
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    BigInt num = value.get_num() * scale * 2;
    BigInt den = value.get_den();
    // round half away from zero on |num| / (2*den)
    BigInt adj = num >= 0 ? den : -den;
    BigInt scaled = (num + adj) / (2 * den);
    bool negative = scaled < 0;
    BigInt mag = abs(scaled);
    std::string s = mag.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out = negative ? "-" : "";
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out += '.';
        out += s.substr(s.size() - digits);
    }
    return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace gaidec
