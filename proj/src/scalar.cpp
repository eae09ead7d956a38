#include "dgh/scalar.hpp"

#include <cctype>

namespace dgh {

std::string to_string(const Scalar& s) {
    return s.get_num().get_str() + "/" + s.get_den().get_str();
}

static bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::optional<Scalar> parse_scalar(std::string_view text) {
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    std::string_view digits = num;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) digits.remove_prefix(1);
    if (!all_digits(digits) || !all_digits(den)) return std::nullopt;
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num)), d{std::string(den)};
    if (d == 0) return std::nullopt;
    Scalar q(n, d);
    q.canonicalize();
    return q;
}

Scalar factorial(unsigned n) {
    mpz_class r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return Scalar(r);
}

}  // namespace dgh
