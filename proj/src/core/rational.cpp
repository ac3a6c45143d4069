#include "heis/rational.hpp"

#include "heis/errors.hpp"

#include <cctype>

namespace heis {

std::string to_string(const Q& q)
{
    return q.get_str();
}

Q parse_rational(const std::string& text)
{
    size_t i = 0;
    auto digits = [&](std::string& out) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            out.push_back(text[i++]);
        return !out.empty();
    };
    std::string num, den;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        num.push_back(text[i++]);
    std::string body;
    if (!digits(body))
        throw input_error("bad rational '" + text + "'");
    num += body;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits(den))
            throw input_error("bad rational '" + text + "'");
    }
    if (i != text.size())
        throw input_error("bad rational '" + text + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    Q q;
    if (den.empty()) {
        q = Q(mpz_class(num));
    } else {
        mpz_class d(den);
        if (d == 0)
            throw input_error("zero denominator in '" + text + "'");
        q = Q(mpz_class(num), d);
        q.canonicalize();
    }
    return q;
}

Q factorial(long n)
{
    mpz_class r = 1;
    for (long i = 2; i <= n; ++i)
        r *= i;
    return Q(r);
}

Q binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return Q(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Q(r);
}

void add_term(SparseVec& y, int key, const Q& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = y.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            y.erase(it);
    }
}

void axpy(SparseVec& y, const Q& a, const SparseVec& x)
{
    if (a == 0)
        return;
    for (const auto& [k, v] : x)
        add_term(y, k, a * v);
}

} // namespace heis
