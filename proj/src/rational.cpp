#include "brauercat/rational.hpp"

#include <algorithm>
#include <cctype>

#include "brauercat/errors.hpp"

namespace brauercat {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool valid_integer(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational rational_from_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(s)) throw SchemaError("not a rational: '" + s + "'", "value");
        return Rational(BigInt(s));
    }
    const std::string num = s.substr(0, slash);
    const std::string den = s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-')
        throw SchemaError("not a rational: '" + s + "'", "value");
    BigInt d(den);
    if (d == 0) throw SchemaError("zero denominator in '" + s + "'", "value");
    return Rational(BigInt(num), d);
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    BigInt b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;  // exact: product of i+1 consecutive integers
    }
    return b;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(perm[j]);
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<std::vector<int>> all_permutations(int r) {
    std::vector<int> p(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) p[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int sort_with_sign(std::vector<int>& v) {
    // insertion sort, counting transpositions; leg lists are tiny
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::size_t j = i;
        while (j > 0 && v[j - 1] > v[j]) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
            --j;
        }
    }
    return sign;
}

}  // namespace brauercat
