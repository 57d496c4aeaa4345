#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "hlzeta/specfun.hpp"

namespace hlzeta {

namespace {

constexpr std::int64_t kDefaultBound = 1'000'000;

std::atomic<std::int64_t> g_requested{0};
std::once_flag g_once;
std::int64_t g_bound = 0;
std::vector<std::int32_t> g_spf;  // smallest prime factor

std::int64_t resolve_bound() {
    std::int64_t b = g_requested.load();
    if (b <= 0) {
        b = kDefaultBound;
        if (const char* env = std::getenv("HLZETA_SIEVE_BOUND")) {
            try {
                b = std::stoll(env);
            } catch (const std::exception&) {
                throw ConfigError(std::string("HLZETA_SIEVE_BOUND is not an integer: ") + env);
            }
        }
    }
    if (b < 2) b = 2;
    if (b > kSieveCapacity) throw CapacityError("sieve bound exceeds capacity 1e7");
    return b;
}

void init_sieve() {
    std::call_once(g_once, [] {
        std::int64_t b = resolve_bound();
        g_spf.assign(static_cast<std::size_t>(b + 1), 0);
        for (std::int64_t i = 2; i <= b; ++i) {
            if (g_spf[i] != 0) continue;
            g_spf[i] = static_cast<std::int32_t>(i);
            if (i * i > b) continue;
            for (std::int64_t j = i * i; j <= b; j += i)
                if (g_spf[j] == 0) g_spf[j] = static_cast<std::int32_t>(i);
        }
        g_bound = b;
    });
}

struct Factor {
    std::int64_t p;
    int e;
};

std::vector<Factor> factor(std::int64_t n) {
    init_sieve();
    if (n < 1) throw DomainError("arithmetic: requires n >= 1");
    if (n > g_bound) throw CapacityError("arithmetic: n beyond sieve bound " + std::to_string(g_bound));
    std::vector<Factor> out;
    while (n > 1) {
        std::int64_t p = g_spf[n];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    return out;
}

}  // namespace

void set_sieve_bound(std::int64_t bound) {
    if (bound > kSieveCapacity) throw CapacityError("sieve bound exceeds capacity 1e7");
    g_requested.store(bound);
}

std::int64_t sieve_bound() {
    init_sieve();
    return g_bound;
}

int mobius(std::int64_t n) {
    int mu = 1;
    for (auto f : factor(n)) {
        if (f.e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

int divisor_count(std::int64_t n) {
    int d = 1;
    for (auto f : factor(n)) d *= (f.e + 1);
    return d;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto f : factor(n)) {
        std::size_t cur = out.size();
        std::int64_t pk = 1;
        for (int e = 1; e <= f.e; ++e) {
            pk *= f.p;
            for (std::size_t i = 0; i < cur; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t r3_enumerate(std::int64_t n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    std::int64_t count = 0;
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (root * root > n) --root;
    while ((root + 1) * (root + 1) <= n) ++root;
    for (std::int64_t p = -root; p <= root; ++p) {
        std::int64_t rem = n - p * p;
        for (std::int64_t q = 0; q * q <= rem; ++q) {
            std::int64_t r2 = rem - q * q;
            auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(r2))));
            if (r * r != r2) continue;
            // (q, r) with signs
            int mult = (q == 0 ? 1 : 2) * (r == 0 ? 1 : 2);
            count += mult;
        }
    }
    return count;
}

std::vector<std::int64_t> r3_table(std::int64_t limit) {
    std::vector<std::int64_t> t(static_cast<std::size_t>(limit + 1), 0);
    auto lim = static_cast<std::int64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    for (std::int64_t p = -lim; p <= lim; ++p)
        for (std::int64_t q = -lim; q <= lim; ++q) {
            std::int64_t s2 = p * p + q * q;
            if (s2 > limit) continue;
            for (std::int64_t r = -lim; r <= lim; ++r) {
                std::int64_t s3 = s2 + r * r;
                if (s3 <= limit) ++t[s3];
            }
        }
    return t;
}

double arithmetic(ArithKind kind, std::int64_t n, double s) {
    if (n < 1) throw DomainError("arithmetic: requires n >= 1");
    switch (kind) {
        case ArithKind::mobius:
            return mobius(n);
        case ArithKind::mangoldt: {
            auto f = factor(n);
            return f.size() == 1 ? std::log(static_cast<double>(f[0].p)) : 0.0;
        }
        case ArithKind::liouville: {
            int total = 0;
            for (auto f : factor(n)) total += f.e;
            return (total % 2) ? -1.0 : 1.0;
        }
        case ArithKind::omega_distinct:
            return static_cast<double>(factor(n).size());
        case ArithKind::divisor_count:
            return divisor_count(n);
        case ArithKind::sigma_s: {
            double acc = 1.0;
            for (auto f : factor(n)) {
                double ps = std::pow(static_cast<double>(f.p), s);
                double term = 1.0, part = 1.0;
                for (int e = 1; e <= f.e; ++e) {
                    term *= ps;
                    part += term;
                }
                acc *= part;
            }
            return acc;
        }
        case ArithKind::r3:
            if (n > kSieveCapacity) throw CapacityError("r3: n beyond capacity");
            return static_cast<double>(r3_enumerate(n));
        case ArithKind::chebyshev_psi:
        case ArithKind::lcm_upto: {
            factor(n);  // capacity check
            KahanSum<double> psi;
            for (std::int64_t k = 2; k <= n; ++k) {
                std::int64_t p = g_spf[k];
                std::int64_t m = k;
                while (m % p == 0) m /= p;
                if (m == 1) psi.add(std::log(static_cast<double>(p)));
            }
            return kind == ArithKind::chebyshev_psi ? psi.value() : std::exp(psi.value());
        }
    }
    throw DomainError("arithmetic: unknown kind");
}

}  // namespace hlzeta
