#include "perfarr/cyclotomic.hpp"

#include "perfarr/exponent_array.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace perfarr {

namespace {

using Poly = std::vector<std::int64_t>; // ascending degree

// Exact division of a by the monic polynomial b; throws if not divisible.
Poly divide_exact(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() - 1 < db) throw std::logic_error("cyclotomic division underflow");
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const std::int64_t f = a[i];
        if (f == 0) continue;
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    if (std::any_of(a.begin(), a.end(), [](std::int64_t c) { return c != 0; }))
        throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

Poly compute_phi(std::int64_t r, const std::unordered_map<std::int64_t, Poly>& known) {
    // x^r - 1 divided by Phi_d for every proper divisor d of r.
    Poly p(static_cast<std::size_t>(r) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(r)] = 1;
    for (std::int64_t d = 1; d < r; ++d)
        if (r % d == 0) p = divide_exact(std::move(p), known.at(d));
    return p;
}

std::shared_mutex phi_mutex;
std::unordered_map<std::int64_t, Poly> phi_cache;

} // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t r) {
    if (r < 1) throw std::invalid_argument("cyclotomic polynomial order must be >= 1");
    {
        std::shared_lock lock(phi_mutex);
        auto it = phi_cache.find(r);
        if (it != phi_cache.end()) return it->second;
    }
    std::unique_lock lock(phi_mutex);
    // Fill every divisor bottom-up; re-check under the exclusive lock.
    for (std::int64_t d = 1; d <= r; ++d)
        if (r % d == 0 && !phi_cache.contains(d))
            phi_cache.emplace(d, compute_phi(d, phi_cache));
    return phi_cache.at(r);
}

CyclotomicValue::CyclotomicValue(std::int64_t modulus)
    : modulus_(modulus), coeffs_(static_cast<std::size_t>(modulus), 0) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
}

CyclotomicValue::CyclotomicValue(std::int64_t modulus, std::vector<std::int64_t> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (coeffs_.size() != static_cast<std::size_t>(modulus))
        throw std::invalid_argument("coefficient vector must have one entry per root");
}

void CyclotomicValue::accumulate(std::int64_t exponent) {
    ++coeffs_[static_cast<std::size_t>(mod_floor(exponent, modulus_))];
}

void CyclotomicValue::accumulate(std::int64_t exponent, std::int64_t count) {
    coeffs_[static_cast<std::size_t>(mod_floor(exponent, modulus_))] += count;
}

bool CyclotomicValue::is_zero() const {
    const Poly& phi = cyclotomic_polynomial(modulus_);
    const std::size_t dp = phi.size() - 1;
    // Remainder of the coefficient polynomial mod Phi_r. Phi_r is monic, so
    // the division stays over the integers; intermediate coefficients can
    // grow, hence the 128-bit workspace.
    std::vector<__int128> rem(coeffs_.begin(), coeffs_.end());
    for (std::size_t i = rem.size(); i-- > dp;) {
        const __int128 f = rem[i];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= dp; ++j) rem[i - dp + j] -= f * phi[j];
    }
    return std::all_of(rem.begin(), rem.end(), [](__int128 c) { return c == 0; });
}

std::complex<double> CyclotomicValue::to_complex() const {
    std::complex<double> sum{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(modulus_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        sum += static_cast<double>(coeffs_[k]) *
               std::complex<double>(std::cos(step * static_cast<double>(k)),
                                    std::sin(step * static_cast<double>(k)));
    }
    return sum;
}

} // namespace perfarr
