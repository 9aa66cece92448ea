#include "dazzle/bessel.hpp"

#include <cmath>
#include <vector>

#include "dazzle/errors.hpp"

namespace dazzle {

namespace {

// Start order for the downward recurrence. Generous margin so the seed
// transient has fully decayed by the highest order we keep.
int miller_start_order(int nmax, double x) {
    const double base = std::max(static_cast<double>(nmax), x);
    int m = static_cast<int>(std::ceil(base)) + 24 + static_cast<int>(std::ceil(2.0 * std::sqrt(base + 1.0)));
    if (m % 2 != 0) ++m; // even start keeps the normalization sum aligned
    return m;
}

} // namespace

void bessel_jn_sequence(double x, std::span<double> out) {
    if (out.empty()) return;
    if (x < 0.0) throw NumericError("bessel_jn_sequence: negative argument");
    const int nmax = static_cast<int>(out.size()) - 1;

    if (x == 0.0) {
        out[0] = 1.0;
        for (int n = 1; n <= nmax; ++n) out[n] = 0.0;
        return;
    }

    const int mstart = miller_start_order(nmax, x);
    const double rescale_limit = 1e250;
    const double inv_rescale = 1e-250;

    double jp = 0.0;        // J_{k+1}
    double jc = 1e-300;     // J_k seed
    double norm = 0.0;      // J0 + 2*sum_{even k>0} Jk
    std::vector<double> kept(static_cast<size_t>(nmax) + 1, 0.0);

    for (int k = mstart; k >= 0; --k) {
        const double jm = (2.0 * (k + 1)) / x * jc - jp; // J_k from J_{k+1}, J_{k+2}
        jp = jc;
        jc = jm;
        if (k <= nmax) kept[static_cast<size_t>(k)] = jc;
        if (k > 0 && k % 2 == 0) norm += 2.0 * jc;
        if (k == 0) norm += jc;
        if (std::abs(jc) > rescale_limit) {
            jc *= inv_rescale;
            jp *= inv_rescale;
            norm *= inv_rescale;
            for (double& v : kept) v *= inv_rescale;
        }
    }

    for (int n = 0; n <= nmax; ++n) out[static_cast<size_t>(n)] = kept[static_cast<size_t>(n)] / norm;
}

double bessel_j0(double x) { return bessel_jn(0, x); }

double bessel_j1(double x) { return bessel_jn(1, x); }

double bessel_jn(int order, double x) {
    if (order < 0) throw NumericError("bessel_jn: negative order");
    std::vector<double> seq(static_cast<size_t>(order) + 1);
    bessel_jn_sequence(x, seq);
    return seq[static_cast<size_t>(order)];
}

} // namespace dazzle
