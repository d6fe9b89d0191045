#include "sqres/specfun.hpp"

#include <cmath>
#include <vector>

#include "sqres/errors.hpp"

namespace sqres {

namespace {

bool is_half_integer(double x) { return std::abs(2 * x - std::lround(2 * x)) < 1e-9; }

// Backward recurrence J_{k-1} = (2k/z) J_k - J_{k+1}, started well above the
// needed order, normalized with J_0 + 2 sum_k J_{2k} = 1. Returns J_0..J_qmax
// for z > 0.
std::vector<double> miller_backward(int qmax, double z) {
    const int start_extra = 16 + static_cast<int>(std::sqrt(60.0 * qmax) + 1.5 * z);
    int mstart = std::max(qmax, static_cast<int>(z)) + start_extra;
    if (mstart % 2) ++mstart;   // even start keeps the normalization sum aligned

    std::vector<double> j(qmax + 1, 0.0);
    double jp = 0.0, jc = 1e-300;   // J_{m+1}, J_m seeds
    double norm = 0.0;              // J_0 + 2 sum J_{2k}
    for (int k = mstart; k >= 0; --k) {
        double jm = (2.0 * (k + 1) / z) * jc - jp;
        jp = jc;
        jc = jm;
        if (k <= qmax) j[k] = jc;
        if (k % 2 == 0) norm += (k == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {   // rescale mid-recurrence
            jc *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            for (auto& v : j) v *= 1e-250;
        }
    }
    for (auto& v : j) v /= norm;
    return j;
}

}  // namespace

double bessel_j(int q, double z) {
    if (!std::isfinite(z)) throw DomainError("bessel_j: non-finite argument");
    if (std::abs(q) > 1000) throw DomainError("bessel_j: order out of range");
    double sign = 1.0;
    if (q < 0) {   // J_{-q}(z) = (-1)^q J_q(z)
        q = -q;
        if (q % 2) sign = -sign;
    }
    if (z < 0) {   // J_q(-z) = (-1)^q J_q(z)
        z = -z;
        if (q % 2) sign = -sign;
    }
    if (z == 0.0) return q == 0 ? 1.0 : 0.0;
    return sign * miller_backward(q, z)[q];
}

Eigen::ArrayXd bessel_j_array(int qmax, double z) {
    if (!std::isfinite(z)) throw DomainError("bessel_j_array: non-finite argument");
    if (qmax < 0 || qmax > 1000) throw DomainError("bessel_j_array: order out of range");
    Eigen::ArrayXd out(qmax + 1);
    if (z == 0.0) {
        out.setZero();
        out[0] = 1.0;
        return out;
    }
    double sign = 1.0;
    double za = z;
    if (z < 0) za = -z;
    auto j = miller_backward(qmax, za);
    for (int q = 0; q <= qmax; ++q) {
        double s = (z < 0 && q % 2) ? -1.0 : 1.0;
        out[q] = s * sign * j[q];
    }
    return out;
}

Eigen::ArrayXd bessel_j_window(const BesselOrderRange& range, double z) {
    if (!range.valid()) throw DomainError("bessel_j_window: qmin > qmax");
    const int top = std::max(std::abs(range.qmin), std::abs(range.qmax));
    const Eigen::ArrayXd base = bessel_j_array(top, z);
    Eigen::ArrayXd out(range.qmax - range.qmin + 1);
    for (int q = range.qmin; q <= range.qmax; ++q) {
        const int a = std::abs(q);
        const double sign = (q < 0 && a % 2) ? -1.0 : 1.0;
        out[q - range.qmin] = sign * base[a];
    }
    return out;
}

double log_gamma(double x) {
    if (!(x > 0) || !std::isfinite(x)) throw DomainError("log_gamma: requires x > 0");
    return std::lgamma(x);
}

double sinc_kernel(double omega, double t) {
    if (t < 0) throw DomainError("sinc_kernel: requires t >= 0");
    const double x = omega * t;
    if (std::abs(x) < 1e-8) return t;   // sinc(x) -> 1 to double precision
    return t * std::sin(x) / x;
}

namespace {

double ln_fact(double n) { return std::lgamma(n + 1.0); }

}  // namespace

double clebsch_gordan(const AngularMomentumLabels& l) {
    for (double v : {l.j1, l.j2, l.J, l.m1, l.m2, l.M})
        if (!is_half_integer(v)) throw DomainError("clebsch_gordan: non-half-integer label");
    if (l.j1 < 0 || l.j2 < 0 || l.J < 0) throw DomainError("clebsch_gordan: negative j");

    auto near_int = [](double x) { return std::abs(x - std::lround(x)) < 1e-9; };
    if (!near_int(l.j1 + l.m1) || !near_int(l.j2 + l.m2) || !near_int(l.J + l.M))
        throw DomainError("clebsch_gordan: j+m not integer");
    if (std::abs(l.m1) > l.j1 + 1e-9 || std::abs(l.m2) > l.j2 + 1e-9 ||
        std::abs(l.M) > l.J + 1e-9)
        throw DomainError("clebsch_gordan: |m| > j");

    // selection rules
    if (std::abs(l.m1 + l.m2 - l.M) > 1e-9) return 0.0;
    if (l.J + 1e-9 < std::abs(l.j1 - l.j2) || l.J > l.j1 + l.j2 + 1e-9) return 0.0;
    if (!near_int(l.j1 + l.j2 + l.J)) return 0.0;

    // integer factorial arguments of the Racah form
    const long a1 = std::lround(l.j1 + l.j2 - l.J);
    const long a2 = std::lround(l.j1 - l.j2 + l.J);
    const long a3 = std::lround(-l.j1 + l.j2 + l.J);
    const long a4 = std::lround(l.j1 + l.j2 + l.J + 1);
    const long b1 = std::lround(l.j1 + l.m1);
    const long b2 = std::lround(l.j1 - l.m1);
    const long b3 = std::lround(l.j2 + l.m2);
    const long b4 = std::lround(l.j2 - l.m2);
    const long b5 = std::lround(l.J + l.M);
    const long b6 = std::lround(l.J - l.M);

    const double ln_pref =
        0.5 * (std::log(2.0 * l.J + 1.0) + ln_fact(a1) + ln_fact(a2) + ln_fact(a3) -
               ln_fact(a4) + ln_fact(b1) + ln_fact(b2) + ln_fact(b3) + ln_fact(b4) +
               ln_fact(b5) + ln_fact(b6));

    const long k_lo = std::max({0L, std::lround(l.j2 - l.J - l.m1),
                                std::lround(l.j1 + l.m2 - l.J)});
    const long k_hi = std::min({a1, b2, b3});
    if (k_lo > k_hi) return 0.0;

    // sum (-1)^k exp(L_k) with the largest term factored out
    std::vector<double> lnterm(k_hi - k_lo + 1);
    double ln_max = -1e308;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double L = -(ln_fact(k) + ln_fact(a1 - k) + ln_fact(b2 - k) +
                           ln_fact(b3 - k) + ln_fact(std::lround(l.J - l.j2 + l.m1) + k) +
                           ln_fact(std::lround(l.J - l.j1 - l.m2) + k));
        lnterm[k - k_lo] = L;
        ln_max = std::max(ln_max, L);
    }
    double s = 0.0;
    for (long k = k_lo; k <= k_hi; ++k) {
        const double term = std::exp(lnterm[k - k_lo] - ln_max);
        s += (k % 2 == 0) ? term : -term;
    }
    if (s == 0.0) return 0.0;
    return (s > 0 ? 1.0 : -1.0) * std::exp(ln_pref + ln_max + std::log(std::abs(s)));
}

}  // namespace sqres
