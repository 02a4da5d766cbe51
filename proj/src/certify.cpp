#include "twopar/certify.hpp"

#include "twopar/dynamics.hpp"
#include "twopar/errors.hpp"
#include "twopar/group.hpp"

#include <cmath>

namespace twopar {

const char* to_string(CertificateKind k) {
    switch (k) {
        case CertificateKind::dust_or_nonfree: return "DustOrNonfree";
        case CertificateKind::nonfree: return "Nonfree";
        case CertificateKind::dust_and_nonfree: return "DustAndNonfree";
    }
    return "?";
}

const char* to_string(TargetTag t) {
    switch (t) {
        case TargetTag::plus_i: return "+i";
        case TargetTag::minus_i: return "-i";
        case TargetTag::plus_two: return "+2";
        case TargetTag::minus_two: return "-2";
        case TargetTag::catalog: return "catalog";
        case TargetTag::external: return "external";
    }
    return "?";
}

namespace {

bool matches(const ComplexValue& z, const ComplexValue& target, double tol, bool& exact_hit) {
    if (z.is_exact() && target.is_exact()) {
        exact_hit = true;
        return z == target;
    }
    exact_hit = false;
    return z.near(target, tol);
}

bool is_parabolic_trace(const MoebiusMatrix& m, bool exact, double tol) {
    ComplexValue tr = trace(m);
    if (exact && tr.is_exact()) {
        const GaussianRational& g = tr.rat();
        return g == GaussianRational{2, 0} || g == GaussianRational{-2, 0};
    }
    std::complex<double> t = tr.cd();
    return std::min(std::abs(t - std::complex<double>(2, 0)),
                    std::abs(t + std::complex<double>(2, 0))) <= tol;
}

// Check the certificate at the matrix level: every witness parabolic, the
// commuting pair (when present) commutes, and f^depth(lambda) hits the target.
bool verify_certificate(const Certificate& cert, double tol) {
    MarkedGroup g = make_group(cert.lambda);
    bool exact = cert.lambda.is_exact();
    std::vector<MoebiusMatrix> ws;
    for (const auto& w : cert.witness_words) {
        MoebiusMatrix m = evaluate_word(g, w);
        if (!is_parabolic_trace(m, exact, 1e-9)) return false;
        ws.push_back(m);
    }
    if (cert.kind == CertificateKind::dust_and_nonfree && ws.size() >= 2) {
        MoebiusMatrix lhs = compose(ws[0], ws[1]);
        MoebiusMatrix rhs = compose(ws[1], ws[0]);
        bool commute = exact ? matrices_equal(lhs, rhs) : matrices_near(lhs, rhs, 1e-9);
        if (!commute) return false;
    }
    ComplexValue it = f_iter(cert.lambda, cert.depth);
    if (cert.exact) return it == cert.target_value;
    return it.near(cert.target_value, tol);
}

} // namespace

std::optional<Certificate> certify(const ComplexValue& lambda, int max_depth,
                                   const std::vector<ExternalTarget>& external, double tol) {
    if (lambda.is_zero()) throw ZeroLambda();

    const ComplexValue plus_i = ComplexValue::exact(0, 1);
    const ComplexValue minus_i = ComplexValue::exact(0, -1);
    const ComplexValue plus_two = ComplexValue::exact(2);
    const ComplexValue minus_two = ComplexValue::exact(-2);

    ComplexValue z = lambda;
    for (int n = 0; n <= max_depth; ++n) {
        bool exact_hit = false;
        Certificate cert;
        cert.lambda = lambda;
        cert.depth = n;
        cert.tolerance = tol;

        if (n >= 1) {
            // f^n(lambda) = +/-i: both parabolic dust and non-free, with a
            // commuting pair lifted through the subgroup tower.  The pair at
            // the level below depends on the sign of Re f^{n-1}(lambda): the
            // mirror words apply when the tower is built on T^-1.
            for (auto [tag, target] : {std::pair{TargetTag::plus_i, plus_i},
                                       std::pair{TargetTag::minus_i, minus_i}}) {
                if (matches(z, target, tol, exact_hit)) {
                    ComplexValue below = f_iter(lambda, n - 1);
                    const char* pair = below.re() > 0 ? kPairWordDirect : kPairWordMirror;
                    cert.kind = CertificateKind::dust_and_nonfree;
                    cert.target_tag = tag;
                    cert.target_value = target;
                    cert.exact = exact_hit;
                    cert.witness_words = {tower_word(n - 1, n + 2), lift_word(pair, n - 1)};
                    cert.verified = verify_certificate(cert, tol);
                    return cert;
                }
            }
            // f^n(lambda) = +/-2: dust or non-free; witness is the extra
            // parabolic S T^-1 (resp. S T) lifted n levels.
            if (matches(z, plus_two, tol, exact_hit)) {
                cert.kind = CertificateKind::dust_or_nonfree;
                cert.target_tag = TargetTag::plus_two;
                cert.target_value = plus_two;
                cert.exact = exact_hit;
                cert.witness_words = {tower_word(n, n + 2), "S" + inverse_word(tower_word(n, n + 2))};
                cert.verified = verify_certificate(cert, tol);
                return cert;
            }
            if (matches(z, minus_two, tol, exact_hit)) {
                cert.kind = CertificateKind::dust_or_nonfree;
                cert.target_tag = TargetTag::minus_two;
                cert.target_value = minus_two;
                cert.exact = exact_hit;
                cert.witness_words = {tower_word(n, n + 2), "S" + tower_word(n, n + 2)};
                cert.verified = verify_certificate(cert, tol);
                return cert;
            }
        }

        for (const auto& ext : external) {
            if (matches(z, ext.value, tol, exact_hit)) {
                cert.kind = CertificateKind::dust_or_nonfree;
                cert.target_tag = TargetTag::external;
                cert.target_value = ext.value;
                cert.external_label = ext.label;
                cert.exact = exact_hit;
                cert.witness_words = {tower_word(n, n + 2)};
                cert.verified = verify_certificate(cert, tol);
                return cert;
            }
        }

        LookupOptions opt;
        opt.tol = tol;
        if (auto hit = catalog_lookup(z, opt)) {
            cert.kind = CertificateKind::nonfree;
            cert.target_tag = TargetTag::catalog;
            cert.target_value = z;
            cert.catalog_entry = hit->primary;
            cert.exact = z.is_exact() && hit->primary.exact_value;
            cert.witness_words = {tower_word(n, n + 2)};
            cert.verified = verify_certificate(cert, tol);
            return cert;
        }

        z = f_map(z);
    }
    return std::nullopt;
}

} // namespace twopar
