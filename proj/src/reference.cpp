#include "asai/reference.hpp"

#include <stdexcept>

namespace asai::reference {

namespace {

QuadPair qp_add(const QuadPair& p, const QuadPair& q) {
    return {p.x + q.x, p.y + q.y};
}

QuadPair qp_sub(const QuadPair& p, const QuadPair& q) {
    return {p.x - q.x, p.y - q.y};
}

QuadPair qp_neg(const QuadPair& p) {
    return {-p.x, -p.y};
}

// (x1 + y1 t)(x2 + y2 t) with t^2 = u2 t + v2
QuadPair qp_mul(const BiQuadCtx& ctx, const QuadPair& p, const QuadPair& q) {
    Scalar yy = p.y * q.y;
    return {p.x * q.x + ctx.v2 * yy, p.x * q.y + p.y * q.x + ctx.u2 * yy};
}

bool qp_zero(const QuadPair& p) {
    return p.x.is_zero() && p.y.is_zero();
}

} // namespace

BiQuad bq_const(const Scalar& c) {
    return {{c, Scalar(0)}, {Scalar(0), Scalar(0)}};
}

BiQuad bq_theta1() {
    return {{Scalar(0), Scalar(0)}, {Scalar(1), Scalar(0)}};
}

BiQuad bq_theta2() {
    return {{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}};
}

BiQuad bq_add(const BiQuad& p, const BiQuad& q) {
    return {qp_add(p.a, q.a), qp_add(p.b, q.b)};
}

BiQuad bq_sub(const BiQuad& p, const BiQuad& q) {
    return {qp_sub(p.a, q.a), qp_sub(p.b, q.b)};
}

BiQuad bq_neg(const BiQuad& p) {
    return {qp_neg(p.a), qp_neg(p.b)};
}

BiQuad bq_mul(const BiQuadCtx& ctx, const BiQuad& p, const BiQuad& q) {
    // (A + B t1)(C + D t1) = AC + v1 BD + (AD + BC + u1 BD) t1
    QuadPair ac = qp_mul(ctx, p.a, q.a);
    QuadPair ad = qp_mul(ctx, p.a, q.b);
    QuadPair bc = qp_mul(ctx, p.b, q.a);
    QuadPair bd = qp_mul(ctx, p.b, q.b);
    QuadPair u1{ctx.u1, Scalar(0)};
    QuadPair v1{ctx.v1, Scalar(0)};
    return {qp_add(ac, qp_mul(ctx, v1, bd)),
            qp_add(qp_add(ad, bc), qp_mul(ctx, u1, bd))};
}

bool bq_is_base(const BiQuad& p) {
    return p.a.y.is_zero() && qp_zero(p.b);
}

std::vector<BiQuad> expand_monic_from_roots(const BiQuadCtx& ctx,
                                            const std::vector<BiQuad>& roots) {
    std::vector<BiQuad> coeffs{bq_const(Scalar(1))};
    for (const BiQuad& root : roots) {
        std::vector<BiQuad> next(coeffs.size() + 1, bq_const(Scalar(0)));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] = bq_add(next[i + 1], coeffs[i]);
            next[i] = bq_sub(next[i], bq_mul(ctx, root, coeffs[i]));
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

namespace {

std::array<Scalar, 5> base_coefficients(const std::vector<BiQuad>& coeffs) {
    if (coeffs.size() != 5)
        throw std::logic_error("expected a quartic");
    std::array<Scalar, 5> out;
    for (int i = 0; i < 5; ++i) {
        if (!bq_is_base(coeffs[i]))
            throw std::logic_error("root-dependence survived the expansion");
        out[i] = coeffs[i].a.x;
    }
    return out;
}

} // namespace

std::array<Scalar, 5> split_tensor_charpoly(const Scalar& a, const Scalar& s,
                                            const Scalar& a2, const Scalar& s2, long ell) {
    Scalar e = Scalar(Rational(ell)) * s;
    Scalar e2 = Scalar(Rational(ell)) * s2;
    BiQuadCtx ctx{a, -e, a2, -e2};
    BiQuad alpha = bq_theta1();
    BiQuad beta = bq_sub(bq_const(a), alpha);
    BiQuad alpha2 = bq_theta2();
    BiQuad beta2 = bq_sub(bq_const(a2), alpha2);
    std::vector<BiQuad> roots{
        bq_mul(ctx, alpha, alpha2),
        bq_mul(ctx, alpha, beta2),
        bq_mul(ctx, beta, alpha2),
        bq_mul(ctx, beta, beta2),
    };
    return base_coefficients(expand_monic_from_roots(ctx, roots));
}

std::array<Scalar, 5> inert_tensor_charpoly(const Scalar& a, const Scalar& s, long ell,
                                            TransferSign sign) {
    Scalar e = Scalar(rational_pow(Rational(ell), 2)) * s;
    BiQuadCtx ctx{a, -e, Scalar(0), e}; // theta2 = sqrt(alpha beta), theta2^2 = e
    BiQuad alpha = bq_theta1();
    BiQuad beta = bq_sub(bq_const(a), alpha);
    BiQuad root = bq_theta2();
    std::vector<BiQuad> roots{alpha, root, bq_neg(root), beta};
    if (sign == TransferSign::Minus)
        for (auto& r : roots)
            r = bq_neg(r);
    return base_coefficients(expand_monic_from_roots(ctx, roots));
}

Scalar power_sum_h(const Scalar& a, const Scalar& e, long r) {
    if (r < 0)
        throw std::invalid_argument("negative power");
    BiQuadCtx ctx{a, -e, Scalar(0), Scalar(0)};
    BiQuad alpha = bq_theta1();
    BiQuad beta = bq_sub(bq_const(a), alpha);
    std::vector<BiQuad> alpha_pow{bq_const(Scalar(1))};
    std::vector<BiQuad> beta_pow{bq_const(Scalar(1))};
    for (long i = 1; i <= r; ++i) {
        alpha_pow.push_back(bq_mul(ctx, alpha_pow.back(), alpha));
        beta_pow.push_back(bq_mul(ctx, beta_pow.back(), beta));
    }
    BiQuad total = bq_const(Scalar(0));
    for (long i = 0; i <= r; ++i)
        total = bq_add(total, bq_mul(ctx, alpha_pow[i], beta_pow[r - i]));
    if (!bq_is_base(total))
        throw std::logic_error("h_r is not symmetric"); // cannot happen
    return total.a.x;
}

std::array<Scalar, 4> inert_chi_tilde(const Rational& alpha, const Rational& beta, long p,
                                      TransferSign sign, bool root_sign) {
    Rational product = alpha * beta;
    if (product <= 0)
        throw std::invalid_argument("alpha*beta must be a positive square");
    Integer num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), product.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), product.get_den().get_mpz_t());
    Rational root = make_rational(num_root, den_root);
    if (root * root != product)
        throw std::invalid_argument("alpha*beta is not a rational square");
    if (!root_sign)
        root = -root;
    Rational eps(sign == TransferSign::Plus ? 1 : -1);
    // canonical order: chi(u_1), ..., chi(u_4)
    Rational chi1 = eps * alpha;
    Rational chi2 = -eps * root / p;
    Rational chi3 = eps * root / (Rational(p) * p);
    Rational chi4 = eps * beta / (Rational(p) * p * p);
    return {Scalar(chi1), Scalar(chi2 * chi2), Scalar(chi3 / chi2), Scalar(chi4)};
}

} // namespace asai::reference
