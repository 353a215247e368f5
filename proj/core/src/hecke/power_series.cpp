#include "symsq/hecke/power_series.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace symsq::hecke {

namespace {

constexpr std::size_t kSchoolbookCutoff = 384;

Series mul_schoolbook(const Series& a, const Series& b, std::size_t n_terms) {
    Series out(n_terms, mpz_class(0));
    std::size_t alen = std::min(a.size(), n_terms);
    for (std::size_t i = 0; i < alen; ++i) {
        if (a[i] == 0) continue;
        std::size_t blen = std::min(b.size(), n_terms - i);
        for (std::size_t j = 0; j < blen; ++j) {
            if (b[j] == 0) continue;
            // out[i+j] += a[i]*b[j]
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return out;
}

std::size_t max_bits(const Series& s) {
    std::size_t bits = 1;
    for (const auto& c : s)
        bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    return bits;
}

// Evaluate the polynomial at 2^slot_bits. Signed coefficients are handled by
// packing magnitudes of the positive and negative parts separately.
mpz_class pack(const Series& s, std::size_t len, std::size_t slot_bits) {
    const std::size_t slot_limbs = slot_bits / GMP_NUMB_BITS;
    std::vector<mp_limb_t> pos(len * slot_limbs, 0), neg(len * slot_limbs, 0);
    bool any_neg = false;
    for (std::size_t i = 0; i < std::min(len, s.size()); ++i) {
        const mpz_class& c = s[i];
        int sign = mpz_sgn(c.get_mpz_t());
        if (sign == 0) continue;
        mp_limb_t* dst = (sign > 0 ? pos.data() : neg.data()) + i * slot_limbs;
        if (sign < 0) any_neg = true;
        std::size_t limbs = mpz_size(c.get_mpz_t());
        const mp_limb_t* src = mpz_limbs_read(c.get_mpz_t());
        std::memcpy(dst, src, limbs * sizeof(mp_limb_t));
    }
    mpz_class packed_pos, packed_neg;
    mpz_import(packed_pos.get_mpz_t(), pos.size(), -1, sizeof(mp_limb_t), 0,
               8 * sizeof(mp_limb_t) - GMP_NUMB_BITS, pos.data());
    if (!any_neg) return packed_pos;
    mpz_import(packed_neg.get_mpz_t(), neg.size(), -1, sizeof(mp_limb_t), 0,
               8 * sizeof(mp_limb_t) - GMP_NUMB_BITS, neg.data());
    return packed_pos - packed_neg;
}

} // namespace

Series mul(const Series& a, const Series& b, std::size_t n_terms) {
    if (n_terms == 0) return {};
    if (a.empty() || b.empty()) return Series(n_terms, mpz_class(0));
    if (n_terms <= kSchoolbookCutoff) return mul_schoolbook(a, b, n_terms);

    std::size_t alen = std::min(a.size(), n_terms);
    std::size_t blen = std::min(b.size(), n_terms);

    // slot must hold any product coefficient: |c| < 2^(ba+bb+log2(len)+1),
    // plus one sign bit for the balanced-digit representation
    std::size_t ba = max_bits(a), bb = max_bits(b);
    std::size_t carry_bits = 1;
    while ((std::size_t(1) << carry_bits) < std::min(alen, blen)) ++carry_bits;
    std::size_t slot = ba + bb + carry_bits + 3;
    slot = ((slot + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS) * GMP_NUMB_BITS;

    mpz_class pa = pack(a, alen, slot);
    mpz_class pb = pack(b, blen, slot);
    mpz_class prod = pa * pb;

    // bias every digit by 2^(slot-1) so the base-2^slot digits are the
    // balanced coefficients shifted into [0, 2^slot)
    std::size_t digits = alen + blen + 1;
    mpz_class bias = 0;
    mpz_setbit(bias.get_mpz_t(), slot * digits); // preallocate
    mpz_clrbit(bias.get_mpz_t(), slot * digits);
    for (std::size_t i = 0; i < digits; ++i)
        mpz_setbit(bias.get_mpz_t(), slot * i + slot - 1);
    prod += bias;
    if (mpz_sgn(prod.get_mpz_t()) < 0)
        throw std::logic_error("kronecker mul: bias failed to cover product");

    const std::size_t slot_limbs = slot / GMP_NUMB_BITS;
    std::vector<mp_limb_t> words(digits * slot_limbs, 0);
    std::size_t nwords = mpz_size(prod.get_mpz_t());
    const mp_limb_t* limbs = mpz_limbs_read(prod.get_mpz_t());
    std::copy(limbs, limbs + std::min(nwords, words.size()), words.begin());

    Series out(n_terms, mpz_class(0));
    mpz_class half = mpz_class(1) << (slot - 1);
    mpz_class digit;
    for (std::size_t i = 0; i < n_terms && i < digits; ++i) {
        mpz_import(digit.get_mpz_t(), slot_limbs, -1, sizeof(mp_limb_t), 0,
                   8 * sizeof(mp_limb_t) - GMP_NUMB_BITS, words.data() + i * slot_limbs);
        out[i] = digit - half;
    }
    return out;
}

Series pow(const Series& a, unsigned e, std::size_t n_terms) {
    Series result(1, mpz_class(1));
    Series base = a;
    while (e > 0) {
        if (e & 1u) result = mul(result, base, n_terms);
        e >>= 1u;
        if (e > 0) base = mul(base, base, n_terms);
    }
    result.resize(n_terms, mpz_class(0));
    return result;
}

Series eisenstein_e4(std::size_t n_terms) {
    Series s(n_terms, mpz_class(0));
    if (n_terms == 0) return s;
    s[0] = 1;
    for (std::size_t d = 1; d < n_terms; ++d) {
        mpz_class dk = mpz_class(d) * d * d * 240;
        for (std::size_t m = d; m < n_terms; m += d) s[m] += dk;
    }
    return s;
}

Series eisenstein_e6(std::size_t n_terms) {
    Series s(n_terms, mpz_class(0));
    if (n_terms == 0) return s;
    s[0] = 1;
    for (std::size_t d = 1; d < n_terms; ++d) {
        mpz_class d2 = mpz_class(d) * d;
        mpz_class dk = d2 * d2 * mpz_class(d) * (-504);
        for (std::size_t m = d; m < n_terms; m += d) s[m] += dk;
    }
    return s;
}

Series delta_series(std::size_t n_terms) {
    if (n_terms == 0) return {};
    // prod (1-q^n)^3 = sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
    Series cube(n_terms, mpz_class(0));
    for (std::size_t k = 0;; ++k) {
        std::size_t idx = k * (k + 1) / 2;
        if (idx >= n_terms) break;
        cube[idx] = (k % 2 == 0) ? mpz_class(2 * k + 1) : mpz_class(-(long)(2 * k + 1));
    }
    Series p6 = mul(cube, cube, n_terms);
    Series p12 = mul(p6, p6, n_terms);
    Series p24 = mul(p12, p12, n_terms);
    Series delta(n_terms, mpz_class(0));
    for (std::size_t i = 1; i < n_terms; ++i) delta[i] = p24[i - 1];
    return delta;
}

} // namespace symsq::hecke
