#include "bilav/expsum.hpp"

namespace bilav {

u64 g_value(const Curve& curve, u64 z1, u64 z2, u64 z3, u64 z4) {
    const PrimeField& f = curve.field();
    const auto& e1 = curve.eval1();
    return f.sub(f.add(e1[z1], e1[z4]), f.add(e1[z2], e1[z3]));
}

u64 f_value(const Curve& curve, const ConstrainedSumSpec& spec, u64 z1, u64 z2, u64 z3,
            u64 z4) {
    const PrimeField& f = curve.field();
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    const u64 y = spec.y % f.p();
    const u64 yp = spec.yp % f.p();
    const u64 h = spec.h % f.p();
    u64 acc = f.mul(y, e2[z1]);
    acc = f.add(acc, f.mul(h, e1[z2]));
    acc = f.sub(acc, f.mul(f.add(y, h), e2[z2]));
    acc = f.sub(acc, f.mul(yp, e2[z3]));
    acc = f.sub(acc, f.mul(h, e1[z4]));
    acc = f.add(acc, f.mul(f.add(yp, h), e2[z4]));
    return acc;
}

cplx constrained_exp_sum(const Curve& curve, const ConstrainedSumSpec& spec) {
    const PrimeField& f = curve.field();
    const u64 p = f.p();
    const auto& e1 = curve.eval1();
    const auto& e2 = curve.eval2();
    const auto& dom = curve.domain();
    const auto& pre = curve.phi1_preimages();

    const u64 y = spec.y % p;
    const u64 yp = spec.yp % p;
    const u64 h = spec.h % p;

    // per-variable phase contributions
    std::vector<u64> t1(p, 0), t2(p, 0), t3(p, 0), t4(p, 0);
    for (u64 z : dom) {
        t1[z] = f.mul(y, e2[z]);
        t2[z] = f.sub(f.mul(h, e1[z]), f.mul(f.add(y, h), e2[z]));
        t3[z] = f.neg(f.mul(yp, e2[z]));
        t4[z] = f.sub(f.mul(f.add(yp, h), e2[z]), f.mul(h, e1[z]));
    }

    std::vector<u64> counts(p, 0);
    for (u64 z2 : dom) {
        const u64 a2 = e1[z2];
        const u64 ph2 = t2[z2];
        for (u64 z3 : dom) {
            const u64 a23 = f.add(a2, e1[z3]);
            u64 ph23 = ph2 + t3[z3];
            if (ph23 >= p) ph23 -= p;
            for (u64 z1 : dom) {
                const u64 target = f.sub(a23, e1[z1]); // phi1(z4) required
                u64 ph123 = ph23 + t1[z1];
                if (ph123 >= p) ph123 -= p;
                for (u64 z4 : pre[target]) {
                    u64 ph = ph123 + t4[z4];
                    if (ph >= p) ph -= p;
                    ++counts[ph];
                }
            }
        }
    }

    const auto& tab = f.char_table();
    cplx acc(0.0, 0.0);
    for (u64 k = 0; k < p; ++k) {
        if (counts[k]) acc += static_cast<double>(counts[k]) * tab[k];
    }
    return acc;
}

} // namespace bilav
