#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "rational.hpp"
#include "ring.hpp"

namespace tevelev {

/// prod_i m_i^(a m_i + b), the multi-index power notation for degree vectors.
inline Rational mvec_pow(const std::vector<int>& m, long a, long b) {
    Rational out = 1;
    for (int mi : m) out *= rpow(Rational(mi), a * mi + b);
    return out;
}

/// prod_i (m_i + shift)!
inline Integer mvec_factorial(const std::vector<int>& m, int shift = 0) {
    Integer out = 1;
    for (int mi : m) out *= factorial(mi + shift);
    return out;
}

/// Q[H, q^{+-1}] / (H^{r+1} - K q H^s) in the basis H^{*0..r}. Covers P^r
/// (K = 1, s = 0) and the restricted ring of a complete intersection
/// (K = m^m, s = |m| - L).
class PowerRing : public Ring {
public:
    explicit PowerRing(const RingDescriptor& d) : Ring(d) {
        if (d.kind == RingKind::Grassmannian) throw InvalidArgument("power basis ring needs P^r or a complete intersection");
        r_ = d.dim_r;
        K_ = mvec_pow(d.m_vector, 1, 0);
        s_ = d.degree_sum() - d.L;
        std::vector<BasisLabel> labels;
        for (int i = 0; i <= r_; ++i) labels.emplace_back(PowerIndex{i});
        set_basis(labels);
        for (int i = 0; i <= r_; ++i)
            for (int j = 0; j <= r_; ++j) set_product(static_cast<std::size_t>(i), static_cast<std::size_t>(j), reduce(i + j));
    }

    int r() const { return r_; }
    const Rational& relation_constant() const { return K_; }
    int relation_shift() const { return s_; }

    int label_degree(const BasisLabel& l) const override { return 2 * std::get<PowerIndex>(l).i; }
    BasisLabel unit_label() const override { return PowerIndex{0}; }
    BasisLabel top_label() const override { return PowerIndex{r_}; }
    std::string label_name(const BasisLabel& l) const override {
        int i = std::get<PowerIndex>(l).i;
        if (i == 0) return "1";
        if (i == 1) return "H";
        return "H^" + std::to_string(i);
    }

private:
    /// H^{*k} for any k >= 0 in the basis.
    Terms reduce(int k) const {
        Rational c = 1;
        long qp = 0;
        while (k > r_) {
            k = s_ + k - r_ - 1;
            c *= K_;
            ++qp;
        }
        Terms t;
        t.emplace(PowerIndex{k}, LaurentPoly::monomial(qp, c));
        return t;
    }

    int r_ = 0;
    Rational K_ = 1;
    int s_ = 0;
};

using PowerRingPtr = std::shared_ptr<const PowerRing>;

inline PowerRingPtr power_ring(const RingDescriptor& d) {
    static std::mutex mu;
    static std::map<std::string, PowerRingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[d.name()];
    if (!slot) slot = std::make_shared<const PowerRing>(d);
    return slot;
}

/// H^{*k} as an element.
inline QHElement h_power(const PowerRingPtr& R, int k, long qpow = 0, const Rational& c = 1) {
    QHElement H = QHElement::basis(R, PowerIndex{1});
    if (k <= R->r()) return QHElement::basis(R, PowerIndex{k}, qpow, c);
    return (pow(H, static_cast<unsigned long>(k)) * c).q_shift(qpow);
}

} // namespace tevelev
