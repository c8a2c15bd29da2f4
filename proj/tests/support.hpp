#pragma once

#include <random>

#include "tevelev/grassmann.hpp"
#include "tevelev/ring.hpp"

namespace tevelev::test {

/// Sparse random element of small coefficients: a few basis labels with
/// q powers in [-1, 1].
inline QHElement random_element(const RingPtr& R, std::mt19937& rng, int terms = 3) {
    std::uniform_int_distribution<std::size_t> pick(0, R->basis_size() - 1);
    std::uniform_int_distribution<int> coef(-4, 4), qp(-1, 1);
    QHElement x(R);
    for (int i = 0; i < terms; ++i)
        x.add_term(R->basis()[pick(rng)], LaurentPoly::monomial(qp(rng), make_rational(coef(rng), 1 + (i % 2))));
    return x;
}

inline QHElement schubert_q(const GrassmannianPtr& R, const Partition& p, long qpow, const Rational& c = 1) {
    return QHElement::basis(R, p, qpow, c);
}

} // namespace tevelev::test
