#pragma once

#include "nevwb/sparse_poly.hpp"

namespace nevwb {

// Z^s R = P1 F + P2 G and U^s R = Q1 F + Q2 G with R free of Z and U.
struct NullstellensatzCertificate {
    int s = 0;
    SparsePoly R, P1, P2, Q1, Q2;
};

// F, G homogeneous in (Z, U) = (z_var, u_var); other variables form the coefficient ring.
// Throws CoprimalityError when the resultant vanishes.
NullstellensatzCertificate nullstellensatz_certificate(const SparsePoly& F, const SparsePoly& G, std::size_t z_var,
                                                       std::size_t u_var);

bool verify_certificate(const NullstellensatzCertificate& c, const SparsePoly& F, const SparsePoly& G,
                        std::size_t z_var, std::size_t u_var);

}  // namespace nevwb
